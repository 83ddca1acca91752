#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "fpl/io.hpp"

namespace fpl::suite {

struct Row {
    std::string id;
    std::string op;
    bool passed = false;
    std::string detail;  // actual value, or the error that stopped the check
};

struct Outcome {
    std::vector<Row> rows;

    std::size_t failures() const;
    bool all_passed() const { return failures() == 0; }
};

/// Parses "a/b", "-a/b" or a decimal string. Throws ParseError.
double parse_number(const std::string& text);

/// Recursive comparison: numbers (or number strings) within tol * max(1, |e|),
/// booleans and other strings exactly, arrays elementwise, and objects on the
/// keys present in `expected`.
bool matches(const io::Json& expected, const io::Json& actual, double tol);

/// Evaluates one manifest check; file names resolve against `dir`.
io::Json evaluate(const io::Json& check, const std::filesystem::path& dir);

/// Runs every check in dir/suite.json.
Outcome run(const std::filesystem::path& dir);

void print_table(const Outcome& outcome, std::ostream& out);

}  // namespace fpl::suite
