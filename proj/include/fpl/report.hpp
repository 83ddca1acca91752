#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fpl/fusion.hpp"
#include "fpl/grassmannian.hpp"

namespace fpl::report {

using Value = std::variant<bool, std::int64_t, double, std::string>;

struct Entry {
    std::string key;
    Value value;

    bool operator==(const Entry&) const = default;
};

/// An ordered list of key/value pairs; the order is the output order.
struct Record {
    std::string name;
    std::vector<Entry> entries;

    Record& add(std::string key, Value value);
    const Value* find(std::string_view key) const;
    bool operator==(const Record&) const = default;
};

enum class Format { Text, Structured };

Format parse_format(std::string_view text);

/// Doubles print with 9 decimals; inf and nan as "inf" / "-inf" / "nan".
std::string format_value(const Value& value);

/// Structured: one line of space-separated key=value pairs in record order.
/// Text: a header line with the record name and one aligned row per entry.
std::string emit(const Record& record, Format format);

/// Inverse of the structured format. Values parse as bool, then integer,
/// then double, else string.
Record parse_structured(std::string_view line, std::string name = {});

Record to_record(const PotentialReport& report);
Record to_record(const SearchResult& result);
Record to_record(const ExclusivityEvidence& evidence);
Record to_record(const HarnessSummary& summary);
Record to_record(const StructureReport& report);

}  // namespace fpl::report
