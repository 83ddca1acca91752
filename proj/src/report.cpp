#include "fpl/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace fpl::report {

Record& Record::add(std::string key, Value value) {
    entries.push_back(Entry{std::move(key), std::move(value)});
    return *this;
}

const Value* Record::find(std::string_view key) const {
    for (const auto& e : entries) {
        if (e.key == key) return &e.value;
    }
    return nullptr;
}

Format parse_format(std::string_view text) {
    if (text == "text") return Format::Text;
    if (text == "structured") return Format::Structured;
    throw Error(ErrorCode::ParseError, "unknown format '" + std::string(text) + "' (expected text or structured)");
}

std::string format_value(const Value& value) {
    struct Visitor {
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const {
            if (std::isnan(d)) return "nan";
            if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.9f", d);
            std::string s(buf);
            if (s == "-0.000000000") s = "0.000000000";
            return s;
        }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, value);
}

std::string emit(const Record& record, Format format) {
    std::ostringstream out;
    if (format == Format::Structured) {
        bool first = true;
        for (const auto& e : record.entries) {
            if (!first) out << ' ';
            first = false;
            out << e.key << '=' << format_value(e.value);
        }
        out << '\n';
        return out.str();
    }
    std::size_t width = 0;
    for (const auto& e : record.entries) width = std::max(width, e.key.size());
    if (!record.name.empty()) out << '[' << record.name << "]\n";
    for (const auto& e : record.entries) {
        out << "  " << e.key << std::string(width - e.key.size() + 2, ' ') << format_value(e.value) << '\n';
    }
    return out.str();
}

namespace {

Value parse_value(std::string_view text) {
    if (text == "true") return true;
    if (text == "false") return false;
    std::int64_t i = 0;
    auto [iend, iec] = std::from_chars(text.data(), text.data() + text.size(), i);
    if (iec == std::errc() && iend == text.data() + text.size()) return i;
    if (text == "inf") return std::numeric_limits<double>::infinity();
    if (text == "-inf") return -std::numeric_limits<double>::infinity();
    if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
    double d = 0.0;
    auto [dend, dec] = std::from_chars(text.data(), text.data() + text.size(), d);
    if (dec == std::errc() && dend == text.data() + text.size()) return d;
    return std::string(text);
}

}  // namespace

Record parse_structured(std::string_view line, std::string name) {
    Record record;
    record.name = std::move(name);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && line[pos] == ' ') ++pos;
        if (pos >= line.size()) break;
        std::size_t end = line.find(' ', pos);
        if (end == std::string_view::npos) end = line.size();
        const std::string_view token = line.substr(pos, end - pos);
        const std::size_t eq = token.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ParseError, "structured token '" + std::string(token) + "' has no '='");
        }
        record.add(std::string(token.substr(0, eq)), parse_value(token.substr(eq + 1)));
        pos = end;
    }
    return record;
}

Record to_record(const PotentialReport& report) {
    Record r{std::string(to_string(report.functional)), {}};
    r.add("functional", std::string(to_string(report.functional)))
        .add("value", report.value)
        .add("bound", report.bound)
        .add("meets_bound", report.meets_bound)
        .add("equality_within", report.equality_within);
    return r;
}

Record to_record(const SearchResult& result) {
    Record r{"grassmannian", {}};
    r.add("mu_min", result.mu_min)
        .add("exclusive", result.exclusive_within_tol)
        .add("family_dim", static_cast<std::int64_t>(result.family_dim))
        .add("canonical_mu", result.canonical_mu)
        .add("candidates", static_cast<std::int64_t>(result.candidate_minimizers.size()));
    return r;
}

Record to_record(const ExclusivityEvidence& evidence) {
    Record r{"exclusivity", {}};
    r.add("exclusive", evidence.exclusive)
        .add("face_diameter", evidence.face_diameter)
        .add("flat_directions", static_cast<std::int64_t>(evidence.flat_directions))
        .add("perturbations_increase", evidence.perturbations_increase)
        .add("minimizers", static_cast<std::int64_t>(evidence.minimizers.size()));
    return r;
}

Record to_record(const HarnessSummary& summary) {
    Record r{"harness", {}};
    r.add("n", static_cast<std::int64_t>(summary.n))
        .add("k", static_cast<std::int64_t>(summary.k))
        .add("trials", static_cast<std::int64_t>(summary.trials))
        .add("seed", static_cast<std::int64_t>(summary.seed))
        .add("violations", static_cast<std::int64_t>(summary.violations))
        .add("min_ratio", summary.min_ratio)
        .add("case_a_count", static_cast<std::int64_t>(summary.case_a_count));
    return r;
}

Record to_record(const StructureReport& report) {
    Record r{"structure", {}};
    r.add("applies", report.applies)
        .add("predicted_potential", report.predicted_potential)
        .add("measured_potential", report.measured_potential)
        .add("dual_is_self", report.dual_is_self);
    for (const auto& pair : report.pairs) {
        r.add("pair_" + std::to_string(pair.i) + "_" + std::to_string(pair.j), std::string(to_string(pair.relation)));
    }
    return r;
}

}  // namespace fpl::report
