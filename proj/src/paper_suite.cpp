#include "fpl/paper_suite.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "fpl/fusion.hpp"
#include "fpl/grassmannian.hpp"

namespace fpl::suite {

using io::Json;

std::size_t Outcome::failures() const {
    std::size_t count = 0;
    for (const auto& row : rows) count += row.passed ? 0 : 1;
    return count;
}

namespace {

bool parse_decimal(std::string_view text, double& out) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) return false;
    const char* begin = text.data();
    if (*begin == '+') ++begin;
    auto [end, ec] = std::from_chars(begin, text.data() + text.size(), out);
    return ec == std::errc() && end == text.data() + text.size();
}

bool try_number(const std::string& text, double& out) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text, out);
    double num = 0.0;
    double den = 0.0;
    if (!parse_decimal(std::string_view(text).substr(0, slash), num) ||
        !parse_decimal(std::string_view(text).substr(slash + 1), den) || den == 0.0) {
        return false;
    }
    out = num / den;
    return true;
}

bool numeric(const Json& v, double& out) {
    if (v.is_number()) {
        out = v.get<double>();
        return true;
    }
    return v.is_string() && try_number(v.get<std::string>(), out);
}

Json rows_of(const Matrix& m) {
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j) {
            if (std::abs(m(i, j).imag()) > 0.0) {
                row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
            } else {
                row.push_back(m(i, j).real());
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json report_json(const PotentialReport& r) {
    return Json{{"value", r.value},
                {"bound", r.bound},
                {"meets_bound", r.meets_bound},
                {"equality", r.attains_bound()},
                {"equality_within", r.equality_within}};
}

struct Inputs {
    const Json& check;
    const std::filesystem::path& dir;

    std::filesystem::path path(const char* key) const {
        if (!check.contains(key)) throw Error(ErrorCode::ParseError, std::string("check needs '") + key + "'");
        return dir / check.at(key).get<std::string>();
    }
    Frame frame() const { return io::read_frame(path("frame")); }
    Frame other() const { return io::read_frame(path("other")); }
    FusionFrame fusion() const { return io::read_fusion(path("fusion")).fusion; }
    double number(const char* key) const {
        if (!check.contains(key)) throw Error(ErrorCode::ParseError, std::string("check needs '") + key + "'");
        return check.at(key).get<double>();
    }
    Index index(const char* key) const { return check.at(key).get<Index>(); }
    CrossGramian gramian() const { return cross_gramian(frame(), other()); }
};

Json evaluate_frame_op(const std::string& op, const Inputs& in) {
    if (op == "frame_valid") {
        static_cast<void>(in.frame());
        return true;
    }
    if (op == "frame_operator") return rows_of(in.frame().frame_operator().S);
    if (op == "is_tight") return is_tight(in.frame());
    if (op == "canonical_dual") return rows_of(canonical_dual(in.frame()).synthesis());
    if (op == "is_dual") return is_dual(in.frame(), in.other());
    if (op == "cross_gramian") return rows_of(in.gramian().entries);
    if (op == "frame_potential") return frame_potential(in.frame());
    if (op == "frame_potential_bound") return report_json(frame_potential_bound(in.frame()));
    if (op == "cross_frame_potential") return cross_frame_potential(in.frame(), in.other());
    if (op == "cross_potential_bound") return report_json(cross_potential_bound(in.frame(), in.other()));
    if (op == "diagonal_sum") return report_json(gramian_diagonal_sum(in.gramian()));
    if (op == "mu") return max_offdiagonal(in.gramian());
    if (op == "co_equipartition_profile") {
        const RealVector profile = co_equipartition_profile(in.gramian(), in.number("alpha"));
        return Json(std::vector<double>(profile.data(), profile.data() + profile.size()));
    }
    if (op == "is_co_equipartitioned") return is_co_equipartitioned(in.gramian(), in.number("alpha"));
    if (op == "is_co_equidistributed") return is_co_equidistributed(in.gramian());
    if (op == "grassmannian") {
        const Frame f = in.frame();
        const SearchResult result = minimize_mu(f);
        const ExclusivityEvidence evidence = exclusivity_probe(f, result);
        Json out{{"mu_min", result.mu_min}, {"exclusive", evidence.exclusive}};
        if (result.minimizer_dual) out["minimizer_dual"] = rows_of(result.minimizer_dual->synthesis());
        return out;
    }
    return nullptr;
}

bool spans_match(const FusionFrame& dual, const Json& spans, Field field) {
    if (!spans.is_array() || static_cast<Index>(spans.size()) != dual.k()) return false;
    for (Index i = 0; i < dual.k(); ++i) {
        const Subspace ref = make_subspace(io::matrix_from_columns(spans[static_cast<std::size_t>(i)], dual.n(), field), field);
        if (!same_subspace(ref, dual.subspace(i))) return false;
    }
    return true;
}

bool same_fusion(const FusionFrame& a, const FusionFrame& b) {
    if (a.k() != b.k()) return false;
    for (Index i = 0; i < a.k(); ++i) {
        if (!same_subspace(a.subspace(i), b.subspace(i))) return false;
    }
    return true;
}

Json evaluate_fusion_op(const std::string& op, const Inputs& in) {
    if (op == "fusion_operator") return rows_of(in.fusion().fusion_operator());
    if (op == "fusion_is_tight") return is_tight(in.fusion());
    if (op == "fusion_potential") return report_json(fusion_potential(in.fusion()));
    if (op == "cross_fusion_potential") {
        const FusionFrame p = in.fusion();
        const std::string other = in.check.value("other", "canonical_dual");
        if (other == "self") return cross_fusion_potential(p, p);
        if (other == "canonical_dual") return cross_fusion_potential(p, canonical_dual_fusion(p));
        return cross_fusion_potential(p, io::read_fusion(in.dir / other).fusion);
    }
    if (op == "canonical_dual_fusion") {
        const FusionFrame p = in.fusion();
        const FusionFrame q = canonical_dual_fusion(p);
        Json out{{"same_as_input", same_fusion(p, q)}};
        if (in.check.contains("spans")) out["matches_spans"] = spans_match(q, in.check.at("spans"), p.field());
        return out;
    }
    if (op == "intersection_dim") {
        const FusionFrame p = in.fusion();
        return intersection_dim(p.subspace(in.index("i")), p.subspace(in.index("j")));
    }
    if (op == "is_semi_orthogonal") {
        const FusionFrame p = in.fusion();
        return is_semi_orthogonal(p.subspace(in.index("i")), p.subspace(in.index("j")));
    }
    if (op == "structure") {
        const StructureReport r = structured_self_dual_check(in.fusion());
        return Json{{"applies", r.applies},
                    {"predicted", r.predicted_potential},
                    {"measured", r.measured_potential},
                    {"dual_is_self", r.dual_is_self}};
    }
    if (op == "is_orthonormal_fusion_basis") return is_orthonormal_fusion_basis(in.fusion());
    return nullptr;
}

}  // namespace

double parse_number(const std::string& text) {
    double out = 0.0;
    if (!try_number(text, out)) throw Error(ErrorCode::ParseError, "not a number: '" + text + "'");
    return out;
}

bool matches(const Json& expected, const Json& actual, double tol) {
    double e = 0.0;
    double a = 0.0;
    if (numeric(expected, e)) {
        if (!numeric(actual, a)) return false;
        return std::abs(a - e) <= tol * std::max(1.0, std::abs(e));
    }
    if (expected.is_boolean() || expected.is_string()) return expected == actual;
    if (expected.is_array()) {
        if (!actual.is_array() || actual.size() != expected.size()) return false;
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (!matches(expected[i], actual[i], tol)) return false;
        }
        return true;
    }
    if (expected.is_object()) {
        if (!actual.is_object()) return false;
        for (const auto& [key, value] : expected.items()) {
            if (!actual.contains(key) || !matches(value, actual.at(key), tol)) return false;
        }
        return true;
    }
    return expected == actual;
}

Json evaluate(const Json& check, const std::filesystem::path& dir) {
    const std::string op = check.at("op").get<std::string>();
    const Inputs in{check, dir};
    try {
        Json out = evaluate_frame_op(op, in);
        if (out.is_null()) out = evaluate_fusion_op(op, in);
        if (out.is_null()) throw Error(ErrorCode::ParseError, "unknown check op '" + op + "'");
        return out;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError || e.code() == ErrorCode::IoError) throw;
        return Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    }
}

Outcome run(const std::filesystem::path& dir) {
    const Json manifest = io::read_json(dir / "suite.json");
    const double default_tol = manifest.value("tolerance", 1e-9);
    Outcome outcome;
    for (const Json& check : manifest.at("checks")) {
        Row row;
        row.id = check.value("id", std::string("?"));
        row.op = check.value("op", std::string("?"));
        try {
            const Json actual = evaluate(check, dir);
            row.passed = matches(check.at("expected"), actual, check.value("tol", default_tol));
            row.detail = actual.dump(-1, ' ', false, Json::error_handler_t::replace);
        } catch (const std::exception& e) {
            row.passed = false;
            row.detail = e.what();
        }
        outcome.rows.push_back(std::move(row));
    }
    return outcome;
}

void print_table(const Outcome& outcome, std::ostream& out) {
    std::size_t width = 2;
    for (const auto& row : outcome.rows) width = std::max(width, row.id.size());
    out << std::left << std::setw(6) << "RESULT" << "  " << std::setw(static_cast<int>(width)) << "ID" << "  OP\n";
    for (const auto& row : outcome.rows) {
        out << std::setw(6) << (row.passed ? "PASS" : "FAIL") << "  " << std::setw(static_cast<int>(width)) << row.id
            << "  " << row.op << '\n';
        if (!row.passed) out << "        got: " << row.detail << '\n';
    }
    out << outcome.rows.size() - outcome.failures() << "/" << outcome.rows.size() << " checks passed\n";
}

}  // namespace fpl::suite
