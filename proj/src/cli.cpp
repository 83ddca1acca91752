#include "fpl/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fpl/io.hpp"
#include "fpl/paper_suite.hpp"
#include "fpl/random.hpp"
#include "fpl/report.hpp"

#ifndef FPL_DEFAULT_DATA_DIR
#define FPL_DEFAULT_DATA_DIR "data/suite"
#endif

namespace fpl::cli {

namespace {

struct Options {
    std::string frame;
    std::string other;
    std::string fusion;
    std::string data;
    std::string dump;
    std::optional<double> p;
    std::optional<double> eta;
    std::optional<double> alpha;
    std::optional<double> tol;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    Index n = 2;
    Index k = 3;
    double scale = 1.0;
    bool canonical_only = false;
    std::string source = "gaussian";
    std::string format = "text";
};

std::string vector_text(const Vector& v, Field field) {
    std::ostringstream s;
    s << '[';
    for (Index i = 0; i < v.size(); ++i) {
        if (i) s << ',';
        if (field == Field::Real) {
            s << report::format_value(v(i).real());
        } else {
            s << '(' << report::format_value(v(i).real()) << ',' << report::format_value(v(i).imag()) << ')';
        }
    }
    s << ']';
    return s.str();
}

void add_vectors(report::Record& r, const std::string& prefix, const Frame& f) {
    for (Index i = 0; i < f.k(); ++i) r.add(prefix + std::to_string(i + 1), vector_text(f.vector(i), f.field()));
}

Frame load_other_or_dual(const Options& o, const Frame& f) {
    return o.other.empty() ? canonical_dual(f) : io::read_frame(o.other);
}

report::Record cmd_potential(const Options& o) {
    const Frame f = io::read_frame(o.frame);
    report::Record r = report::to_record(frame_potential_bound(f));
    r.add("tight", is_tight(f, o.tol.value_or(tol::tight)));
    if (o.p) r.add("pth_value", pth_cross_potential(f, f, *o.p));
    return r;
}

report::Record cmd_cross(const Options& o) {
    const Frame f = io::read_frame(o.frame);
    const Frame h = load_other_or_dual(o, f);
    report::Record r = report::to_record(cross_potential_bound(f, h, o.tol.value_or(tol::dual)));
    if (o.p) {
        r.add("p", *o.p).add("pth_value", pth_cross_potential(f, h, *o.p)).add("pth_bound", pth_bound(f.n(), f.k(), *o.p));
    }
    return r;
}

report::Record cmd_mu(const Options& o) {
    const Frame f = io::read_frame(o.frame);
    const Frame h = load_other_or_dual(o, f);
    const CrossGramian g = cross_gramian(f, h);
    const PotentialReport diag = gramian_diagonal_sum(g);
    const double equi_tol = o.tol.value_or(1e-9);
    report::Record r{"mu", {}};
    r.add("mu", max_offdiagonal(g))
        .add("welch_constant", welch_constant(f.n(), f.k()))
        .add("diagonal_sum", diag.value)
        .add("diagonal_bound", diag.bound)
        .add("co_equidistributed", is_co_equidistributed(g, equi_tol));
    if (o.eta) {
        const LogPhiSum sum = log_phi_sum(g, f.n(), *o.eta);
        r.add("eta", *o.eta)
            .add("log_phi_od", log_phi_offdiagonal(g, *o.eta))
            .add("surrogate", log_phi_offdiagonal(g, *o.eta) / *o.eta)
            .add("log_phi_sum", sum.log_value)
            .add("log_phi_sum_bound", sum.log_bound);
    }
    if (o.alpha) {
        const RealVector profile = co_equipartition_profile(g, *o.alpha);
        r.add("alpha", *o.alpha)
            .add("profile_min", profile.minCoeff())
            .add("profile_max", profile.maxCoeff())
            .add("co_equipartitioned", is_co_equipartitioned(g, *o.alpha, equi_tol));
    }
    return r;
}

report::Record cmd_dual(const Options& o) {
    const Frame f = io::read_frame(o.frame);
    const Frame g = canonical_dual(f);
    const FrameOperator& op = f.frame_operator();
    report::Record r{"dual", {}};
    r.add("n", static_cast<std::int64_t>(f.n()))
        .add("k", static_cast<std::int64_t>(f.k()))
        .add("lower", op.lower)
        .add("upper", op.upper)
        .add("tight", is_tight(f, o.tol.value_or(tol::tight)));
    if (!o.other.empty()) r.add("other_is_dual", is_dual(f, io::read_frame(o.other), o.tol.value_or(tol::dual)));
    add_vectors(r, "g", g);
    if (!o.dump.empty()) io::write_json(o.dump, io::frame_to_json(g));
    return r;
}

report::Record cmd_family(const Options& o) {
    const Frame f = io::read_frame(o.frame);
    const DualFamily family(f);
    Rng rng = stream_rng(o.seed, 0);
    const Matrix params = o.scale * gaussian_matrix(f.n(), family.codimension(), f.field(), rng);
    const Frame h = family.evaluate(params);
    report::Record r{"family", {}};
    r.add("codimension", static_cast<std::int64_t>(family.codimension()))
        .add("real_dimension", static_cast<std::int64_t>(family.real_dimension()))
        .add("scale", o.scale)
        .add("seed", static_cast<std::int64_t>(o.seed))
        .add("sample_is_dual", is_dual(f, h, o.tol.value_or(tol::dual)))
        .add("sample_cross_potential", cross_frame_potential(f, h))
        .add("sample_mu", max_offdiagonal(cross_gramian(f, h)));
    add_vectors(r, "h", h);
    if (!o.dump.empty()) io::write_json(o.dump, io::frame_to_json(h));
    return r;
}

report::Record cmd_grassmannian(const Options& o) {
    const Frame f = io::read_frame(o.frame);
    SolverConfig config;
    config.seed = o.seed;
    SearchResult result = minimize_mu(f, config);
    const ExclusivityEvidence evidence = exclusivity_probe(f, result);
    result.exclusive_within_tol = evidence.exclusive;
    report::Record r = report::to_record(result);
    r.add("face_diameter", evidence.face_diameter)
        .add("flat_directions", static_cast<std::int64_t>(evidence.flat_directions))
        .add("perturbations_increase", evidence.perturbations_increase);
    if (!o.other.empty()) r.add("gap", grassmannian_gap(f, io::read_frame(o.other), result));
    if (result.minimizer_dual) {
        add_vectors(r, "h", *result.minimizer_dual);
        if (!o.dump.empty()) io::write_json(o.dump, io::frame_to_json(*result.minimizer_dual));
    }
    return r;
}

report::Record cmd_fusion(const Options& o, std::ostream& err) {
    const io::LoadedFusion loaded = io::read_fusion(o.fusion);
    for (Index i : loaded.adjusted) {
        err << "fpl: note: basis of subspace " << i << " was not orthonormal and has been re-orthonormalised\n";
    }
    const FusionFrame& p = loaded.fusion;
    const StructureReport structure = structured_self_dual_check(p, o.tol.value_or(tol::subspace));
    report::Record r = report::to_record(fusion_potential(p));
    r.add("tight", is_tight(p, o.tol.value_or(tol::tight)))
        .add("lower", p.lower())
        .add("upper", p.upper())
        .add("cross_dual_potential", cross_fusion_potential(p, canonical_dual_fusion(p)))
        .add("orthonormal_basis", is_orthonormal_fusion_basis(p))
        .add("structure_applies", structure.applies)
        .add("dual_is_self", structure.dual_is_self);
    if (!o.other.empty()) r.add("cross_potential", cross_fusion_potential(p, io::read_fusion(o.other).fusion));
    if (!o.dump.empty()) io::write_json(o.dump, io::fusion_to_json(canonical_dual_fusion(p)));
    return r;
}

report::Record cmd_harness(const Options& o, std::ostream& err) {
    HarnessOptions options;
    options.param_scale = o.scale;
    options.canonical_only = o.canonical_only;
    options.source = o.source == "tight" ? FrameSource::EqualNormTight : FrameSource::Gaussian;
    options.violation_tol = o.tol.value_or(1e-9);
    const HarnessSummary summary = conjecture_harness(o.n, o.k, o.trials, o.seed, options);
    for (const auto& c : summary.counterexamples) {
        err << "fpl: counterexample trial=" << c.trial << " mu=" << report::format_value(c.mu)
            << " frame=" << io::frame_to_json(c.frame).dump() << " dual=" << io::frame_to_json(c.dual).dump() << '\n';
        if (!o.dump.empty()) {
            const std::filesystem::path dir(o.dump);
            std::filesystem::create_directories(dir);
            const std::string stem = "counterexample_" + std::to_string(c.trial);
            io::write_json(dir / (stem + "_frame.json"), io::frame_to_json(c.frame));
            io::write_json(dir / (stem + "_dual.json"), io::frame_to_json(c.dual));
        }
    }
    return report::to_record(summary);
}

int cmd_suite(const Options& o, std::ostream& out) {
    const suite::Outcome outcome = suite::run(o.data.empty() ? default_data_dir() : o.data);
    suite::print_table(outcome, out);
    return outcome.all_passed() ? 0 : 1;
}

}  // namespace

std::string default_data_dir() { return FPL_DEFAULT_DATA_DIR; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Finite frame potentials, dual frames and fusion frames", "fpl"};
    app.require_subcommand(1);

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    };
    const auto add_frame = [&](CLI::App* sub) { sub->add_option("--frame", o.frame, "Frame file")->required(); };
    const auto add_tol = [&](CLI::App* sub) { sub->add_option("--tol", o.tol, "Tolerance override"); };

    auto* potential = app.add_subcommand("potential", "Frame potential against its lower bound");
    add_frame(potential);
    potential->add_option("--p", o.p, "Also report the p-th frame potential")->check(CLI::PositiveNumber);
    add_tol(potential);
    add_format(potential);

    auto* cross = app.add_subcommand("cross", "Cross frame potential of a dual pair");
    add_frame(cross);
    cross->add_option("--other", o.other, "Dual frame file (default: canonical dual)");
    cross->add_option("--p", o.p, "Also report the p-th cross potential and its bound")->check(CLI::PositiveNumber);
    add_tol(cross);
    add_format(cross);

    auto* mu = app.add_subcommand("mu", "Off-diagonal coherence and exponential potentials");
    add_frame(mu);
    mu->add_option("--other", o.other, "Second frame (default: canonical dual)");
    mu->add_option("--eta", o.eta, "Exponential weight for the sum potentials")->check(CLI::PositiveNumber);
    mu->add_option("--alpha", o.alpha, "Exponent of the co-equipartition profile")->check(CLI::PositiveNumber);
    add_tol(mu);
    add_format(mu);

    auto* dual = app.add_subcommand("dual", "Canonical dual and frame bounds");
    add_frame(dual);
    dual->add_option("--other", o.other, "Check this frame for duality");
    dual->add_option("--dump", o.dump, "Write the canonical dual to this file");
    add_tol(dual);
    add_format(dual);

    auto* family = app.add_subcommand("family", "Parametrised dual family and a random member");
    add_frame(family);
    family->add_option("--scale", o.scale, "Scale of the random parameters");
    family->add_option("--seed", o.seed, "Random seed");
    family->add_option("--dump", o.dump, "Write the sampled dual to this file");
    add_tol(family);
    add_format(family);

    auto* grass = app.add_subcommand("grassmannian", "Minimise coherence over all duals");
    add_frame(grass);
    grass->add_option("--other", o.other, "Report the gap of this dual");
    grass->add_option("--seed", o.seed, "Multi-start seed");
    grass->add_option("--dump", o.dump, "Write the minimising dual to this file");
    add_format(grass);

    auto* fusion = app.add_subcommand("fusion", "Fusion frame potential and canonical dual");
    fusion->add_option("--fusion", o.fusion, "Fusion frame file")->required();
    fusion->add_option("--other", o.other, "Second fusion frame for the cross potential");
    fusion->add_option("--dump", o.dump, "Write the canonical dual fusion frame to this file");
    add_tol(fusion);
    add_format(fusion);

    auto* harness = app.add_subcommand("harness", "Random search for coherence below the Welch-type constant");
    harness->add_option("--n", o.n, "Dimension")->check(CLI::PositiveNumber);
    harness->add_option("--k", o.k, "Number of frame vectors")->check(CLI::PositiveNumber);
    harness->add_option("--trials", o.trials, "Number of trials")->check(CLI::PositiveNumber);
    harness->add_option("--seed", o.seed, "Random seed");
    harness->add_option("--scale", o.scale, "Scale of the random dual parameters");
    harness->add_flag("--canonical-only", o.canonical_only, "Use canonical duals only");
    harness->add_option("--source", o.source, "Frame distribution")->check(CLI::IsMember({"gaussian", "tight"}));
    harness->add_option("--dump", o.dump, "Directory for counterexample files");
    add_tol(harness);
    add_format(harness);

    auto* suite_cmd = app.add_subcommand("paper-suite", "Reproduce the bundled example suite");
    suite_cmd->add_option("--data", o.data, "Fixture directory (default: " + default_data_dir() + ")");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "fpl: usage error: " << e.what() << '\n' << app.help("", CLI::AppFormatMode::All);
        return 2;
    }

    try {
        const report::Format format = report::parse_format(o.format);
        std::optional<report::Record> record;
        if (*potential) record = cmd_potential(o);
        else if (*cross) record = cmd_cross(o);
        else if (*mu) record = cmd_mu(o);
        else if (*dual) record = cmd_dual(o);
        else if (*family) record = cmd_family(o);
        else if (*grass) record = cmd_grassmannian(o);
        else if (*fusion) record = cmd_fusion(o, err);
        else if (*harness) record = cmd_harness(o, err);
        else if (*suite_cmd) return cmd_suite(o, out);
        if (record) out << report::emit(*record, format);
        return 0;
    } catch (const Error& e) {
        err << "fpl: " << e.what() << '\n';
        return is_input_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        err << "fpl: internal error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace fpl::cli
