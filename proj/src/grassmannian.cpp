#include "fpl/grassmannian.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "fpl/potentials.hpp"
#include "fpl/random.hpp"

namespace fpl {

namespace {

AffineModulusProgram build_program(const DualFamily& family) {
    const Frame& f = family.frame();
    const Index n = family.n();
    const Index k = family.k();
    const Index codim = family.codimension();
    const Index count = n * codim;
    const bool complex = f.field() == Field::Complex;
    const Matrix base = f.synthesis().adjoint() * family.base().synthesis();
    const Matrix& N = family.null_basis();

    AffineModulusProgram program;
    program.offsets.resize(k * (k - 1));
    program.coefficients = Matrix::Zero(k * (k - 1), family.real_dimension());
    Index row = 0;
    for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < k; ++j) {
            if (i == j) continue;
            program.offsets(row) = base(i, j);
            // <f_i, h_j> = base_ij + sum_ab conj(F_ai) L_ab conj(N_jb)
            for (Index b = 0; b < codim; ++b) {
                for (Index a = 0; a < n; ++a) {
                    const Scalar w = std::conj(f.synthesis()(a, i)) * std::conj(N(j, b));
                    const Index idx = a + b * n;
                    program.coefficients(row, idx) = w;
                    if (complex) program.coefficients(row, count + idx) = Scalar(0.0, 1.0) * w;
                }
            }
            ++row;
        }
    }
    return program;
}

RealVector random_direction(Index dim, Rng& rng) {
    std::normal_distribution<double> normal;
    RealVector d(dim);
    for (Index i = 0; i < dim; ++i) d(i) = normal(rng);
    const double norm = d.norm();
    return norm > 0.0 ? RealVector(d / norm) : RealVector(RealVector::Unit(dim, 0));
}

// Greedy clustering: a point joins the first representative within tol.
std::vector<RealVector> cluster(const std::vector<RealVector>& points, double tol) {
    std::vector<RealVector> reps;
    for (const auto& p : points) {
        const bool known = std::any_of(reps.begin(), reps.end(), [&](const RealVector& r) { return (r - p).norm() <= tol; });
        if (!known) reps.push_back(p);
    }
    return reps;
}

double face_level(double mu_min, const SolverConfig& config) {
    return mu_min + std::max(config.face_slack, 10.0 * config.minmax.opt_tol);
}

}  // namespace

MinMaxProblem::MinMaxProblem(const Frame& f) : family(f), program(build_program(family)) {}

double MinMaxProblem::objective(const Matrix& params) const {
    return program.max_modulus(family.pack(params));
}

SearchResult minimize_mu(const Frame& f, const SolverConfig& config) {
    SearchResult result;
    const MinMaxProblem problem(f);
    const DualFamily& family = problem.family;
    const Index dim = family.real_dimension();
    result.family_dim = dim;
    result.canonical_mu = f.k() >= 2 ? max_offdiagonal(cross_gramian(f, family.base())) : 0.0;

    if (dim == 0) {
        result.mu_min = result.canonical_mu;
        result.minimizer_params = Matrix::Zero(f.n(), 0);
        result.minimizer_dual = family.base();
        result.candidate_minimizers = {result.minimizer_params};
        result.exclusive_within_tol = true;
        return result;
    }

    Rng rng = stream_rng(config.seed, 0);
    MinMaxSolution solution;
    if (problem.program.is_real()) {
        solution = minimize_max_modulus(problem.program, config.minmax);
    } else {
        // Warm start on the smooth surrogate from the canonical dual and a few random duals.
        RealVector best = RealVector::Zero(dim);
        double best_value = problem.program.max_modulus(best);
        const int starts = 1 + std::min(config.restarts, 3);
        std::normal_distribution<double> normal(0.0, config.random_scale);
        for (int s = 0; s < starts; ++s) {
            RealVector x = RealVector::Zero(dim);
            if (s > 0) {
                for (Index i = 0; i < dim; ++i) x(i) = normal(rng);
            }
            for (double eta : config.eta_schedule) x = minimize_surrogate(problem.program, x, eta);
            const double value = problem.program.max_modulus(x);
            if (value < best_value) {
                best_value = value;
                best = x;
            }
        }
        solution = minimize_max_modulus(problem.program, config.minmax, &best);
    }

    RealVector x_star = solution.x;
    if (solution.value > result.canonical_mu) {
        x_star = RealVector::Zero(dim);
        solution.value = result.canonical_mu;
    }
    result.mu_min = solution.value;
    result.minimizer_params = family.unpack(x_star);
    result.minimizer_dual = family.evaluate(result.minimizer_params);

    std::vector<RealVector> points{x_star};
    const double level = face_level(result.mu_min, config);
    for (int r = 0; r < config.restarts; ++r) {
        points.push_back(extreme_point(problem.program, random_direction(dim, rng), level, config.minmax));
    }
    for (const auto& rep : cluster(points, config.cluster_tol)) {
        result.candidate_minimizers.push_back(family.unpack(rep));
    }
    result.exclusive_within_tol = result.candidate_minimizers.size() == 1;
    return result;
}

ExclusivityEvidence exclusivity_probe(const Frame& f, const SearchResult& result, int n_probes,
                                      double cluster_tol, std::uint64_t seed) {
    ExclusivityEvidence evidence;
    const MinMaxProblem problem(f);
    const DualFamily& family = problem.family;
    const Index dim = family.real_dimension();
    if (dim == 0) {
        evidence.minimizers = {Matrix::Zero(f.n(), 0)};
        return evidence;
    }
    SolverConfig config;
    const RealVector x_star = family.pack(result.minimizer_params);
    const double level = face_level(result.mu_min, config);
    Rng rng = stream_rng(seed, 1);

    std::vector<RealVector> points{x_star};
    for (const auto& c : result.candidate_minimizers) points.push_back(family.pack(c));
    for (int p = 0; p < n_probes; ++p) {
        points.push_back(extreme_point(problem.program, random_direction(dim, rng), level, config.minmax));
    }
    for (const auto& p : points) evidence.face_diameter = std::max(evidence.face_diameter, (p - x_star).norm());
    const auto reps = cluster(points, cluster_tol);
    for (const auto& rep : reps) evidence.minimizers.push_back(family.unpack(rep));

    // Active entries and their first-order variation.
    const Vector z = problem.program.evaluate(x_star);
    const double active_tol = 1e-8 * std::max(1.0, result.mu_min);
    std::vector<RealVector> rows;
    for (Index m = 0; m < z.size(); ++m) {
        const double mod = std::abs(z(m));
        if (mod < result.mu_min - active_tol) continue;
        const Eigen::RowVectorXcd a = problem.program.coefficients.row(m);
        if (mod > 0.0) {
            rows.push_back((std::conj(z(m)) / mod * a).real().transpose());
        } else {
            rows.push_back(a.real().transpose());
            rows.push_back(a.imag().transpose());
        }
    }
    Matrix active(static_cast<Index>(rows.size()), dim);
    for (std::size_t r = 0; r < rows.size(); ++r) active.row(static_cast<Index>(r)) = rows[r].transpose().cast<Scalar>();
    const Matrix flat = rows.empty() ? Matrix(Matrix::Identity(dim, dim)) : null_space(active, true);
    evidence.flat_directions = flat.cols();

    const double base = problem.program.max_modulus(x_star);
    for (int p = 0; p < std::max(1, n_probes); ++p) {
        RealVector d;
        if (flat.cols() > 0) {
            d = flat.real() * random_direction(flat.cols(), rng);
        } else {
            d = random_direction(dim, rng);
        }
        const double moved = problem.program.max_modulus(x_star + cluster_tol * d);
        if (!(moved - base > 1e-13)) evidence.perturbations_increase = false;
    }

    evidence.exclusive = reps.size() == 1 && evidence.face_diameter <= cluster_tol && evidence.perturbations_increase;
    return evidence;
}

unsigned harness_threads(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("FPL_THREADS")) {
        const long value = std::strtol(env, nullptr, 10);
        if (value > 0) return static_cast<unsigned>(value);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct TrialDraw {
    Frame frame;
    Frame dual;
};

TrialDraw draw_trial(Index n, Index k, std::uint64_t seed, std::uint64_t trial, const HarnessOptions& options) {
    Rng rng = stream_rng(seed, trial);
    Frame f = options.source == FrameSource::Gaussian ? random_frame(n, k, Field::Real, rng)
                                                      : random_equal_norm_tight_frame(n, k, rng);
    const DualFamily family(f);
    Matrix params = Matrix::Zero(n, k - n);
    if (!options.canonical_only) params = options.param_scale * gaussian_matrix(n, k - n, Field::Real, rng);
    Frame h = family.evaluate(params);
    return TrialDraw{std::move(f), std::move(h)};
}

struct TrialOutcome {
    double mu = 0.0;
    bool case_a = false;
};

}  // namespace

HarnessSummary conjecture_harness(Index n, Index k, std::uint64_t trials, std::uint64_t seed,
                                  const HarnessOptions& options) {
    if (n < 1 || k < n || k < 2) throw Error(ErrorCode::DomainError, "harness needs k >= n >= 1 and k >= 2");
    if (trials < 1) throw Error(ErrorCode::DomainError, "harness needs at least one trial");
    const double bound = welch_constant(n, k);
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);

    std::vector<TrialOutcome> outcomes(trials);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::uint64_t t = next++; t < trials; t = next++) {
                const TrialDraw draw = draw_trial(n, k, seed, t, options);
                const CrossGramian g = cross_gramian(draw.frame, draw.dual);
                const double offdiagonal_energy = g.entries.squaredNorm() - g.entries.diagonal().squaredNorm();
                outcomes[t] = TrialOutcome{max_offdiagonal(g), nd > nd * nd / kd + offdiagonal_energy};
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = trials;
        }
    };
    const unsigned threads = std::min<std::uint64_t>(harness_threads(options.threads), trials);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    HarnessSummary summary;
    summary.n = n;
    summary.k = k;
    summary.trials = trials;
    summary.seed = seed;
    summary.min_ratio = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
        const auto& o = outcomes[t];
        if (bound > 0.0) summary.min_ratio = std::min(summary.min_ratio, o.mu / bound);
        if (o.case_a) ++summary.case_a_count;
        if (o.mu < bound - options.violation_tol) {
            ++summary.violations;
            if (summary.counterexamples.size() < options.max_counterexamples) {
                TrialDraw draw = draw_trial(n, k, seed, t, options);
                summary.counterexamples.push_back(Counterexample{t, std::move(draw.frame), std::move(draw.dual), o.mu});
            }
        }
    }
    return summary;
}

double grassmannian_gap(const Frame& f, const Frame& h, const SearchResult& result) {
    if (!is_dual(f, h)) throw Error(ErrorCode::NotADual, "gap is measured against duals of the frame");
    const double mu = max_offdiagonal(cross_gramian(f, h));
    return mu * mu - result.mu_min * result.mu_min;
}

}  // namespace fpl
