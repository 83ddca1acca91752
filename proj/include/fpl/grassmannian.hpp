#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpl/frame.hpp"
#include "fpl/minmax.hpp"

namespace fpl {

/// mu(Gr(F, H(L))) as a function of the dual-family parameters. Every
/// off-diagonal Gramian entry is affine in L, so the objective is convex.
struct MinMaxProblem {
    DualFamily family;
    AffineModulusProgram program;  // one map per off-diagonal entry (i, j), i != j

    explicit MinMaxProblem(const Frame& f);

    const Frame& frame() const noexcept { return family.frame(); }
    double objective(const Matrix& params) const;
    double objective(const RealVector& coords) const { return program.max_modulus(coords); }
};

struct SolverConfig {
    MinMaxOptions minmax;
    std::vector<double> eta_schedule{10.0, 1e2, 1e3, 1e4};  // complex warm start only
    int restarts = 8;
    double random_scale = 1.0;
    std::uint64_t seed = 0x6a7373;
    double cluster_tol = 1e-5;
    double face_slack = 1e-9;  // level above mu_min defining the set of minimisers
};

struct SearchResult {
    double mu_min = 0.0;
    double canonical_mu = 0.0;
    Index family_dim = 0;  // real parameters of the dual family
    Matrix minimizer_params;
    std::optional<Frame> minimizer_dual;
    std::vector<Matrix> candidate_minimizers;  // distinct within cluster_tol
    bool exclusive_within_tol = true;
};

/// Minimises mu(Gr(F, H)) over every dual H of F. Real frames are solved as an
/// epigraph linear program; complex frames are warm-started on the smooth
/// surrogate (1/eta) ln Phi_od over the eta schedule and finished with the
/// cutting-plane program. Restarts select face points extremal in random
/// directions and are clustered into candidate_minimizers.
SearchResult minimize_mu(const Frame& f, const SolverConfig& config = {});

struct ExclusivityEvidence {
    bool exclusive = true;
    double face_diameter = 0.0;     // largest distance between probed minimisers
    Index flat_directions = 0;      // dimension of the null space of the active constraints
    bool perturbations_increase = true;
    std::vector<Matrix> minimizers; // cluster representatives
};

/// Numerical evidence (not proof) that the minimiser found by minimize_mu is
/// the only one: probes the set {mu <= mu_min + slack} in n_probes random
/// directions and perturbs the minimiser along the directions that leave
/// every active entry unchanged to first order.
ExclusivityEvidence exclusivity_probe(const Frame& f, const SearchResult& result, int n_probes = 16,
                                      double cluster_tol = 1e-5, std::uint64_t seed = 0x70726f6265);

enum class FrameSource { Gaussian, EqualNormTight };

struct HarnessOptions {
    double param_scale = 1.0;      // std. deviation of the random dual parameters
    bool canonical_only = false;   // force L = 0
    FrameSource source = FrameSource::Gaussian;
    unsigned threads = 0;          // 0: FPL_THREADS, else hardware concurrency
    std::size_t max_counterexamples = 16;
    double violation_tol = 1e-9;
};

struct Counterexample {
    std::uint64_t trial = 0;
    Frame frame;
    Frame dual;
    double mu = 0.0;
};

struct HarnessSummary {
    Index n = 0;
    Index k = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t violations = 0;
    double min_ratio = 0.0;   // min mu / C_{k,n}; +inf when C_{k,n} = 0
    std::uint64_t case_a_count = 0;
    std::vector<Counterexample> counterexamples;
};

/// Random falsification of mu(Gr(F, G)) >= C_{k,n} for duals G of F. Trial t
/// draws from stream_rng(seed, t), so the outcome is independent of threading.
/// case_a_count counts trials with n > n^2/k + sum_{i != j} |<f_i, g_j>|^2.
HarnessSummary conjecture_harness(Index n, Index k, std::uint64_t trials, std::uint64_t seed,
                                  const HarnessOptions& options = {});

/// Threads used by the harness: FPL_THREADS when set, else hardware concurrency.
unsigned harness_threads(unsigned requested = 0);

/// mu(Gr(F, H))^2 - mu_min^2. Throws NotADual.
double grassmannian_gap(const Frame& f, const Frame& h, const SearchResult& result);

}  // namespace fpl
