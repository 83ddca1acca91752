#pragma once

#include "fpl/simplex.hpp"
#include "fpl/types.hpp"

namespace fpl {

/// A finite family of affine maps z_m(x) = offsets(m) + coefficients.row(m) x
/// from real parameters x to complex values. max_m |z_m(x)| is convex in x.
struct AffineModulusProgram {
    Vector offsets;
    Matrix coefficients;

    Index dimension() const noexcept { return coefficients.cols(); }
    Index size() const noexcept { return coefficients.rows(); }
    /// True when all data is real, so |z| = max(z, -z) is captured exactly by two cuts.
    bool is_real() const;

    Vector evaluate(const RealVector& x) const;
    double max_modulus(const RealVector& x) const;
};

struct MinMaxOptions {
    double opt_tol = 1e-10;     // stop when max|z| - lower bound <= opt_tol
    int max_rounds = 400;       // cutting-plane rounds (complex data only)
    int initial_directions = 8; // polygon cuts per map for complex data
    lp::Options lp;
};

struct MinMaxSolution {
    RealVector x;
    double value = 0.0;        // max_m |z_m(x)|
    double lower_bound = 0.0;  // certified lower bound on the minimum
    int rounds = 0;
};

/// min_x max_m |z_m(x)| via the epigraph linear program
///   min t  s.t.  Re(conj(u) z_m(x)) <= t
/// over a set of unit directions u. Real data needs u = +-1 only and is solved
/// in one program; complex data adds the cut at the phase of each violated
/// map until the gap closes. Throws SolverFailure on exhaustion.
MinMaxSolution minimize_max_modulus(const AffineModulusProgram& program, const MinMaxOptions& options = {},
                                    const RealVector* warm_start = nullptr);

/// A point of {x : |z_m(x)| <= level for all m} minimising direction^T x.
/// Used to probe the extent of the set of minimisers.
RealVector extreme_point(const AffineModulusProgram& program, const RealVector& direction, double level,
                         const MinMaxOptions& options = {});

/// (1/eta) ln sum_m exp(eta |z_m(x)|^2): a smooth upper approximation of
/// max_m |z_m(x)|^2 that overshoots by at most ln(size)/eta.
double smooth_max_surrogate(const AffineModulusProgram& program, const RealVector& x, double eta,
                            RealVector* gradient = nullptr);

struct SurrogateOptions {
    int max_iterations = 500;
    double gradient_tol = 1e-12;
};

/// BFGS with backtracking on the smooth surrogate.
RealVector minimize_surrogate(const AffineModulusProgram& program, RealVector x0, double eta,
                              const SurrogateOptions& options = {});

}  // namespace fpl
