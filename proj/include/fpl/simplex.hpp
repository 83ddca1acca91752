#pragma once

#include <string_view>
#include <vector>

#include "fpl/types.hpp"

/// Two-phase revised simplex. The basis is refactorised on every iteration,
/// which is affordable for the programs that come out of min-max problems over
/// a dual family (a few dozen rows, up to a few thousand columns) and keeps
/// round-off from accumulating. Dantzig pricing, with Bland's rule after a run
/// of degenerate pivots.
namespace fpl::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

std::string_view to_string(Status status);

struct Options {
    double pivot_tol = 1e-11;
    double feasibility_tol = 1e-9;
    double optimality_tol = 1e-11;
    int max_iterations = 20000;
    int degenerate_run = 50;  // degenerate pivots before switching to Bland's rule
};

struct StandardResult {
    Status status = Status::IterationLimit;
    RealVector y;            // primal solution of the standard form
    RealVector multipliers;  // w with A^T w <= d at optimality
    double objective = 0.0;
    int iterations = 0;
    std::vector<Index> basis;  // optimal basis; artificial row r appears as -(r + 1)
};

/// min d^T y  subject to  A y = b, y >= 0. A feasible `start` basis (for
/// example the optimum of a program with fewer columns) skips phase one; an
/// unusable one falls back to a cold start.
StandardResult solve_standard(const RealMatrix& A, const RealVector& b, const RealVector& d,
                              const Options& options = {}, const std::vector<Index>* start = nullptr);

struct Result {
    Status status = Status::IterationLimit;
    RealVector z;
    double objective = 0.0;
    int iterations = 0;
    std::vector<Index> basis;  // basis of the dual program, reusable as `start`
};

/// min c^T z  subject to  M z <= h, z free. Solved through its dual
/// (min h^T y, M^T y = -c, y >= 0); z is read off the dual multipliers.
Result minimize_inequality(const RealVector& c, const RealMatrix& M, const RealVector& h,
                           const Options& options = {}, const std::vector<Index>* start = nullptr);

}  // namespace fpl::lp
