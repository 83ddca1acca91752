#include "fpl/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fpl::lp {

std::string_view to_string(Status status) {
    switch (status) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
        case Status::IterationLimit: return "iteration_limit";
    }
    return "unknown";
}

namespace {

// Columns [0, n) are structural, [n, n + m) the artificial unit columns.
class Revised {
public:
    Revised(const RealMatrix& A, const RealVector& b) : m_(A.rows()), n_(A.cols()), a_(A), b_(b), sign_(b.size()) {
        for (Index r = 0; r < m_; ++r) {
            sign_(r) = b(r) < 0.0 ? -1.0 : 1.0;
            a_.row(r) *= sign_(r);
            b_(r) *= sign_(r);
        }
    }

    Index structural() const { return n_; }
    const std::vector<Index>& basis() const { return basis_; }

    // Artificial columns are exported as -(row + 1) so the basis survives
    // appending structural columns.
    std::vector<Index> exported_basis() const {
        std::vector<Index> out = basis_;
        for (auto& j : out) {
            if (j >= n_) j = -(j - n_ + 1);
        }
        return out;
    }
    const RealVector& values() const { return x_; }
    const RealVector& duals() const { return w_; }
    const RealVector& signs() const { return sign_; }

    void cold_start() {
        basis_.resize(static_cast<std::size_t>(m_));
        for (Index r = 0; r < m_; ++r) basis_[static_cast<std::size_t>(r)] = n_ + r;
        factor();
    }

    // Accepts `start` when it is a nonsingular, primal feasible basis.
    bool warm_start(const std::vector<Index>& start, double tol) {
        if (static_cast<Index>(start.size()) != m_) return false;
        std::vector<char> seen(static_cast<std::size_t>(n_ + m_), 0);
        basis_.clear();
        for (Index j : start) {
            if (j < 0) j = n_ - j - 1;
            if (j >= n_ + m_ || seen[static_cast<std::size_t>(j)] != 0) return false;
            seen[static_cast<std::size_t>(j)] = 1;
            basis_.push_back(j);
        }
        if (!factor()) return false;
        for (Index r = 0; r < m_; ++r) {
            if (x_(r) < -tol) return false;
            if (basis_[static_cast<std::size_t>(r)] >= n_ && x_(r) > tol) return false;
        }
        return true;
    }

    double cost(const RealVector& costs) const {
        double total = 0.0;
        for (Index r = 0; r < m_; ++r) total += costs(basis_[static_cast<std::size_t>(r)]) * std::max(0.0, x_(r));
        return total;
    }

    // Pivots until no column in [0, allowed_end) prices out. Basic artificials
    // outside that range are held at zero.
    Status optimize(const RealVector& costs, Index allowed_end, const Options& options, int& iterations) {
        int degenerate = 0;
        RealVector cb(m_);
        while (true) {
            for (Index r = 0; r < m_; ++r) cb(r) = costs(basis_[static_cast<std::size_t>(r)]);
            w_ = lut_.solve(cb);
            const double tol = options.optimality_tol * (1.0 + w_.lpNorm<Eigen::Infinity>());
            const bool bland = degenerate >= options.degenerate_run;

            Index entering = -1;
            double most_negative = -tol;
            const RealVector reduced = costs.head(n_) - a_.transpose() * w_;
            for (Index j = 0; j < allowed_end; ++j) {
                if (in_basis_[static_cast<std::size_t>(j)] != 0) continue;
                const double rj = j < n_ ? reduced(j) : costs(j) - w_(j - n_);
                if (rj < most_negative) {
                    entering = j;
                    if (bland) break;
                    most_negative = rj;
                }
            }
            if (entering < 0) return Status::Optimal;
            if (iterations >= options.max_iterations) return Status::IterationLimit;

            const RealVector d = lu_.solve(column(entering));
            const double pivot_tol = options.pivot_tol * std::max(1.0, d.lpNorm<Eigen::Infinity>());
            Index leaving = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (Index r = 0; r < m_; ++r) {
                const Index j = basis_[static_cast<std::size_t>(r)];
                double ratio;
                if (j >= allowed_end && j >= n_ && std::abs(d(r)) > pivot_tol) {
                    ratio = 0.0;
                } else if (d(r) > pivot_tol) {
                    ratio = std::max(0.0, x_(r)) / d(r);
                } else {
                    continue;
                }
                bool take = leaving < 0 || ratio < best_ratio - 1e-13 * (1.0 + best_ratio);
                if (!take && ratio <= best_ratio + 1e-13 * (1.0 + best_ratio)) {
                    take = bland ? j < basis_[static_cast<std::size_t>(leaving)]
                                 : std::abs(d(r)) > std::abs(d(leaving));
                }
                if (take) {
                    best_ratio = std::min(best_ratio, ratio);
                    leaving = r;
                }
            }
            if (leaving < 0) return Status::Unbounded;
            degenerate = best_ratio <= 1e-14 ? degenerate + 1 : 0;
            replace(leaving, entering);
            ++iterations;
        }
    }

    // Swaps basic artificials for structural columns where the row allows it.
    void expel_artificials(const Options& options) {
        for (Index r = 0; r < m_; ++r) {
            if (basis_[static_cast<std::size_t>(r)] < n_) continue;
            const RealVector row = a_.transpose() * lut_.solve(RealVector::Unit(m_, r));
            Index best = -1;
            double best_abs = options.pivot_tol * std::max(1.0, row.lpNorm<Eigen::Infinity>());
            for (Index j = 0; j < n_; ++j) {
                if (in_basis_[static_cast<std::size_t>(j)] == 0 && std::abs(row(j)) > best_abs) {
                    best_abs = std::abs(row(j));
                    best = j;
                }
            }
            if (best >= 0) replace(r, best);
        }
    }

private:
    RealVector column(Index j) const { return j < n_ ? RealVector(a_.col(j)) : RealVector::Unit(m_, j - n_); }

    bool factor() {
        in_basis_.assign(static_cast<std::size_t>(n_ + m_), 0);
        RealMatrix B(m_, m_);
        for (Index r = 0; r < m_; ++r) {
            const Index j = basis_[static_cast<std::size_t>(r)];
            in_basis_[static_cast<std::size_t>(j)] = 1;
            B.col(r) = column(j);
        }
        lu_.compute(B);
        lut_.compute(B.transpose());
        if (!(lu_.rcond() > 1e-14)) return false;
        x_ = lu_.solve(b_);
        return true;
    }

    void replace(Index row, Index col) {
        basis_[static_cast<std::size_t>(row)] = col;
        factor();
    }

    Index m_;
    Index n_;
    RealMatrix a_;
    RealVector b_;
    RealVector sign_;
    std::vector<Index> basis_;
    std::vector<char> in_basis_;
    Eigen::PartialPivLU<RealMatrix> lu_;
    Eigen::PartialPivLU<RealMatrix> lut_;
    RealVector x_;
    RealVector w_;
};

}  // namespace

StandardResult solve_standard(const RealMatrix& A, const RealVector& b, const RealVector& d, const Options& options,
                              const std::vector<Index>* start) {
    if (A.rows() != b.size() || A.cols() != d.size()) {
        throw Error(ErrorCode::ShapeMismatch, "linear program dimensions disagree");
    }
    const Index m = A.rows();
    const Index cols = A.cols();
    StandardResult result;
    const double scale = 1.0 + b.cwiseAbs().sum();

    Revised simplex(A, b);
    RealVector phase_two = RealVector::Zero(cols + m);
    phase_two.head(cols) = d;

    if (start == nullptr || !simplex.warm_start(*start, options.feasibility_tol * scale)) {
        simplex.cold_start();
        RealVector phase_one = RealVector::Zero(cols + m);
        phase_one.tail(m).setOnes();
        const Status status = simplex.optimize(phase_one, cols + m, options, result.iterations);
        if (status == Status::IterationLimit) {
            result.status = status;
            return result;
        }
        if (simplex.cost(phase_one) > options.feasibility_tol * scale) {
            result.status = Status::Infeasible;
            return result;
        }
        simplex.expel_artificials(options);
    }

    result.status = simplex.optimize(phase_two, cols, options, result.iterations);
    if (result.status != Status::Optimal) return result;

    result.basis = simplex.exported_basis();
    result.multipliers = simplex.duals().cwiseProduct(simplex.signs());
    result.y = RealVector::Zero(cols);
    for (Index r = 0; r < m; ++r) {
        const Index j = simplex.basis()[static_cast<std::size_t>(r)];
        if (j < cols) result.y(j) = std::max(0.0, simplex.values()(r));
    }
    result.objective = d.dot(result.y);
    return result;
}

Result minimize_inequality(const RealVector& c, const RealMatrix& M, const RealVector& h, const Options& options,
                           const std::vector<Index>* start) {
    if (M.cols() != c.size() || M.rows() != h.size()) {
        throw Error(ErrorCode::ShapeMismatch, "inequality program dimensions disagree");
    }
    const StandardResult dual = solve_standard(M.transpose(), -c, h, options, start);
    Result result;
    result.iterations = dual.iterations;
    switch (dual.status) {
        case Status::Optimal:
            result.status = Status::Optimal;
            result.z = dual.multipliers;
            result.objective = c.dot(result.z);
            result.basis = dual.basis;
            break;
        case Status::Infeasible: result.status = Status::Unbounded; break;
        case Status::Unbounded: result.status = Status::Infeasible; break;
        case Status::IterationLimit: result.status = Status::IterationLimit; break;
    }
    return result;
}

}  // namespace fpl::lp
