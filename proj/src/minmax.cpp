#include "fpl/minmax.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fpl/numeric.hpp"

namespace fpl {

bool AffineModulusProgram::is_real() const {
    return is_real_valued(offsets) && is_real_valued(coefficients);
}

Vector AffineModulusProgram::evaluate(const RealVector& x) const {
    return offsets + coefficients * x.cast<Scalar>();
}

double AffineModulusProgram::max_modulus(const RealVector& x) const {
    if (size() == 0) return 0.0;
    return evaluate(x).cwiseAbs().maxCoeff();
}

namespace {

struct Cut {
    Index map;
    Scalar direction;  // unit modulus
};

// Rows Re(conj(u) a_m) x + sign_t * t <= -Re(conj(u) c_m) (+ level).
void fill_cut_rows(const AffineModulusProgram& program, const std::vector<Cut>& cuts, bool with_epigraph,
                   double level, RealMatrix& M, RealVector& h) {
    const Index p = program.dimension();
    M.resize(static_cast<Index>(cuts.size()), p + (with_epigraph ? 1 : 0));
    h.resize(static_cast<Index>(cuts.size()));
    for (std::size_t r = 0; r < cuts.size(); ++r) {
        const auto& cut = cuts[r];
        const Scalar u = std::conj(cut.direction);
        const Index row = static_cast<Index>(r);
        M.row(row).head(p) = (u * program.coefficients.row(cut.map)).real();
        if (with_epigraph) M(row, p) = -1.0;
        h(row) = level - (u * program.offsets(cut.map)).real();
    }
}

std::vector<Cut> initial_cuts(const AffineModulusProgram& program, const MinMaxOptions& options, bool real,
                              const RealVector* warm_start) {
    std::vector<Cut> cuts;
    const int directions = real ? 2 : std::max(3, options.initial_directions);
    for (Index m = 0; m < program.size(); ++m) {
        for (int d = 0; d < directions; ++d) {
            const double angle = 2.0 * std::numbers::pi * d / directions;
            cuts.push_back({m, std::polar(1.0, angle)});
        }
    }
    if (!real && warm_start != nullptr) {
        const Vector z = program.evaluate(*warm_start);
        for (Index m = 0; m < program.size(); ++m) {
            if (std::abs(z(m)) > 0.0) cuts.push_back({m, z(m) / std::abs(z(m))});
        }
    }
    return cuts;
}

// Adds the phase cut for every map whose modulus exceeds `level` by more than
// `slack`; returns the number of cuts added.
int refine_cuts(const AffineModulusProgram& program, const RealVector& x, double level, double slack,
                std::vector<Cut>& cuts) {
    const Vector z = program.evaluate(x);
    int added = 0;
    for (Index m = 0; m < program.size(); ++m) {
        const double mod = std::abs(z(m));
        if (mod > level + slack) {
            cuts.push_back({m, z(m) / mod});
            ++added;
        }
    }
    return added;
}

}  // namespace

MinMaxSolution minimize_max_modulus(const AffineModulusProgram& program, const MinMaxOptions& options,
                                    const RealVector* warm_start) {
    const Index p = program.dimension();
    MinMaxSolution best;
    if (program.size() == 0) {
        best.x = RealVector::Zero(p);
        return best;
    }
    const bool real = program.is_real();
    std::vector<Cut> cuts = initial_cuts(program, options, real, warm_start);

    RealVector objective = RealVector::Zero(p + 1);
    objective(p) = 1.0;
    best.value = std::numeric_limits<double>::infinity();
    std::vector<Index> basis;

    for (int round = 1; round <= options.max_rounds; ++round) {
        RealMatrix M;
        RealVector h;
        fill_cut_rows(program, cuts, true, 0.0, M, h);
        const lp::Result lp_result =
            lp::minimize_inequality(objective, M, h, options.lp, basis.empty() ? nullptr : &basis);
        if (lp_result.status != lp::Status::Optimal) {
            throw Error(ErrorCode::SolverFailure,
                        "epigraph program ended " + std::string(lp::to_string(lp_result.status)));
        }
        basis = lp_result.basis;
        const RealVector x = lp_result.z.head(p);
        const double lower = lp_result.z(p);
        const double value = program.max_modulus(x);
        if (value < best.value) {
            best.x = x;
            best.value = value;
        }
        best.lower_bound = std::max(best.lower_bound, lower);
        best.rounds = round;
        if (real || best.value - best.lower_bound <= options.opt_tol) return best;
        if (refine_cuts(program, x, lower, 0.25 * options.opt_tol, cuts) == 0) return best;
    }
    throw Error(ErrorCode::SolverFailure, "cutting-plane rounds exhausted with gap " +
                                              std::to_string(best.value - best.lower_bound));
}

RealVector extreme_point(const AffineModulusProgram& program, const RealVector& direction, double level,
                         const MinMaxOptions& options) {
    if (direction.size() != program.dimension()) {
        throw Error(ErrorCode::ShapeMismatch, "direction has the wrong dimension");
    }
    const bool real = program.is_real();
    std::vector<Cut> cuts = initial_cuts(program, options, real, nullptr);
    RealVector x;
    std::vector<Index> basis;
    for (int round = 1; round <= options.max_rounds; ++round) {
        RealMatrix M;
        RealVector h;
        fill_cut_rows(program, cuts, false, level, M, h);
        const lp::Result lp_result =
            lp::minimize_inequality(direction, M, h, options.lp, basis.empty() ? nullptr : &basis);
        if (lp_result.status != lp::Status::Optimal) {
            throw Error(ErrorCode::SolverFailure,
                        "extreme point program ended " + std::string(lp::to_string(lp_result.status)));
        }
        basis = lp_result.basis;
        x = lp_result.z;
        if (real || refine_cuts(program, x, level, options.opt_tol, cuts) == 0) return x;
    }
    throw Error(ErrorCode::SolverFailure, "extreme point search did not converge");
}

double smooth_max_surrogate(const AffineModulusProgram& program, const RealVector& x, double eta,
                            RealVector* gradient) {
    const Vector z = program.evaluate(x);
    std::vector<double> exponents(static_cast<std::size_t>(z.size()));
    for (Index m = 0; m < z.size(); ++m) exponents[static_cast<std::size_t>(m)] = eta * std::norm(z(m));
    const double lse = log_sum_exp(exponents);
    if (gradient != nullptr) {
        // d/dx |z_m|^2 = 2 Re(conj(z_m) a_m); softmax weights from the log-sum-exp.
        gradient->setZero(x.size());
        for (Index m = 0; m < z.size(); ++m) {
            const double w = std::exp(exponents[static_cast<std::size_t>(m)] - lse);
            if (w == 0.0) continue;
            *gradient += 2.0 * w * (std::conj(z(m)) * program.coefficients.row(m)).real().transpose();
        }
    }
    return lse / eta;
}

RealVector minimize_surrogate(const AffineModulusProgram& program, RealVector x, double eta,
                              const SurrogateOptions& options) {
    const Index p = x.size();
    if (p == 0) return x;
    RealVector grad(p);
    double value = smooth_max_surrogate(program, x, eta, &grad);
    RealMatrix inverse_hessian = RealMatrix::Identity(p, p) / (1.0 + eta);

    for (int it = 0; it < options.max_iterations; ++it) {
        if (grad.norm() <= options.gradient_tol) break;
        RealVector step = -inverse_hessian * grad;
        double slope = grad.dot(step);
        if (slope >= 0.0) {
            inverse_hessian = RealMatrix::Identity(p, p) / (1.0 + eta);
            step = -inverse_hessian * grad;
            slope = grad.dot(step);
        }
        double alpha = 1.0;
        RealVector next_grad(p);
        RealVector next = x + step;
        double next_value = smooth_max_surrogate(program, next, eta, &next_grad);
        while (next_value > value + 1e-4 * alpha * slope && alpha > 1e-16) {
            alpha *= 0.5;
            next = x + alpha * step;
            next_value = smooth_max_surrogate(program, next, eta, &next_grad);
        }
        if (alpha <= 1e-16) break;
        const RealVector s = next - x;
        const RealVector y = next_grad - grad;
        const double sy = s.dot(y);
        if (sy > 1e-300) {
            const double rho = 1.0 / sy;
            const RealMatrix I = RealMatrix::Identity(p, p);
            inverse_hessian = (I - rho * s * y.transpose()) * inverse_hessian * (I - rho * y * s.transpose()) +
                              rho * s * s.transpose();
        }
        const bool stalled = std::abs(value - next_value) <= 1e-16 * (1.0 + std::abs(value));
        x = next;
        grad = next_grad;
        value = next_value;
        if (stalled) break;
    }
    return x;
}

}  // namespace fpl
