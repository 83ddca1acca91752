#include "fpl/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpl/numeric.hpp"

namespace fpl {

std::string_view to_string(Functional f) {
    switch (f) {
        case Functional::FramePotential: return "frame_potential";
        case Functional::CrossFramePotential: return "cross_frame_potential";
        case Functional::DiagonalSum: return "diagonal_sum";
        case Functional::SumPotential: return "sum_potential";
        case Functional::FusionPotential: return "fusion_potential";
    }
    return "unknown";
}

PotentialReport make_report(Functional functional, double value, double bound) {
    return PotentialReport{functional, value, bound, value >= bound - tol::bound_slack, std::abs(value - bound)};
}

double frame_potential(const Frame& f) {
    return (f.synthesis().adjoint() * f.synthesis()).squaredNorm();
}

PotentialReport frame_potential_bound(const Frame& f) {
    const double total_norm = f.synthesis().squaredNorm();
    return make_report(Functional::FramePotential, frame_potential(f),
                       total_norm * total_norm / static_cast<double>(f.n()));
}

double cross_frame_potential(const Frame& f, const Frame& g) {
    return cross_gramian(f, g).entries.squaredNorm();
}

PotentialReport cross_potential_bound(const Frame& f, const Frame& h, double dual_tol) {
    if (!is_dual(f, h, dual_tol)) {
        throw Error(ErrorCode::NotADual, "the cross potential bound n only holds for dual frames");
    }
    return make_report(Functional::CrossFramePotential, cross_frame_potential(f, h), static_cast<double>(f.n()));
}

PotentialReport gramian_diagonal_sum(const CrossGramian& g) {
    const double n = static_cast<double>(g.n);
    const double k = static_cast<double>(g.k());
    return make_report(Functional::DiagonalSum, g.entries.diagonal().squaredNorm(), n * n / k);
}

bool has_constant_diagonal(const CrossGramian& g, double tolerance) {
    const Scalar target(static_cast<double>(g.n) / static_cast<double>(g.k()), 0.0);
    for (Index i = 0; i < g.k(); ++i) {
        if (std::abs(g.entries(i, i) - target) > tolerance) return false;
    }
    return true;
}

double pth_cross_potential(const CrossGramian& g, double p) {
    if (!(p > 0.0)) throw Error(ErrorCode::DomainError, "p must be positive");
    double sum = 0.0;
    for (Index j = 0; j < g.entries.cols(); ++j) {
        for (Index i = 0; i < g.entries.rows(); ++i) {
            sum += std::pow(std::norm(g.entries(i, j)), p);
        }
    }
    return sum;
}

double pth_cross_potential(const Frame& f, const Frame& g, double p) {
    return pth_cross_potential(cross_gramian(f, g), p);
}

double pth_bound(Index n, Index k, double p) {
    if (!(p >= 1.0)) throw Error(ErrorCode::DomainError, "the p-th cross potential bound needs p >= 1");
    if (n < 1 || k < n) throw Error(ErrorCode::DomainError, "pth_bound needs k >= n >= 1");
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    if (k == 1) return 1.0;  // single vector, n = k = 1: the only entry is 1
    const double off = std::pow(nd * kd - nd * nd, p);
    const double diag = std::pow(nd, 2.0 * p) * std::pow(kd - 1.0, p - 1.0);
    return (off + diag) / (std::pow(kd, 2.0 * p - 1.0) * std::pow(kd - 1.0, p - 1.0));
}

double welch_constant(Index n, Index k) {
    if (k < 2) throw Error(ErrorCode::DomainError, "welch_constant needs k >= 2");
    if (n < 1 || k < n) throw Error(ErrorCode::DomainError, "welch_constant needs k >= n >= 1");
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    return std::sqrt((nd * kd - nd * nd) / (kd * kd * (kd - 1.0)));
}

namespace {

void require_offdiagonal(const CrossGramian& g) {
    if (g.k() < 2) throw Error(ErrorCode::DomainError, "off-diagonal quantities need k >= 2");
}

void require_eta(double eta) {
    if (!(eta > 0.0)) throw Error(ErrorCode::DomainError, "eta must be positive");
}

}  // namespace

double max_offdiagonal(const CrossGramian& g) {
    require_offdiagonal(g);
    double mu = 0.0;
    for (Index j = 0; j < g.k(); ++j) {
        for (Index i = 0; i < g.k(); ++i) {
            if (i != j) mu = std::max(mu, std::abs(g.entries(i, j)));
        }
    }
    return mu;
}

double exp_entry(const CrossGramian& g, Index i, Index j, double eta) {
    if (i < 0 || j < 0 || i >= g.k() || j >= g.k()) {
        throw Error(ErrorCode::IndexError, "entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                               ") outside a " + std::to_string(g.k()) + "x" +
                                               std::to_string(g.k()) + " Gramian");
    }
    require_eta(eta);
    return std::exp(eta * std::norm(g.entries(i, j)));
}

double log_phi_offdiagonal(const CrossGramian& g, double eta) {
    require_offdiagonal(g);
    require_eta(eta);
    std::vector<double> exponents;
    exponents.reserve(static_cast<std::size_t>(g.k() * (g.k() - 1)));
    for (Index j = 0; j < g.k(); ++j) {
        for (Index i = 0; i < g.k(); ++i) {
            if (i != j) exponents.push_back(eta * std::norm(g.entries(i, j)));
        }
    }
    return log_sum_exp(exponents);
}

double phi_offdiagonal(const CrossGramian& g, double eta) {
    return std::exp(log_phi_offdiagonal(g, eta));
}

double mu_limit_estimate(const CrossGramian& g, const std::vector<double>& eta_schedule) {
    if (eta_schedule.empty()) throw Error(ErrorCode::DomainError, "eta schedule is empty");
    for (std::size_t i = 1; i < eta_schedule.size(); ++i) {
        if (!(eta_schedule[i] > eta_schedule[i - 1])) {
            throw Error(ErrorCode::DomainError, "eta schedule must be strictly increasing");
        }
    }
    const double eta_max = eta_schedule.back();
    return log_phi_offdiagonal(g, eta_max) / eta_max;
}

LogPhiSum log_phi_sum(const CrossGramian& g, Index n, double eta) {
    require_offdiagonal(g);
    require_eta(eta);
    const Index k = g.k();
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double c = welch_constant(n, k);
    const double diagonal_shift = nd * nd / (kd * kd) - c * c;

    std::vector<double> exponents;
    exponents.reserve(static_cast<std::size_t>(k * k));
    for (Index j = 0; j < k; ++j) {
        for (Index i = 0; i < k; ++i) {
            const double e = eta * std::norm(g.entries(i, j));
            exponents.push_back(i == j ? e - eta * diagonal_shift : e);
        }
    }
    const double rate = nd / (kd * kd) - nd * nd / (kd * kd * kd) + nd * (kd - nd) / (kd * kd * kd * (kd - 1.0));
    return LogPhiSum{log_sum_exp(exponents), 2.0 * std::log(kd) + eta * rate};
}

PotentialReport phi_sum(const CrossGramian& g, Index n, double eta) {
    const LogPhiSum logs = log_phi_sum(g, n, eta);
    PotentialReport report;
    report.functional = Functional::SumPotential;
    report.value = std::exp(logs.log_value);
    report.bound = std::exp(logs.log_bound);
    // log(value) - log(bound) is the log of the ratio; compare there.
    const double log_gap = logs.log_value - logs.log_bound;
    report.meets_bound = log_gap >= -tol::bound_slack;
    report.equality_within = std::abs(std::expm1(log_gap));
    return report;
}

RealVector log_co_equipartition_profile(const CrossGramian& g, double alpha) {
    if (!(alpha > 0.0)) throw Error(ErrorCode::DomainError, "alpha must be positive");
    RealVector out(g.k());
    std::vector<double> exponents(static_cast<std::size_t>(g.k()));
    for (Index i = 0; i < g.k(); ++i) {
        for (Index j = 0; j < g.k(); ++j) {
            exponents[static_cast<std::size_t>(j)] = alpha * std::norm(g.entries(j, i));
        }
        out(i) = log_sum_exp(exponents);
    }
    return out;
}

RealVector co_equipartition_profile(const CrossGramian& g, double alpha) {
    return log_co_equipartition_profile(g, alpha).array().exp().matrix();
}

bool is_co_equipartitioned(const CrossGramian& g, double alpha, double tolerance) {
    const RealVector logs = log_co_equipartition_profile(g, alpha);
    // (max - min) / max = 1 - exp(log min - log max)
    return -std::expm1(logs.minCoeff() - logs.maxCoeff()) <= tolerance;
}

bool is_co_equidistributed(const CrossGramian& g, double tolerance) {
    const Index k = g.k();
    std::vector<std::vector<double>> columns(static_cast<std::size_t>(k));
    for (Index l = 0; l < k; ++l) {
        auto& col = columns[static_cast<std::size_t>(l)];
        col.resize(static_cast<std::size_t>(k));
        for (Index j = 0; j < k; ++j) col[static_cast<std::size_t>(j)] = std::abs(g.entries(j, l));
        std::sort(col.begin(), col.end());
    }
    // every pair of sorted columns
    for (std::size_t a = 0; a < columns.size(); ++a) {
        for (std::size_t b = a + 1; b < columns.size(); ++b) {
            for (std::size_t j = 0; j < columns[a].size(); ++j) {
                if (std::abs(columns[a][j] - columns[b][j]) > tolerance) return false;
            }
        }
    }
    return true;
}

}  // namespace fpl
