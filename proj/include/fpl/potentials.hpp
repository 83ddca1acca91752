#pragma once

#include <string_view>
#include <vector>

#include "fpl/frame.hpp"

namespace fpl {

enum class Functional {
    FramePotential,
    CrossFramePotential,
    DiagonalSum,
    SumPotential,
    FusionPotential,
};

std::string_view to_string(Functional f);

/// A computed functional next to the lower bound it is known to satisfy.
struct PotentialReport {
    Functional functional = Functional::FramePotential;
    double value = 0.0;
    double bound = 0.0;
    bool meets_bound = false;      // value >= bound - tol::bound_slack
    double equality_within = 0.0;  // |value - bound|

    bool attains_bound(double tolerance = tol::equality) const { return equality_within <= tolerance; }
};

PotentialReport make_report(Functional functional, double value, double bound);

// --- frame potential ------------------------------------------------------

/// sum_ij |<f_i, f_j>|^2.
double frame_potential(const Frame& f);

/// Frame potential against L^2 / n with L = sum ||f_i||^2; tight iff equal.
PotentialReport frame_potential_bound(const Frame& f);

// --- cross frame potential ------------------------------------------------

/// sum_ij |<f_i, g_j>|^2 for any pair of frames of the same shape.
double cross_frame_potential(const Frame& f, const Frame& g);

/// Cross potential of a dual against the bound n. Throws NotADual for
/// non-duals, whose cross potential can fall below n.
PotentialReport cross_potential_bound(const Frame& f, const Frame& h, double dual_tol = tol::dual);

/// sum_i |G_ii|^2 against n^2 / k.
PotentialReport gramian_diagonal_sum(const CrossGramian& g);

/// True when every diagonal entry equals n/k within tolerance (the constant
/// diagonal precondition of the p-th cross potential bound).
bool has_constant_diagonal(const CrossGramian& g, double tolerance = tol::equality);

/// sum_ij |<f_i, g_j>|^(2p), p > 0.
double pth_cross_potential(const Frame& f, const Frame& g, double p);
double pth_cross_potential(const CrossGramian& g, double p);

/// ((nk - n^2)^p + n^(2p) (k-1)^(p-1)) / (k^(2p-1) (k-1)^(p-1)), p >= 1.
double pth_bound(Index n, Index k, double p);

/// C_{k,n} = sqrt((nk - n^2) / (k^2 (k - 1))).
double welch_constant(Index n, Index k);

// --- off-diagonal magnitude and exponential potentials ---------------------

/// mu = max_{i != j} |G_ij|.
double max_offdiagonal(const CrossGramian& g);

/// exp(eta |G_ij|^2).
double exp_entry(const CrossGramian& g, Index i, Index j, double eta);

/// ln of sum_{i != j} exp(eta |G_ij|^2), evaluated without overflow.
double log_phi_offdiagonal(const CrossGramian& g, double eta);
double phi_offdiagonal(const CrossGramian& g, double eta);

/// (1 / eta_max) ln phi_od at the last (largest) eta of an increasing schedule.
/// Lies within ln(k(k-1)) / eta_max above mu^2.
double mu_limit_estimate(const CrossGramian& g, const std::vector<double>& eta_schedule);

/// Sum potential with its lower bound k^2 exp(eta (n/k^2 - n^2/k^3 + n(k-n)/(k^3(k-1)))).
/// value and bound are exp() of the log-domain quantities below and may be inf
/// for large eta; meets_bound and equality_within are decided in log domain
/// (equality_within is then the relative gap).
PotentialReport phi_sum(const CrossGramian& g, Index n, double eta);

struct LogPhiSum {
    double log_value = 0.0;
    double log_bound = 0.0;
};
LogPhiSum log_phi_sum(const CrossGramian& g, Index n, double eta);

// --- equipartition / equidistribution ---------------------------------------

/// A_i = sum_j exp(alpha |G_ji|^2), the column sums of exponentials.
RealVector co_equipartition_profile(const CrossGramian& g, double alpha);

/// Log of each A_i; safe for large alpha.
RealVector log_co_equipartition_profile(const CrossGramian& g, double alpha);

/// (max - min) <= tolerance * max over the profile.
bool is_co_equipartitioned(const CrossGramian& g, double alpha, double tolerance = 1e-9);

/// Every pair of columns has the same sorted multiset of magnitudes.
bool is_co_equidistributed(const CrossGramian& g, double tolerance = 1e-9);

}  // namespace fpl
