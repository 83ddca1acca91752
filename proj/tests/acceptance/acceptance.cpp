// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fpl/fusion.hpp"
#include "fpl/grassmannian.hpp"
#include "fpl/io.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fpl;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    int checks = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
    void near(double actual, double expected, double tol, const std::string& what) {
        char buf[160];
        std::snprintf(buf, sizeof buf, " (got %.12g, want %.12g, tol %.0e)", actual, expected, tol);
        expect(std::abs(actual - expected) <= tol, what + buf);
    }
};

std::string data(const std::string& name) { return std::string(FPL_TEST_DATA_DIR) + "/" + name; }

Frame frame(const std::string& name) { return io::read_frame(data(name)); }
FusionFrame fusion(const std::string& name) { return io::read_fusion(data(name)).fusion; }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

void example_values(Criterion& c) {
    const double tol = 1e-9;
    const Frame mercedes = frame("mercedes.json");
    const Frame skew = frame("skew_frame.json");
    const Frame skew_g = frame("skew_canonical_dual.json");
    const Frame skew_h = frame("skew_alternate_dual.json");
    const Frame sum = frame("sum_frame.json");

    c.near(frame_potential(mercedes), 4.5, tol, "Mercedes frame potential");
    c.near(frame_potential(skew), 13.0, tol, "skew frame potential");
    c.near(frame_potential_bound(mercedes).bound, 4.5, tol, "Mercedes potential bound");
    c.near(frame_potential_bound(skew).bound, 12.5, tol, "skew potential bound");

    c.near(cross_frame_potential(skew, canonical_dual(skew)), 2.0, tol, "P_F(canonical dual)");
    c.near(cross_frame_potential(skew, skew_h), 4.0, tol, "P_F(H)");

    const Frame flipped = frame("skew_sign_flip.json");
    c.near(cross_frame_potential(skew, flipped), 2.0, tol, "sign-flip cross potential");
    c.expect(!is_dual(skew, flipped), "sign-flip frame must not be a dual");

    Matrix gr_g(3, 3);
    gr_g << 2, 2, 2, 2, 5, -1, 2, -1, 5;
    gr_g /= 6.0;
    Matrix gr_h(3, 3);
    gr_h << 2, 0, 0, 2, 1, -1, 2, -1, 1;
    gr_h /= 2.0;
    c.expect(oracle::max_abs(cross_gramian(skew, skew_g).entries - gr_g) <= tol, "Gr(F,G) entrywise");
    c.expect(oracle::max_abs(cross_gramian(skew, skew_h).entries - gr_h) <= tol, "Gr(F,H) entrywise");
    c.near(max_offdiagonal(cross_gramian(skew, skew_g)), 1.0 / 3.0, tol, "mu(Gr(F,G))");
    c.near(max_offdiagonal(cross_gramian(skew, skew_h)), 1.0, tol, "mu(Gr(F,H))");

    Matrix sum_dual(2, 3);
    sum_dual << 2, -1, 1, -1, 2, 1;
    sum_dual /= 3.0;
    Matrix sum_gr(3, 3);
    sum_gr << 2, -1, 1, -1, 2, 1, 1, 1, 2;
    sum_gr /= 3.0;
    const Frame sum_canonical = canonical_dual(sum);
    c.expect(oracle::max_abs(sum_canonical.synthesis() - sum_dual) <= tol, "sum frame canonical dual");
    c.expect(oracle::max_abs(cross_gramian(sum, sum_canonical).entries - sum_gr) <= tol, "Gr(F, F~) of sum frame");
    c.near(gramian_diagonal_sum(cross_gramian(sum, sum_canonical)).value, 4.0 / 3.0, tol, "diagonal sum n^2/k");

    const FusionFrame xy_z = fusion("fusion_xy_z.json");
    const FusionFrame xy_anti = fusion("fusion_xy_antidiag.json");
    const FusionFrame xy_diag = fusion("fusion_xy_ydiag.json");
    c.near(cross_fusion_potential(xy_z, canonical_dual_fusion(xy_z)), 3.0, tol, "phi {xy, z}");
    c.near(cross_fusion_potential(xy_anti, canonical_dual_fusion(xy_anti)), 6.0, tol, "phi {xy, x+y=0}");
    c.near(cross_fusion_potential(xy_diag, canonical_dual_fusion(xy_diag)), 5.0, tol, "phi {xy, y=z}");
    c.near(fusion_potential(xy_z).value, 3.0, tol, "FFP {xy, z}");
    c.near(fusion_potential(xy_anti).value, 6.0, tol, "FFP {xy, x+y=0}");
    c.near(fusion_potential(xy_diag).value, 7.0, tol, "FFP {xy, y=z}");
    c.near(fusion_potential(xy_anti).bound, 16.0 / 3.0, tol, "FFP tight bound");
    const FusionFrame q = canonical_dual_fusion(xy_diag);
    RealMatrix plane_a(3, 2);
    plane_a << 1, 0, 0, 1, 0, -1;
    RealMatrix plane_b(3, 2);
    plane_b << 1, 0, 0, 0, 0, 1;
    c.expect(same_subspace(q.subspace(0), make_subspace(plane_a), 1e-8), "dual plane y+z=0");
    c.expect(same_subspace(q.subspace(1), make_subspace(plane_b), 1e-8), "dual plane y=0");
}

void grassmannian_search(Criterion& c) {
    const Frame skew = frame("skew_frame.json");
    const Frame sum = frame("sum_frame.json");
    const SearchResult rs = minimize_mu(skew);
    const SearchResult rt = minimize_mu(sum);
    c.near(rs.mu_min, 1.0 / 3.0, 1e-6, "mu_min of skew frame");
    c.near(rt.mu_min, 1.0 / 3.0, 1e-6, "mu_min of sum frame");
    const ExclusivityEvidence es = exclusivity_probe(skew, rs);
    c.expect(!es.exclusive, "exclusivity_probe(skew frame) should be false; probe found " +
                                std::to_string(es.minimizers.size()) + " minimiser(s), face diameter " +
                                std::to_string(es.face_diameter));
    c.expect(exclusivity_probe(sum, rt).exclusive, "exclusivity_probe(sum frame) should be true");
}

void property_suites(Criterion& c) {
    const int count = support::kInstances;
    for (int i = 0; i < count; ++i) {
        auto in = support::instance(9001, i);
        const std::string tag = " [" + support::label(in, i) + "]";
        const Frame f = random_frame(in.n, in.k, in.field, in.rng);
        const Frame g = canonical_dual(f);
        const DualFamily family(f);
        const Matrix l = gaussian_matrix(in.n, family.codimension(), in.field, in.rng);
        const Frame h = family.evaluate(l);
        const double n = static_cast<double>(in.n);

        c.near(cross_frame_potential(f, g), n, 1e-9, "P_F(F~) = n" + tag);
        const double ph = cross_frame_potential(f, h);
        c.expect(ph >= n - 1e-9, "P_F(H) >= n" + tag);
        if (l.size() > 0 && l.norm() > 1e-3) c.expect(ph > n + 1e-7, "P_F(H) strict away from L = 0" + tag);

        const Matrix gr = cross_gramian(f, h).entries;
        c.expect(oracle::max_abs(gr * gr - gr) <= 1e-8, "Gramian idempotent" + tag);
        c.near(gr.trace().real(), n, 1e-8, "Gramian trace" + tag);

        c.expect(gramian_diagonal_sum(cross_gramian(f, h)).value >= n * n / static_cast<double>(in.k) - 1e-9,
                 "diagonal bound" + tag);

        if (in.k >= 2) {
            const CrossGramian cg = cross_gramian(f, h);
            const double mu = max_offdiagonal(cg);
            const double slack = std::log(static_cast<double>(in.k * (in.k - 1)));
            for (double eta : {1.0, 10.0, 1e3}) {
                const double s = log_phi_offdiagonal(cg, eta) / eta;
                c.expect(s >= mu * mu - 1e-9 * std::max(1.0, mu * mu) &&
                             s <= mu * mu + slack / eta + 1e-9 * std::max(1.0, mu * mu),
                         "sandwich at eta " + std::to_string(eta) + tag);
            }
            c.expect(std::abs(mu_limit_estimate(cg, {1e4}) - mu * mu) <= slack / 1e4 + 1e-12, "mu limit" + tag);
        }

        const Matrix u = random_unitary(in.n, in.field, in.rng);
        const Frame uf = apply_unitary(f, u);
        const Frame uh = apply_unitary(h, u);
        c.expect(rel(cross_frame_potential(uf, uh), ph) <= 1e-9, "unitary invariance of P" + tag);
        c.expect(rel(pth_cross_potential(uf, uh, 2.5), pth_cross_potential(f, h, 2.5)) <= 1e-9,
                 "unitary invariance of phi_p" + tag);
        if (in.k >= 2) {
            c.expect(rel(max_offdiagonal(cross_gramian(uf, uh)), max_offdiagonal(cross_gramian(f, h))) <= 1e-9,
                     "unitary invariance of mu" + tag);
            c.expect(rel(log_phi_offdiagonal(cross_gramian(uf, uh), 2.0), log_phi_offdiagonal(cross_gramian(f, h), 2.0)) <=
                         1e-9,
                     "unitary invariance of Phi_od" + tag);
        }

        const FusionFrame p = i % 4 == 0 ? support::tight_fusion(in.n, in.field, in.rng)
                                         : support::random_fusion(in.n, in.field, in.rng);
        const FusionFrame pq = canonical_dual_fusion(p);
        const double phi = cross_fusion_potential(p, pq);
        c.expect(rel(phi, (p.fusion_operator() * pq.fusion_operator()).trace().real()) <= 1e-9,
                 "phi(P,Q) = Tr(S_P S_Q)" + tag);
        c.expect(rel(cross_fusion_potential(apply_unitary_fusion(p, u), apply_unitary_fusion(pq, u)), phi) <= 1e-9,
                 "unitary invariance of phi(P,Q)" + tag);
        const PotentialReport ffp = fusion_potential(p);
        c.expect(ffp.value >= ffp.bound - 1e-9, "FFP bound" + tag);
        c.expect(ffp.attains_bound() == is_tight(p), "FFP equality iff tight" + tag);

        Frame e = f;
        if (in.k > 2 * (in.n / 2)) e = random_equal_norm_tight_frame(in.n, in.k, in.rng);
        const CrossGramian eg = cross_gramian(e, canonical_dual(e));
        if (is_co_equidistributed(eg)) {
            for (double alpha : {0.1, 1.0, 10.0, 100.0}) {
                c.expect(is_co_equipartitioned(eg, alpha), "equidistributed implies equipartitioned" + tag);
            }
        }
    }
    const Frame sum = frame("sum_frame.json");
    const CrossGramian sg = cross_gramian(sum, canonical_dual(sum));
    for (double eta : {1.0, 10.0}) {
        const PotentialReport r = phi_sum(sg, 2, eta);
        c.expect(r.equality_within <= 1e-9, "Phi_sum equality at eta " + std::to_string(eta));
    }
}

void conjecture(Criterion& c) {
    const std::vector<std::pair<Index, Index>> shapes{{2, 3}, {2, 4}, {3, 4}, {3, 5}};
    std::string summary;
    for (const auto& [n, k] : shapes) {
        const HarnessSummary s = conjecture_harness(n, k, 10000, 20240601);
        c.expect(s.trials == 10000, "harness ran all trials");
        char buf[200];
        std::snprintf(buf, sizeof buf, "(%ld,%ld) violations=%llu min_ratio=%.9f case_a_count=%llu",
                      static_cast<long>(n), static_cast<long>(k), static_cast<unsigned long long>(s.violations),
                      s.min_ratio, static_cast<unsigned long long>(s.case_a_count));
        c.notes.push_back(buf);
        if (s.violations > 0) {
            c.notes.push_back("FINDING: " + std::to_string(s.violations) + " trial(s) below the Welch-type constant at (" +
                              std::to_string(n) + "," + std::to_string(k) + ")");
        }
    }
}

void oracle_equivalence(Criterion& c) {
    const Frame f = frame("skew_frame.json");
    const DualFamily family(f);
    const Matrix k = oracle::kernel(f.synthesis());
    const Matrix khat = k / k.norm();
    const Scalar s = (khat.adjoint() * family.null_basis())(0, 0);
    for (int a = 0; a <= 20; ++a) {
        for (int b = 0; b <= 20; ++b) {
            Matrix v(2, 1);
            v << -1.0 + 0.1 * a, -1.0 + 0.1 * b;
            const Matrix reference = oracle::dual_from_kernel(f.synthesis(), v, khat);
            const Frame h = family.evaluate(v * s);
            c.expect(oracle::max_abs(h.synthesis() - reference) <= 1e-9,
                     "grid point (" + std::to_string(a) + "," + std::to_string(b) + ")");
            c.expect(is_dual(f, h, 1e-9), "grid dual (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    }
}

}  // namespace

int main() {
    std::vector<std::pair<Criterion, std::function<void(Criterion&)>>> criteria;
    criteria.push_back({{1, "example values", {}, {}, 0}, example_values});
    criteria.push_back({{2, "grassmannian search and exclusivity", {}, {}, 0}, grassmannian_search});
    criteria.push_back({{3, "property suites", {}, {}, 0}, property_suites});
    criteria.push_back({{4, "conjecture harness", {}, {}, 0}, conjecture});
    criteria.push_back({{5, "brute-force dual oracle", {}, {}, 0}, oracle_equivalence});

    int failed = 0;
    for (auto& [c, body] : criteria) {
        try {
            body(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const bool ok = c.failures.empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %d %-38s %s (%d checks, %zu failed)\n", c.number, c.title.c_str(), ok ? "PASS" : "FAIL",
                    c.checks, c.failures.size());
        for (const auto& note : c.notes) std::printf("    %s\n", note.c_str());
        std::size_t shown = 0;
        for (const auto& f : c.failures) {
            if (++shown > 10) {
                std::printf("    ... %zu more\n", c.failures.size() - 10);
                break;
            }
            std::printf("    failed: %s\n", f.c_str());
        }
    }
    return failed == 0 ? 0 : 1;
}
