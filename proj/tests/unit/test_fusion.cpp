#include <gtest/gtest.h>

#include "fpl/fusion.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace fpl;

namespace {

RealMatrix cols(std::initializer_list<std::initializer_list<double>> columns) {
    const Index n = static_cast<Index>(columns.begin()->size());
    RealMatrix m(n, static_cast<Index>(columns.size()));
    Index j = 0;
    for (const auto& c : columns) {
        Index i = 0;
        for (double v : c) m(i++, j) = v;
        ++j;
    }
    return m;
}

const RealMatrix kXY = cols({{1, 0, 0}, {0, 1, 0}});
const RealMatrix kZ = cols({{0, 0, 1}});
const RealMatrix kAnti = cols({{1, -1, 0}, {0, 0, 1}});
const RealMatrix kYZdiag = cols({{1, 0, 0}, {0, 1, 1}});
const RealMatrix kYZ = cols({{0, 1, 0}, {0, 0, 1}});

FusionFrame xy_z() { return make_fusion_frame(std::vector<RealMatrix>{kXY, kZ}); }
FusionFrame xy_anti() { return make_fusion_frame(std::vector<RealMatrix>{kXY, kAnti}); }
FusionFrame xy_diag() { return make_fusion_frame(std::vector<RealMatrix>{kXY, kYZdiag}); }

}  // namespace

TEST(Subspace, Errors) {
    try {
        make_subspace(cols({{1, 0, 0}, {2, 0, 0}}));
        FAIL() << "expected DomainError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DomainError);
    }
    try {
        make_subspace(RealMatrix(3, 0));
        FAIL() << "expected EmptySubspace";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::EmptySubspace);
    }
}

TEST(Subspace, OrthonormalisesAndRecordsAdjustment) {
    const Subspace s = make_subspace(cols({{2, 0, 0}, {1, 1, 0}}));
    EXPECT_LT(oracle::max_abs(s.basis().adjoint() * s.basis() - Matrix::Identity(2, 2)), 1e-14);
    EXPECT_GT(s.adjustment(), 0.5);
    EXPECT_TRUE(same_subspace(s, make_subspace(kXY)));
}

TEST(FusionFrame, Errors) {
    try {
        make_fusion_frame(std::vector<RealMatrix>{kXY, cols({{1, 1, 0}})});
        FAIL() << "expected NotAFusionFrame";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAFusionFrame);
    }
    try {
        make_fusion_frame(std::vector<RealMatrix>{kXY, cols({{1, 0}})});
        FAIL() << "expected ShapeMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    }
}

TEST(FusionFrame, Operators) {
    RealMatrix expected(3, 3);
    expected << 2, 0, 0, 0, 1.5, 0.5, 0, 0.5, 0.5;
    EXPECT_LT(oracle::max_abs(xy_diag().fusion_operator() - expected.cast<Scalar>()), 1e-12);
    EXPECT_LT(oracle::max_abs(xy_z().fusion_operator() - Matrix::Identity(3, 3)), 1e-12);
    EXPECT_TRUE(is_tight(xy_z()));
    EXPECT_FALSE(is_tight(xy_diag()));
}

TEST(FusionPotential, Values) {
    const PotentialReport a = fusion_potential(xy_z());
    EXPECT_NEAR(a.value, 3.0, 1e-12);
    EXPECT_NEAR(a.bound, 3.0, 1e-12);
    EXPECT_TRUE(a.attains_bound());
    const PotentialReport b = fusion_potential(xy_anti());
    EXPECT_NEAR(b.value, 6.0, 1e-12);
    EXPECT_NEAR(b.bound, 16.0 / 3.0, 1e-12);
    EXPECT_NEAR(fusion_potential(xy_diag()).value, 7.0, 1e-12);
}

TEST(FusionPotential, CrossWithCanonicalDual) {
    EXPECT_NEAR(cross_fusion_potential(xy_z(), xy_z()), 3.0, 1e-12);
    EXPECT_NEAR(cross_fusion_potential(xy_anti(), canonical_dual_fusion(xy_anti())), 6.0, 1e-12);
    EXPECT_NEAR(cross_fusion_potential(xy_diag(), canonical_dual_fusion(xy_diag())), 5.0, 1e-12);
    const FusionFrame three = make_fusion_frame(std::vector<RealMatrix>{kXY, kZ, kYZ});
    try {
        cross_fusion_potential(xy_z(), three);
        FAIL() << "expected ShapeMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ShapeMismatch);
    }
}

TEST(CanonicalDualFusion, PublishedPlanes) {
    const FusionFrame q = canonical_dual_fusion(xy_diag());
    EXPECT_TRUE(same_subspace(q.subspace(0), make_subspace(cols({{1, 0, 0}, {0, 1, -1}}))));
    EXPECT_TRUE(same_subspace(q.subspace(1), make_subspace(cols({{1, 0, 0}, {0, 0, 1}}))));
    const FusionFrame back = canonical_dual_fusion(q);
    EXPECT_TRUE(same_subspace(back.subspace(0), xy_diag().subspace(0)));
    EXPECT_TRUE(same_subspace(back.subspace(1), xy_diag().subspace(1)));
    for (const FusionFrame& p : {xy_z(), xy_anti()}) {
        const FusionFrame d = canonical_dual_fusion(p);
        for (Index i = 0; i < p.k(); ++i) EXPECT_TRUE(same_subspace(d.subspace(i), p.subspace(i)));
    }
}

TEST(SubspaceRelations, CoordinatePlanes) {
    const Subspace xy = make_subspace(kXY);
    const Subspace yz = make_subspace(kYZ);
    const Subspace z = make_subspace(kZ);
    EXPECT_EQ(intersection_dim(xy, yz), 1);
    EXPECT_EQ(orthogonal_part_dim(xy, yz), 1);
    EXPECT_EQ(intersection_dim(xy, z), 0);
    EXPECT_EQ(intersection_dim(xy, xy), 2);
    EXPECT_TRUE(is_semi_orthogonal(xy, yz));
    EXPECT_FALSE(is_semi_orthogonal(xy, z));
    EXPECT_FALSE(is_semi_orthogonal(xy, make_subspace(kYZdiag)));
    EXPECT_TRUE(are_orthogonal(xy, z));
    EXPECT_EQ(classify_pair(xy, xy), PairRelation::Equal);
    EXPECT_EQ(classify_pair(xy, z), PairRelation::Orthogonal);
    EXPECT_EQ(classify_pair(xy, yz), PairRelation::SemiOrthogonal);
    EXPECT_EQ(classify_pair(xy, make_subspace(kYZdiag)), PairRelation::None);
}

TEST(StructureReport, PublishedCases) {
    const StructureReport anti = structured_self_dual_check(xy_anti());
    EXPECT_TRUE(anti.applies);
    EXPECT_NEAR(anti.predicted_potential, 6.0, 1e-12);
    EXPECT_NEAR(anti.measured_potential, 6.0, 1e-9);
    EXPECT_TRUE(anti.dual_is_self);
    const StructureReport ortho = structured_self_dual_check(xy_z());
    EXPECT_TRUE(ortho.applies);
    EXPECT_NEAR(ortho.predicted_potential, 3.0, 1e-12);
    const StructureReport diag = structured_self_dual_check(xy_diag());
    EXPECT_FALSE(diag.applies);
    EXPECT_FALSE(diag.dual_is_self);
    EXPECT_TRUE(is_orthonormal_fusion_basis(xy_z()));
    EXPECT_FALSE(is_orthonormal_fusion_basis(xy_anti()));
}

TEST(FusionProperties, CrossPotentialIsTraceOfOperators) {
    for (int i = 0; i < support::kInstances; ++i) {
        auto in = support::instance(501, i);
        const FusionFrame p = support::random_fusion(in.n, in.field, in.rng);
        const FusionFrame q = canonical_dual_fusion(p);
        const double trace = (p.fusion_operator() * q.fusion_operator()).trace().real();
        EXPECT_NEAR(cross_fusion_potential(p, q), trace, 1e-9 * std::max(1.0, trace)) << support::label(in, i);
        double loops = 0.0;
        for (const auto& a : p.subspaces())
            for (const auto& b : q.subspaces()) loops += (a.projection() * b.projection()).trace().real();
        EXPECT_NEAR(cross_fusion_potential(p, q), loops, 1e-9 * std::max(1.0, loops));
    }
}

TEST(FusionProperties, PotentialBoundAndTightness) {
    int tight_seen = 0;
    for (int i = 0; i < support::kInstances; ++i) {
        auto in = support::instance(502, i);
        const FusionFrame p = i % 4 == 0 ? support::tight_fusion(in.n, in.field, in.rng)
                                         : support::random_fusion(in.n, in.field, in.rng);
        double dims = 0.0;
        for (const auto& s : p.subspaces()) dims += static_cast<double>(s.dim());
        const PotentialReport r = fusion_potential(p);
        EXPECT_NEAR(r.bound, dims * dims / static_cast<double>(in.n), 1e-12);
        EXPECT_GE(r.value, r.bound - 1e-9) << support::label(in, i);
        EXPECT_EQ(r.attains_bound(), is_tight(p)) << support::label(in, i);
        tight_seen += is_tight(p) ? 1 : 0;
    }
    EXPECT_GE(tight_seen, 50);
}

TEST(FusionProperties, UnitaryInvariance) {
    for (int i = 0; i < support::kInstances; ++i) {
        auto in = support::instance(503, i);
        const FusionFrame p = support::random_fusion(in.n, in.field, in.rng);
        const FusionFrame q = canonical_dual_fusion(p);
        const Matrix u = random_unitary(in.n, in.field, in.rng);
        const double before = cross_fusion_potential(p, q);
        const double after = cross_fusion_potential(apply_unitary_fusion(p, u), apply_unitary_fusion(q, u));
        EXPECT_NEAR(before, after, 1e-9 * std::max(1.0, before)) << support::label(in, i);
        EXPECT_NEAR(fusion_potential(p).value, fusion_potential(apply_unitary_fusion(p, u)).value,
                    1e-9 * std::max(1.0, before));
    }
    Matrix bad = Matrix::Identity(3, 3);
    bad(2, 2) = 3.0;
    EXPECT_THROW(apply_unitary_fusion(xy_z(), bad), Error);
}
