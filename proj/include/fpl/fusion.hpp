#pragma once

#include <string_view>
#include <vector>

#include "fpl/potentials.hpp"

namespace fpl {

/// A subspace of F^n held as an orthonormal basis (n x d).
class Subspace {
public:
    Index n() const noexcept { return basis_.rows(); }
    Index dim() const noexcept { return basis_.cols(); }
    Field field() const noexcept { return field_; }
    const Matrix& basis() const noexcept { return basis_; }
    /// Orthogonal projection basis * basis^*.
    Matrix projection() const { return basis_ * basis_.adjoint(); }
    /// max |B* B - I| of the basis as supplied, before orthonormalisation.
    double adjustment() const noexcept { return adjustment_; }

private:
    friend Subspace make_subspace(const Matrix& spanning, Field field, double rank_tol);
    Subspace(Matrix basis, Field field, double adjustment)
        : basis_(std::move(basis)), field_(field), adjustment_(adjustment) {}

    Matrix basis_;
    Field field_;
    double adjustment_;
};

/// Orthonormalises independent columns. Throws EmptySubspace for zero columns
/// and DomainError when the columns are dependent.
Subspace make_subspace(const Matrix& spanning, Field field, double rank_tol = tol::rank_relative);
Subspace make_subspace(const RealMatrix& spanning, double rank_tol = tol::rank_relative);

class FusionFrame {
public:
    Index n() const noexcept { return n_; }
    Index k() const noexcept { return static_cast<Index>(subspaces_.size()); }
    Field field() const noexcept { return field_; }
    const std::vector<Subspace>& subspaces() const noexcept { return subspaces_; }
    const Subspace& subspace(Index i) const { return subspaces_.at(static_cast<std::size_t>(i)); }
    /// S = sum_i P_i.
    const Matrix& fusion_operator() const noexcept { return S_; }
    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    friend FusionFrame make_fusion_frame(std::vector<Subspace> subspaces);
    explicit FusionFrame(std::vector<Subspace> subspaces);

    std::vector<Subspace> subspaces_;
    Index n_ = 0;
    Field field_ = Field::Real;
    Matrix S_;
    double lower_ = 0.0;
    double upper_ = 0.0;
};

/// Throws NotAFusionFrame when the subspaces do not span F^n and ShapeMismatch
/// when their ambient dimensions differ.
FusionFrame make_fusion_frame(std::vector<Subspace> subspaces);
FusionFrame make_fusion_frame(const std::vector<Matrix>& bases, Field field);
FusionFrame make_fusion_frame(const std::vector<RealMatrix>& bases);

bool is_tight(const FusionFrame& p, double tolerance = tol::tight);

/// Tr(S^2) = sum_ij Tr(P_i P_j) against (sum_i dim W_i)^2 / n.
PotentialReport fusion_potential(const FusionFrame& p);

/// sum_ij Tr(P_i Q_j). Both fusion frames must have the same n and k.
double cross_fusion_potential(const FusionFrame& p, const FusionFrame& q);

/// Subspaces S^-1 W_i, re-orthonormalised.
FusionFrame canonical_dual_fusion(const FusionFrame& p);

/// dim(W1 ∩ W2) = d1 + d2 - rank([B1 | B2]).
Index intersection_dim(const Subspace& w1, const Subspace& w2, double rank_tol = tol::rank_relative);

/// dim(W1 ∩ W2^perp) = d1 - rank(B2* B1).
Index orthogonal_part_dim(const Subspace& w1, const Subspace& w2, double rank_tol = tol::rank_relative);

/// Projections agree: max |P1 - P2| <= tolerance.
bool same_subspace(const Subspace& w1, const Subspace& w2, double tolerance = tol::subspace);

/// B1* B2 vanishes.
bool are_orthogonal(const Subspace& w1, const Subspace& w2, double tolerance = tol::subspace);

/// Nontrivial intersection, and each subspace splits as the intersection plus
/// a nontrivial part orthogonal to the other subspace.
bool is_semi_orthogonal(const Subspace& w1, const Subspace& w2, double rank_tol = tol::rank_relative);

enum class PairRelation { Equal, Orthogonal, SemiOrthogonal, None };

std::string_view to_string(PairRelation relation);

PairRelation classify_pair(const Subspace& w1, const Subspace& w2, double tolerance = tol::subspace);

struct PairClass {
    Index i = 0;
    Index j = 0;
    PairRelation relation = PairRelation::None;
};

struct StructureReport {
    bool applies = false;              // every pair is equal, orthogonal or semi-orthogonal
    std::vector<PairClass> pairs;      // i < j
    double predicted_potential = 0.0;  // sum_ij dim(W_i ∩ W_j)
    double measured_potential = 0.0;   // cross potential with the computed canonical dual
    bool dual_is_self = false;         // canonical dual equals P subspace-by-subspace
};

/// Classifies pairs and, where every pair is equal/orthogonal/semi-orthogonal,
/// the fusion frame is its own canonical dual with cross potential equal to
/// the summed intersection dimensions; both are measured numerically.
StructureReport structured_self_dual_check(const FusionFrame& p, double tolerance = tol::subspace);

/// Dimensions sum to n and the subspaces are mutually orthogonal.
bool is_orthonormal_fusion_basis(const FusionFrame& p, double tolerance = tol::subspace);

/// Subspaces U W_i. Throws NotUnitary.
FusionFrame apply_unitary_fusion(const FusionFrame& p, const Matrix& u, double tolerance = tol::unitary);

}  // namespace fpl
