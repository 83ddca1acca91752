#include "fpl/fusion.hpp"

#include <string>

namespace fpl {

Subspace make_subspace(const Matrix& spanning, Field field, double rank_tol) {
    if (spanning.cols() == 0 || spanning.rows() == 0) {
        throw Error(ErrorCode::EmptySubspace, "subspace basis has no columns");
    }
    if (field == Field::Real && !is_real_valued(spanning)) {
        throw Error(ErrorCode::DomainError, "real subspace basis has imaginary parts");
    }
    if (numerical_rank(spanning, rank_tol) < spanning.cols()) {
        throw Error(ErrorCode::DomainError, "subspace basis columns are linearly dependent");
    }
    const Index d = spanning.cols();
    const double adjustment =
        (spanning.adjoint() * spanning - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (adjustment <= 1e-14) return Subspace(spanning, field, adjustment);

    Eigen::HouseholderQR<Matrix> qr(spanning);
    Matrix q = qr.householderQ() * Matrix::Identity(spanning.rows(), d);
    if (field == Field::Real) q = q.real().cast<Scalar>();
    return Subspace(std::move(q), field, adjustment);
}

Subspace make_subspace(const RealMatrix& spanning, double rank_tol) {
    return make_subspace(Matrix(spanning.cast<Scalar>()), Field::Real, rank_tol);
}

FusionFrame::FusionFrame(std::vector<Subspace> subspaces) : subspaces_(std::move(subspaces)) {
    n_ = subspaces_.front().n();
    S_ = Matrix::Zero(n_, n_);
    for (const auto& w : subspaces_) {
        S_ += w.projection();
        if (w.field() == Field::Complex) field_ = Field::Complex;
    }
    S_ = (0.5 * (S_ + S_.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(S_, Eigen::EigenvaluesOnly);
    lower_ = eig.eigenvalues()(0);
    upper_ = eig.eigenvalues()(n_ - 1);
}

FusionFrame make_fusion_frame(std::vector<Subspace> subspaces) {
    if (subspaces.empty()) throw Error(ErrorCode::NotAFusionFrame, "no subspaces given");
    const Index n = subspaces.front().n();
    for (const auto& w : subspaces) {
        if (w.n() != n) throw Error(ErrorCode::ShapeMismatch, "subspaces live in different ambient dimensions");
    }
    FusionFrame p(std::move(subspaces));
    if (p.lower() <= tol::rank_relative * std::max(1.0, p.upper())) {
        throw Error(ErrorCode::NotAFusionFrame, "subspaces do not span F^" + std::to_string(n));
    }
    return p;
}

FusionFrame make_fusion_frame(const std::vector<Matrix>& bases, Field field) {
    std::vector<Subspace> subspaces;
    subspaces.reserve(bases.size());
    for (const auto& b : bases) subspaces.push_back(make_subspace(b, field));
    return make_fusion_frame(std::move(subspaces));
}

FusionFrame make_fusion_frame(const std::vector<RealMatrix>& bases) {
    std::vector<Subspace> subspaces;
    subspaces.reserve(bases.size());
    for (const auto& b : bases) subspaces.push_back(make_subspace(b));
    return make_fusion_frame(std::move(subspaces));
}

bool is_tight(const FusionFrame& p, double tolerance) {
    return (p.upper() - p.lower()) / p.upper() <= tolerance;
}

PotentialReport fusion_potential(const FusionFrame& p) {
    const Matrix& S = p.fusion_operator();
    const double value = (S * S).trace().real();
    double total_dim = 0.0;
    for (const auto& w : p.subspaces()) total_dim += static_cast<double>(w.dim());
    return make_report(Functional::FusionPotential, value, total_dim * total_dim / static_cast<double>(p.n()));
}

double cross_fusion_potential(const FusionFrame& p, const FusionFrame& q) {
    if (p.n() != q.n() || p.k() != q.k()) {
        throw Error(ErrorCode::ShapeMismatch, "cross fusion potential needs equal n and equal numbers of subspaces");
    }
    double sum = 0.0;
    for (const auto& wi : p.subspaces()) {
        for (const auto& vj : q.subspaces()) {
            // Tr(P_i Q_j) = ||B_i* C_j||_F^2
            sum += (wi.basis().adjoint() * vj.basis()).squaredNorm();
        }
    }
    return sum;
}

FusionFrame canonical_dual_fusion(const FusionFrame& p) {
    Eigen::LLT<Matrix> llt(p.fusion_operator());
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::SingularOperator, "fusion frame operator is not positive definite");
    }
    std::vector<Subspace> mapped;
    mapped.reserve(static_cast<std::size_t>(p.k()));
    for (const auto& w : p.subspaces()) {
        Matrix image = llt.solve(w.basis());
        if (w.field() == Field::Real) image = image.real().cast<Scalar>();
        mapped.push_back(make_subspace(image, w.field()));
    }
    return make_fusion_frame(std::move(mapped));
}

Index intersection_dim(const Subspace& w1, const Subspace& w2, double rank_tol) {
    if (w1.n() != w2.n()) throw Error(ErrorCode::ShapeMismatch, "subspaces live in different dimensions");
    Matrix joined(w1.n(), w1.dim() + w2.dim());
    joined << w1.basis(), w2.basis();
    return w1.dim() + w2.dim() - numerical_rank(joined, rank_tol);
}

Index orthogonal_part_dim(const Subspace& w1, const Subspace& w2, double rank_tol) {
    if (w1.n() != w2.n()) throw Error(ErrorCode::ShapeMismatch, "subspaces live in different dimensions");
    const Matrix cross = w2.basis().adjoint() * w1.basis();
    // Orthonormal bases: singular values of the cross matrix are cosines of
    // principal angles, so the cutoff is absolute.
    Eigen::JacobiSVD<Matrix> svd(cross);
    Index rank = 0;
    for (Index i = 0; i < svd.singularValues().size(); ++i) {
        if (svd.singularValues()(i) > std::max(rank_tol, 1e-10)) ++rank;
    }
    return w1.dim() - rank;
}

bool same_subspace(const Subspace& w1, const Subspace& w2, double tolerance) {
    if (w1.n() != w2.n() || w1.dim() != w2.dim()) return false;
    return (w1.projection() - w2.projection()).cwiseAbs().maxCoeff() <= tolerance;
}

bool are_orthogonal(const Subspace& w1, const Subspace& w2, double tolerance) {
    if (w1.n() != w2.n()) return false;
    return (w1.basis().adjoint() * w2.basis()).cwiseAbs().maxCoeff() <= tolerance;
}

bool is_semi_orthogonal(const Subspace& w1, const Subspace& w2, double rank_tol) {
    const Index common = intersection_dim(w1, w2, rank_tol);
    if (common < 1) return false;
    const Index v1 = orthogonal_part_dim(w1, w2, rank_tol);
    const Index v2 = orthogonal_part_dim(w2, w1, rank_tol);
    return v1 >= 1 && v2 >= 1 && common + v1 == w1.dim() && common + v2 == w2.dim();
}

std::string_view to_string(PairRelation relation) {
    switch (relation) {
        case PairRelation::Equal: return "equal";
        case PairRelation::Orthogonal: return "orthogonal";
        case PairRelation::SemiOrthogonal: return "semi_orthogonal";
        case PairRelation::None: return "none";
    }
    return "none";
}

PairRelation classify_pair(const Subspace& w1, const Subspace& w2, double tolerance) {
    if (same_subspace(w1, w2, tolerance)) return PairRelation::Equal;
    if (are_orthogonal(w1, w2, tolerance)) return PairRelation::Orthogonal;
    if (is_semi_orthogonal(w1, w2)) return PairRelation::SemiOrthogonal;
    return PairRelation::None;
}

StructureReport structured_self_dual_check(const FusionFrame& p, double tolerance) {
    StructureReport report;
    report.applies = true;
    for (Index i = 0; i < p.k(); ++i) {
        for (Index j = i + 1; j < p.k(); ++j) {
            const PairRelation rel = classify_pair(p.subspace(i), p.subspace(j), tolerance);
            report.pairs.push_back({i, j, rel});
            if (rel == PairRelation::None) report.applies = false;
        }
    }
    for (Index i = 0; i < p.k(); ++i) {
        for (Index j = 0; j < p.k(); ++j) {
            report.predicted_potential += static_cast<double>(
                i == j ? p.subspace(i).dim() : intersection_dim(p.subspace(i), p.subspace(j)));
        }
    }
    const FusionFrame dual = canonical_dual_fusion(p);
    report.measured_potential = cross_fusion_potential(p, dual);
    report.dual_is_self = true;
    for (Index i = 0; i < p.k(); ++i) {
        if (!same_subspace(p.subspace(i), dual.subspace(i), tolerance)) report.dual_is_self = false;
    }
    return report;
}

bool is_orthonormal_fusion_basis(const FusionFrame& p, double tolerance) {
    Index total = 0;
    for (const auto& w : p.subspaces()) total += w.dim();
    if (total != p.n()) return false;
    for (Index i = 0; i < p.k(); ++i) {
        for (Index j = i + 1; j < p.k(); ++j) {
            if (!are_orthogonal(p.subspace(i), p.subspace(j), tolerance)) return false;
        }
    }
    return true;
}

FusionFrame apply_unitary_fusion(const FusionFrame& p, const Matrix& u, double tolerance) {
    if (u.rows() != p.n() || u.cols() != p.n()) {
        throw Error(ErrorCode::ShapeMismatch, "unitary has the wrong size for this fusion frame");
    }
    if (!is_unitary(u, tolerance)) throw Error(ErrorCode::NotUnitary, "U* U differs from the identity");
    const bool real = is_real_valued(u);
    std::vector<Subspace> mapped;
    for (const auto& w : p.subspaces()) {
        const Field field = (w.field() == Field::Real && real) ? Field::Real : Field::Complex;
        mapped.push_back(make_subspace(Matrix(u * w.basis()), field));
    }
    return make_fusion_frame(std::move(mapped));
}

}  // namespace fpl
