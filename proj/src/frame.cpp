#include "fpl/frame.hpp"

#include <string>

namespace fpl {

namespace {

std::string shape(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Frame& a, const Frame& b, const char* what) {
    if (a.n() != b.n() || a.k() != b.k()) {
        throw Error(ErrorCode::ShapeMismatch, std::string(what) + ": frames are " + shape(a.synthesis()) +
                                                  " and " + shape(b.synthesis()));
    }
}

Field combine(Field a, Field b) {
    return (a == Field::Real && b == Field::Real) ? Field::Real : Field::Complex;
}

}  // namespace

Index numerical_rank(const Matrix& m, double rank_tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Matrix> svd(m);
    const RealVector& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) return 0;
    const double cutoff = rank_tol * s(0);
    Index rank = 0;
    for (Index i = 0; i < s.size(); ++i) {
        if (s(i) > cutoff) ++rank;
    }
    return rank;
}

Matrix null_space(const Matrix& m, bool real, double rank_tol) {
    const Index cols = m.cols();
    if (real) {
        const RealMatrix re = m.real();
        Eigen::JacobiSVD<RealMatrix> svd(re, Eigen::ComputeFullV);
        const RealVector& s = svd.singularValues();
        Index rank = 0;
        if (s.size() > 0 && s(0) > 0.0) {
            for (Index i = 0; i < s.size(); ++i) {
                if (s(i) > rank_tol * s(0)) ++rank;
            }
        }
        return svd.matrixV().rightCols(cols - rank).cast<Scalar>();
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const RealVector& s = svd.singularValues();
    Index rank = 0;
    if (s.size() > 0 && s(0) > 0.0) {
        for (Index i = 0; i < s.size(); ++i) {
            if (s(i) > rank_tol * s(0)) ++rank;
        }
    }
    return svd.matrixV().rightCols(cols - rank);
}

Frame::Frame(Matrix synthesis, Field field) : synthesis_(std::move(synthesis)), field_(field) {
    op_.S = synthesis_ * synthesis_.adjoint();
    // Hermitian by construction; symmetrize away rounding before the eigensolve.
    op_.S = (0.5 * (op_.S + op_.S.adjoint())).eval();
    Eigen::SelfAdjointEigenSolver<Matrix> eig(op_.S, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success) {
        throw Error(ErrorCode::SingularOperator, "eigensolver failed on the frame operator");
    }
    op_.eigenvalues = eig.eigenvalues();
    op_.lower = op_.eigenvalues(0);
    op_.upper = op_.eigenvalues(op_.eigenvalues.size() - 1);
}

Frame make_frame(Matrix synthesis, Field field, double rank_tol) {
    const Index n = synthesis.rows();
    const Index k = synthesis.cols();
    if (n < 1 || k < n) {
        throw Error(ErrorCode::ShapeError, "a frame needs n >= 1 and k >= n vectors, got " + shape(synthesis));
    }
    if (!synthesis.allFinite()) {
        throw Error(ErrorCode::DomainError, "frame entries must be finite");
    }
    if (field == Field::Real) {
        if (!is_real_valued(synthesis)) {
            throw Error(ErrorCode::DomainError, "real frame has entries with nonzero imaginary part");
        }
    }
    const Index rank = numerical_rank(synthesis, rank_tol);
    if (rank < n) {
        throw Error(ErrorCode::NotAFrame, "vectors span a " + std::to_string(rank) + "-dimensional subspace of F^" +
                                              std::to_string(n));
    }
    return Frame(std::move(synthesis), field);
}

Frame make_frame(const RealMatrix& synthesis, double rank_tol) {
    return make_frame(Matrix(synthesis.cast<Scalar>()), Field::Real, rank_tol);
}

Frame with_synthesis(const Frame& like, Matrix synthesis) {
    const Field field = (like.field() == Field::Real && is_real_valued(synthesis)) ? Field::Real : Field::Complex;
    return make_frame(std::move(synthesis), field);
}

const FrameOperator& frame_operator(const Frame& f) { return f.frame_operator(); }

bool is_tight(const Frame& f, double tolerance) {
    const auto& op = f.frame_operator();
    return (op.upper - op.lower) / op.upper <= tolerance;
}

Frame canonical_dual(const Frame& f) {
    const auto& op = f.frame_operator();
    if (op.lower <= tol::rank_relative * op.upper) {
        throw Error(ErrorCode::SingularOperator, "frame operator is numerically singular");
    }
    Eigen::LLT<Matrix> llt(op.S);
    if (llt.info() != Eigen::Success) {
        throw Error(ErrorCode::SingularOperator, "frame operator is not positive definite");
    }
    Matrix dual = llt.solve(f.synthesis());
    if (f.field() == Field::Real) dual = dual.real().cast<Scalar>();
    return make_frame(std::move(dual), f.field());
}

bool is_dual(const Frame& f, const Frame& h, double tolerance) {
    require_same_shape(f, h, "is_dual");
    const Matrix residual = f.synthesis() * h.synthesis().adjoint() - Matrix::Identity(f.n(), f.n());
    return residual.cwiseAbs().maxCoeff() <= tolerance;
}

CrossGramian cross_gramian(const Frame& f, const Frame& g) {
    require_same_shape(f, g, "cross_gramian");
    return CrossGramian{f.synthesis().adjoint() * g.synthesis(), f.n(), combine(f.field(), g.field())};
}

DualFamily::DualFamily(const Frame& f)
    : frame_(f), base_(canonical_dual(f)), null_basis_(null_space(f.synthesis(), f.field() == Field::Real)) {}

Index DualFamily::real_dimension() const noexcept {
    const Index count = n() * codimension();
    return frame_.field() == Field::Real ? count : 2 * count;
}

Frame DualFamily::evaluate(const Matrix& params) const {
    if (params.rows() != n() || params.cols() != codimension()) {
        throw Error(ErrorCode::ShapeMismatch, "dual family parameters must be " + std::to_string(n()) + "x" +
                                                  std::to_string(codimension()));
    }
    if (codimension() == 0) return base_;
    Matrix h = base_.synthesis() + params * null_basis_.adjoint();
    return make_frame(std::move(h), (frame_.field() == Field::Real && is_real_valued(params)) ? Field::Real
                                                                                                 : Field::Complex);
}

Matrix DualFamily::parameters_of(const Frame& dual) const {
    require_same_shape(frame_, dual, "parameters_of");
    return (dual.synthesis() - base_.synthesis()) * null_basis_;
}

RealVector DualFamily::pack(const Matrix& params) const {
    const Index count = n() * codimension();
    RealVector x(real_dimension());
    const Eigen::Map<const Matrix> flat(params.data(), count, 1);
    x.head(count) = flat.real();
    if (frame_.field() == Field::Complex) x.tail(count) = flat.imag();
    return x;
}

Matrix DualFamily::unpack(const RealVector& coords) const {
    const Index count = n() * codimension();
    if (coords.size() != real_dimension()) {
        throw Error(ErrorCode::ShapeMismatch, "dual family coordinate vector has wrong length");
    }
    Matrix params(n(), codimension());
    for (Index i = 0; i < count; ++i) {
        const double im = frame_.field() == Field::Complex ? coords(count + i) : 0.0;
        params.data()[i] = Scalar(coords(i), im);
    }
    return params;
}

DualFamily dual_family(const Frame& f) { return DualFamily(f); }

Vector analysis_coefficients(const Frame& f, const Vector& v) {
    if (v.size() != f.n()) {
        throw Error(ErrorCode::ShapeMismatch, "vector has dimension " + std::to_string(v.size()) + ", frame lives in F^" +
                                                  std::to_string(f.n()));
    }
    return f.synthesis().adjoint() * v;
}

Vector reconstruct(const Frame& f, const Frame& g, const Vector& v) {
    require_same_shape(f, g, "reconstruct");
    return f.synthesis() * analysis_coefficients(g, v);
}

bool is_unitary(const Matrix& u, double tolerance) {
    if (u.rows() != u.cols()) return false;
    const Matrix residual = u.adjoint() * u - Matrix::Identity(u.rows(), u.cols());
    return residual.cwiseAbs().maxCoeff() <= tolerance;
}

Frame apply_unitary(const Frame& f, const Matrix& u, double tolerance) {
    if (u.rows() != f.n() || u.cols() != f.n()) {
        throw Error(ErrorCode::ShapeMismatch, "unitary must be " + std::to_string(f.n()) + "x" + std::to_string(f.n()));
    }
    if (!is_unitary(u, tolerance)) {
        throw Error(ErrorCode::NotUnitary, "U* U differs from the identity");
    }
    return with_synthesis(f, u * f.synthesis());
}

}  // namespace fpl
