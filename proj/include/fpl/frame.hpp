#pragma once

#include "fpl/types.hpp"

namespace fpl {

/// Frame operator S = F F* of a frame, with its spectrum.
struct FrameOperator {
    Matrix S;
    RealVector eigenvalues;  // ascending
    double lower = 0.0;      // A, smallest eigenvalue
    double upper = 0.0;      // B, largest eigenvalue
};

/// A finite frame for F^n: the n x k synthesis matrix whose columns are the
/// frame vectors. Immutable; the frame operator is computed on construction.
///
/// Inner products are conjugate-linear in the first argument,
/// <f, g> = f* g, so the (i, j) cross-Gramian entry <f_i, g_j> is (F* G)_ij.
class Frame {
public:
    Index n() const noexcept { return synthesis_.rows(); }
    Index k() const noexcept { return synthesis_.cols(); }
    Field field() const noexcept { return field_; }
    const Matrix& synthesis() const noexcept { return synthesis_; }
    const FrameOperator& frame_operator() const noexcept { return op_; }

    /// The i-th frame vector.
    Vector vector(Index i) const { return synthesis_.col(i); }

private:
    friend Frame make_frame(Matrix synthesis, Field field, double rank_tol);

    Frame(Matrix synthesis, Field field);

    Matrix synthesis_;
    Field field_;
    FrameOperator op_;
};

/// Validates and wraps a synthesis matrix.
/// Throws ShapeError when k < n or n == 0, NotAFrame when the columns do not
/// span F^n (rank measured by SVD with cutoff rank_tol * sigma_max), and
/// DomainError when a Real-tagged matrix has imaginary parts.
Frame make_frame(Matrix synthesis, Field field, double rank_tol = tol::rank_relative);
Frame make_frame(const RealMatrix& synthesis, double rank_tol = tol::rank_relative);

/// Numerical rank with singular values below rank_tol * sigma_max treated as zero.
Index numerical_rank(const Matrix& m, double rank_tol = tol::rank_relative);

/// Orthonormal basis of {c : m c = 0}; real-valued when `real` is set.
Matrix null_space(const Matrix& m, bool real, double rank_tol = tol::rank_relative);

const FrameOperator& frame_operator(const Frame& f);

bool is_tight(const Frame& f, double tolerance = tol::tight);

/// {S^-1 f_i}.
Frame canonical_dual(const Frame& f);

/// max |F H* - I| <= tolerance.
bool is_dual(const Frame& f, const Frame& h, double tolerance = tol::dual);

/// k x k matrix of inner products <f_i, g_j>.
struct CrossGramian {
    Matrix entries;
    Index n = 0;  // dimension of the space the two frames live in
    Field field = Field::Real;

    Index k() const noexcept { return entries.rows(); }
};

CrossGramian cross_gramian(const Frame& f, const Frame& g);

/// All duals of a frame: H(L) = canonical + L N*, N an orthonormal basis of
/// ker(F). L is n x (k - n); over the reals both N and L are real.
class DualFamily {
public:
    explicit DualFamily(const Frame& f);

    const Frame& frame() const noexcept { return frame_; }
    const Frame& base() const noexcept { return base_; }
    const Matrix& null_basis() const noexcept { return null_basis_; }

    Index n() const noexcept { return frame_.n(); }
    Index k() const noexcept { return frame_.k(); }
    /// Columns of the parameter matrix L.
    Index codimension() const noexcept { return k() - n(); }
    /// Number of real parameters: n(k - n), doubled over the complex field.
    Index real_dimension() const noexcept;

    Frame evaluate(const Matrix& params) const;
    /// Parameters of a dual already known to lie in the family: L = (H - base) N.
    Matrix parameters_of(const Frame& dual) const;

    /// Real coordinates x <-> L. Over C the layout is [vec(Re L); vec(Im L)].
    RealVector pack(const Matrix& params) const;
    Matrix unpack(const RealVector& coords) const;

private:
    Frame frame_;
    Frame base_;
    Matrix null_basis_;
};

DualFamily dual_family(const Frame& f);

/// Analysis operator applied to f: entries <f_i, f> = f_i* f.
Vector analysis_coefficients(const Frame& f, const Vector& v);

/// sum_i <g_i, v> f_i = F G* v; returns v whenever G is a dual of F.
Vector reconstruct(const Frame& f, const Frame& g, const Vector& v);

/// Frame with vectors U f_i. Throws NotUnitary unless max |U* U - I| <= tolerance.
Frame apply_unitary(const Frame& f, const Matrix& u, double tolerance = tol::unitary);

bool is_unitary(const Matrix& u, double tolerance = tol::unitary);

/// Frame built from the given vectors without copying the tag logic at each call site.
Frame with_synthesis(const Frame& like, Matrix synthesis);

}  // namespace fpl
