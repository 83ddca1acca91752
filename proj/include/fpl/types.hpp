#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace fpl {

/// All frames are stored over complex doubles; the Field tag records whether
/// the data is known to be real-valued.
using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class Field { Real, Complex };

std::string_view to_string(Field field);
Field parse_field(std::string_view text);

/// Default numeric thresholds. Every operation takes its own tolerance
/// argument; these are the values used when callers do not override them.
namespace tol {
inline constexpr double rank_relative = 1e-10;  // singular value cutoff, relative to sigma_max
inline constexpr double tight = 1e-9;           // (B - A) / B
inline constexpr double dual = 1e-9;            // max |F H* - I|
inline constexpr double unitary = 1e-9;         // max |U* U - I|
inline constexpr double equality = 1e-7;        // "if and only if" equality cases
inline constexpr double bound_slack = 1e-9;     // computed bounds may be undershot by this much
inline constexpr double subspace = 1e-8;        // max |P1 - P2| for subspace equality
}  // namespace tol

enum class ErrorCode {
    ShapeError,
    ShapeMismatch,
    NotAFrame,
    NotADual,
    NotUnitary,
    NotAFusionFrame,
    EmptySubspace,
    DomainError,
    IndexError,
    SingularOperator,
    SolverFailure,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorCode code);

/// Validation failures (bad input) as opposed to numeric or solver failures.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline bool is_real_valued(const Matrix& m, double tolerance = 0.0) {
    return m.size() == 0 || m.imag().cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace fpl
