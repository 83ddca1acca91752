#include "fpl/random.hpp"

#include <cmath>
#include <numbers>

namespace fpl {

Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x6670u};
    return Rng(seq);
}

Matrix gaussian_matrix(Index rows, Index cols, Field field, Rng& rng) {
    std::normal_distribution<double> normal;
    Matrix m(rows, cols);
    const double scale = field == Field::Real ? 1.0 : std::numbers::sqrt2 / 2.0;
    for (Index j = 0; j < cols; ++j) {
        for (Index i = 0; i < rows; ++i) {
            if (field == Field::Real) {
                m(i, j) = Scalar(normal(rng), 0.0);
            } else {
                const double re = normal(rng);
                m(i, j) = scale * Scalar(re, normal(rng));
            }
        }
    }
    return m;
}

Frame random_frame(Index n, Index k, Field field, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Matrix m = gaussian_matrix(n, k, field, rng);
        if (numerical_rank(m) == n) return make_frame(std::move(m), field);
    }
    throw Error(ErrorCode::DomainError, "could not draw a spanning Gaussian frame");
}

Matrix random_unitary(Index n, Field field, Rng& rng) {
    const Matrix g = gaussian_matrix(n, n, field, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase of each column so the distribution is Haar.
    for (Index j = 0; j < n; ++j) {
        const Scalar d = r(j, j);
        const double mod = std::abs(d);
        if (mod > 0.0) q.col(j) *= d / mod;
    }
    if (field == Field::Real) q = q.real().cast<Scalar>();
    return q;
}

Frame harmonic_frame(Index n, Index k) {
    const Index pairs = n / 2;
    if (n < 1 || k <= 2 * pairs || k < n) {
        throw Error(ErrorCode::DomainError, "harmonic frame needs k > 2 floor(n/2) and k >= n");
    }
    RealMatrix f(n, k);
    for (Index j = 0; j < k; ++j) {
        Index row = 0;
        for (Index m = 1; m <= pairs; ++m) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(m * j) / static_cast<double>(k);
            f(row++, j) = std::cos(angle);
            f(row++, j) = std::sin(angle);
        }
        if (n % 2 == 1) f(row, j) = std::numbers::sqrt2 / 2.0;
    }
    return make_frame(f);
}

Frame random_equal_norm_tight_frame(Index n, Index k, Rng& rng) {
    const Frame base = harmonic_frame(n, k);
    std::uniform_real_distribution<double> scale(0.5, 2.0);
    const Matrix u = random_unitary(n, Field::Real, rng);
    return make_frame(Matrix(scale(rng) * u * base.synthesis()), Field::Real);
}

}  // namespace fpl
