#pragma once

#include <cstdint>
#include <random>

#include "fpl/frame.hpp"

namespace fpl {

using Rng = std::mt19937_64;

/// Independent generator for item `index` of a run seeded with `seed`, so
/// results do not depend on how items are scheduled across threads.
Rng stream_rng(std::uint64_t seed, std::uint64_t index);

/// i.i.d. standard normal entries; complex entries are (a + ib)/sqrt(2).
Matrix gaussian_matrix(Index rows, Index cols, Field field, Rng& rng);

/// Gaussian synthesis matrix, redrawn until it spans F^n.
Frame random_frame(Index n, Index k, Field field, Rng& rng);

/// Haar-distributed orthogonal (real) or unitary (complex) n x n matrix.
Matrix random_unitary(Index n, Field field, Rng& rng);

/// Real harmonic frame: rows cos / sin of 2 pi m j / k for m = 1..n/2, plus a
/// constant row when n is odd. Equal norm (||f_j||^2 = n/2) and tight.
/// Needs k > 2 floor(n/2).
Frame harmonic_frame(Index n, Index k);

/// Harmonic frame under a random rotation and a random positive scale.
Frame random_equal_norm_tight_frame(Index n, Index k, Rng& rng);

}  // namespace fpl
