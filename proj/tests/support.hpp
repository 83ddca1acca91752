#pragma once

#include <cstdint>
#include <string>

#include "fpl/fusion.hpp"
#include "fpl/random.hpp"

namespace support {

struct Instance {
    fpl::Index n;
    fpl::Index k;
    fpl::Field field;
    fpl::Rng rng;
};

// The i-th of the standard 200 property instances: n in {2,3,4}, n <= k <= n + 4,
// alternating fields, each with its own generator.
inline Instance instance(std::uint64_t seed, int i) {
    const fpl::Index n = 2 + i % 3;
    const fpl::Index k = n + (i / 3) % 5;
    const fpl::Field field = (i / 15) % 2 == 0 ? fpl::Field::Real : fpl::Field::Complex;
    return Instance{n, k, field, fpl::stream_rng(seed, static_cast<std::uint64_t>(i))};
}

inline constexpr int kInstances = 200;

inline std::string label(const Instance& in, int i) {
    return "instance " + std::to_string(i) + " (n=" + std::to_string(in.n) + ", k=" + std::to_string(in.k) + ", " +
           std::string(fpl::to_string(in.field)) + ")";
}

// Random subspaces of random dimension until they span.
inline fpl::FusionFrame random_fusion(fpl::Index n, fpl::Field field, fpl::Rng& rng) {
    std::uniform_int_distribution<fpl::Index> count(2, 4);
    std::uniform_int_distribution<fpl::Index> dim(1, n);
    for (;;) {
        std::vector<fpl::Matrix> bases;
        const fpl::Index k = count(rng);
        for (fpl::Index i = 0; i < k; ++i) bases.push_back(fpl::gaussian_matrix(n, std::min(dim(rng), n), field, rng));
        try {
            return fpl::make_fusion_frame(bases, field);
        } catch (const fpl::Error&) {
        }
    }
}

// Two orthogonal decompositions of F^n, each rotated: S = 2 I.
inline fpl::FusionFrame tight_fusion(fpl::Index n, fpl::Field field, fpl::Rng& rng) {
    std::vector<fpl::Matrix> bases;
    for (int rep = 0; rep < 2; ++rep) {
        const fpl::Matrix u = fpl::random_unitary(n, field, rng);
        std::uniform_int_distribution<fpl::Index> split(1, n - 1);
        const fpl::Index s = split(rng);
        bases.push_back(u.leftCols(s));
        bases.push_back(u.rightCols(n - s));
    }
    return fpl::make_fusion_frame(bases, field);
}

}  // namespace support
