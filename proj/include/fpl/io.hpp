#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpl/fusion.hpp"

namespace fpl::io {

using Json = nlohmann::json;

/// Frame document:
///   {"field": "real"|"complex", "n": N, "k": K, "vectors": [[...], ...]}
/// `vectors` lists the K columns, each of length N; complex entries are [re, im].
Frame frame_from_json(const Json& doc);
Json frame_to_json(const Frame& f);

/// A bare matrix in the same column-major layout.
Matrix matrix_from_columns(const Json& columns, Index rows, Field field);
Json matrix_to_columns(const Matrix& m, Field field);

struct LoadedFusion {
    FusionFrame fusion;
    /// Indices of subspaces whose supplied basis was off orthonormal by more than 1e-8.
    std::vector<Index> adjusted;
};

/// Fusion document:
///   {"n": N, "field": ..., "subspaces": [{"basis": [[...columns...]]}, ...]}
/// Bases are orthonormalised on load.
LoadedFusion fusion_from_json(const Json& doc);
Json fusion_to_json(const FusionFrame& p);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& doc);

Frame read_frame(const std::filesystem::path& path);
LoadedFusion read_fusion(const std::filesystem::path& path);

}  // namespace fpl::io
