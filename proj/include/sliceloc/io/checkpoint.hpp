#pragma once

#include <filesystem>

#include "sliceloc/dqn/trainer.hpp"

namespace sliceloc::io {

inline constexpr int kCheckpointVersion = 1;
inline constexpr const char* kCheckpointManifest = "checkpoint.json";
inline constexpr const char* kCheckpointBlob = "params.mpt";

struct Checkpoint {
  nn::NetworkSpec network;
  nn::ParamSet params;
  dqn::TrainingMeta meta;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

/// A checkpoint is a directory holding checkpoint.json (architecture,
/// parameter table with byte offsets into the blob, training meta, format
/// version) and params.mpt (all parameters concatenated, in name order, as a
/// 1-D float tensor).
void save_checkpoint(const std::filesystem::path& directory, const Checkpoint& checkpoint);

/// Throws VersionError on a format-version mismatch and ParseError on
/// malformed or inconsistent content.
Checkpoint load_checkpoint(const std::filesystem::path& directory);

dqn::QNetwork to_network(const Checkpoint& checkpoint);

}  // namespace sliceloc::io
