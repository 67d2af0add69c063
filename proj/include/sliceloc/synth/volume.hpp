#pragma once

#include <filesystem>
#include <vector>

#include "sliceloc/env/mdp.hpp"

namespace sliceloc::synth {

/// CT-like volume in Hounsfield units, stored z-major ([z][y][x]).
struct Volume {
  int nz = 0;
  int ny = 0;
  int nx = 0;
  std::vector<float> voxels;
  double z_spacing_mm = 1.0;

  float at(int z, int y, int x) const {
    return voxels[(static_cast<std::size_t>(z) * ny + y) * nx + x];
  }
  float& at(int z, int y, int x) { return voxels[(static_cast<std::size_t>(z) * ny + y) * nx + x]; }

  friend bool operator==(const Volume&, const Volume&) = default;
};

void validate(const Volume& volume);

inline constexpr float kHuWindowLow = 100.0f;
inline constexpr float kHuWindowHigh = 1500.0f;

/// Linear interpolation along z to 1 mm slices. The output has
/// round(nz·spacing) slices (at least one) whose end points coincide with the
/// input's first and last slice.
Volume resample_z(const Volume& volume);

/// Frontal maximum-intensity projection (max over y), clamped to the
/// [100, 1500] HU window and rescaled to [0, 1]. The result is unannotated and
/// inherits the volume's z spacing.
env::MipImage mip_frontal(const Volume& volume);

/// Volume file = float tensor [z, y, x] plus `<path>.json` with z_spacing_mm.
void save_volume(const std::filesystem::path& path, const Volume& volume);
Volume load_volume(const std::filesystem::path& path);

}  // namespace sliceloc::synth
