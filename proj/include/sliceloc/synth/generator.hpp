#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sliceloc/env/mdp.hpp"

namespace sliceloc::synth {

/// Geometry of the procedurally drawn spine phantom. Rows are millimetres.
struct SynthConfig {
  int height_min = 300;
  int height_max = 300;
  int width = 64;
  int vertebra_period = 24;
  int vertebra_half_height = 8;
  int lumbar_count = 5;  // vertebrae between the pelvis and the first rib-bearing one
  double blob_intensity_min = 0.55;
  double blob_intensity_max = 0.85;
  double rib_region_fraction = 0.8;  // lateral span of the ribs as a fraction of width
  double rib_intensity = 0.45;
  double pelvis_top_min = 0.72;  // pelvis top row as a fraction of height
  double pelvis_top_max = 0.85;
  double pelvis_intensity = 0.65;
  int shoulder_rows = 30;
  double shoulder_intensity = 0.5;
  double noise_sigma = 0.03;
  std::uint64_t seed = 0;

  friend bool operator==(const SynthConfig&, const SynthConfig&) = default;
};

/// Which vertebra above the pelvis carries the target (1 = the lowest).
inline constexpr int kTargetLevelAbovePelvis = 3;

/// Throws ConfigError naming the offending field.
void validate(const SynthConfig& config);

struct SyntheticImage {
  env::MipImage image;
  std::vector<int> vertebra_centers;  // bottom-up, index 0 sits just above the pelvis
  int pelvis_top = 0;
};

/// Deterministic in (config, rng state). The target row is the centre of the
/// third vertebra above the pelvis.
SyntheticImage generate_synthetic(const SynthConfig& config, std::mt19937_64& rng);

/// Convenience: `count` images from a generator seeded with config.seed.
std::vector<env::MipImage> generate_dataset(const SynthConfig& config, int count);

}  // namespace sliceloc::synth
