#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "sliceloc/env/mdp.hpp"

namespace sliceloc::synth {

struct DatasetEntry {
  std::string id;
  std::string mip_path;  // relative to the dataset directory
  env::MipImage image;

  friend bool operator==(const DatasetEntry&, const DatasetEntry&) = default;
};

inline constexpr const char* kManifestName = "manifest.csv";
inline constexpr const char* kManifestHeader = "id,mip_path,target_row,spacing_mm";

/// Writes one MIP tensor per image plus manifest.csv. Ids are img00000,
/// img00001, ... in input order. Returns the written entries.
std::vector<DatasetEntry> write_dataset(const std::vector<env::MipImage>& images,
                                        const std::filesystem::path& directory);

/// Reads manifest.csv and every referenced tensor. Malformed content raises
/// ParseError with the file and byte offset.
std::vector<DatasetEntry> read_dataset(const std::filesystem::path& directory);

/// Single annotated-or-not MIP as a float tensor [height, width].
void save_mip(const std::filesystem::path& path, const env::MipImage& image);
env::MipImage load_mip(const std::filesystem::path& path);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

}  // namespace sliceloc::synth
