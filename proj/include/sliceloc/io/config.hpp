#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "sliceloc/dqn/trainer.hpp"
#include "sliceloc/synth/generator.hpp"

namespace sliceloc::io {

/// Everything a train/eval run needs. Paths are stored as written; the
/// loader resolves relative ones against the config file's directory.
struct RunConfig {
  synth::SynthConfig synth;
  dqn::TrainConfig train;
  env::WindowSpec window{100, 64};
  nn::NetworkSpec network;  // input always equals 1×window
  std::string dataset;       // training dataset directory
  std::string eval_dataset;  // held-out dataset directory
  std::string output;        // checkpoint + logs directory

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Each parser rejects unknown keys and wrong types with a ConfigError whose
// key is the dotted path (e.g. "train.batch_size").
synth::SynthConfig synth_config_from_json(const nlohmann::json& j, const std::string& scope = "synth");
dqn::TrainConfig train_config_from_json(const nlohmann::json& j, const std::string& scope = "train");
nn::NetworkSpec network_from_json(const nlohmann::json& j, const env::WindowSpec& window,
                                  const std::string& scope = "network");
RunConfig run_config_from_json(const nlohmann::json& j);

nlohmann::json to_json(const synth::SynthConfig& c);
nlohmann::json to_json(const dqn::TrainConfig& c);
nlohmann::json to_json(const nn::NetworkSpec& spec);
nlohmann::json to_json(const RunConfig& c);

/// Parses, validates every section, and resolves relative paths.
RunConfig load_run_config(const std::filesystem::path& path);

}  // namespace sliceloc::io
