#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <random>

#include "sliceloc/dqn/trainer.hpp"
#include "sliceloc/errors.hpp"
#include "sliceloc/eval/metrics.hpp"
#include "sliceloc/eval/rollout.hpp"
#include "sliceloc/eval/value_iteration.hpp"
#include "sliceloc/io/checkpoint.hpp"
#include "sliceloc/io/config.hpp"
#include "sliceloc/synth/dataset.hpp"
#include "sliceloc/synth/generator.hpp"
#include "sliceloc/synth/volume.hpp"

namespace py = pybind11;
using namespace sliceloc;

namespace {

using FloatArray = py::array_t<float, py::array::c_style | py::array::forcecast>;

env::MipImage image_from_array(const FloatArray& pixels, int target_row) {
  if (pixels.ndim() != 2) throw ContractError("image must be a 2-D array");
  env::MipImage m;
  m.height = static_cast<int>(pixels.shape(0));
  m.width = static_cast<int>(pixels.shape(1));
  m.pixels.assign(pixels.data(), pixels.data() + pixels.size());
  m.target_row = target_row;
  return m;
}

py::array_t<float> to_array(const std::vector<float>& data, std::vector<py::ssize_t> shape) {
  py::array_t<float> out(shape);
  std::copy(data.begin(), data.end(), out.mutable_data());
  return out;
}

py::array_t<float> image_array(const env::MipImage& m) { return to_array(m.pixels, {m.height, m.width}); }

py::list images_to_list(const std::vector<env::MipImage>& images) {
  py::list out;
  for (const auto& m : images) out.append(py::make_tuple(image_array(m), m.target_row));
  return out;
}

py::dict trace_to_dict(const eval::EpisodeTrace& t) {
  py::list steps;
  for (const auto& s : t.steps)
    steps.append(py::make_tuple(s.position, env::to_index(s.action), s.q[0], s.q[1]));
  py::dict d;
  d["start"] = t.start;
  d["predicted_row"] = t.predicted_row;
  d["termination"] = eval::to_string(t.termination);
  d["steps"] = steps;
  return d;
}

// Trained or loaded agent bound to its checkpoint metadata.
class Agent {
 public:
  explicit Agent(io::Checkpoint ck) : ck_(std::move(ck)), net_(io::to_network(ck_)) {}

  static Agent load(const std::filesystem::path& dir) { return Agent(io::load_checkpoint(dir)); }

  void save(const std::filesystem::path& dir) const { io::save_checkpoint(dir, ck_); }

  std::pair<float, float> q_values(const FloatArray& pixels, int row) const {
    const auto q = net_.q_values(env::extract_state(image_from_array(pixels, -1), row, net_.window()));
    return {q[0], q[1]};
  }

  py::dict localize(const FloatArray& pixels, std::optional<int> start, std::uint64_t seed) const {
    const env::MipImage m = image_from_array(pixels, -1);
    env::validate(m, false);
    int s = 0;
    if (start) {
      s = *start;
    } else {
      std::mt19937_64 rng(seed);
      s = std::uniform_int_distribution<int>(0, m.height - 1)(rng);
    }
    return trace_to_dict(eval::greedy_rollout(net_, m, s));
  }

  std::pair<int, int> window() const { return {net_.window().rows, net_.window().cols}; }
  const dqn::TrainingMeta& meta() const { return ck_.meta; }

 private:
  io::Checkpoint ck_;
  dqn::QNetwork net_;
};

py::list log_to_list(const std::vector<dqn::EpisodeLog>& log) {
  py::list out;
  for (const auto& e : log) {
    py::dict d;
    d["episode"] = e.episode;
    d["steps"] = e.steps;
    d["total_reward"] = e.total_reward;
    d["terminal"] = e.terminal;
    d["epsilon"] = e.epsilon;
    d["mean_loss"] = e.mean_loss;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_sliceloc, m) {
  m.doc() = "Slice localisation by deep Q-learning over frontal MIP images";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  m.def(
      "synthesize",
      [](int count, std::uint64_t seed, int height) {
        synth::SynthConfig c;
        c.seed = seed;
        c.height_min = c.height_max = height;
        return images_to_list(synth::generate_dataset(c, count));
      },
      py::arg("count"), py::arg("seed") = 0, py::arg("height") = 300,
      "Synthetic annotated MIP images as (pixels, target_row) pairs.");

  m.def(
      "line_dataset", [](int height) { return images_to_list(eval::make_line_dataset(height)); },
      py::arg("height"), "Miniature line images, one per goal row.");

  m.def(
      "read_dataset",
      [](const std::filesystem::path& dir) {
        std::vector<env::MipImage> images;
        for (auto& e : synth::read_dataset(dir)) images.push_back(std::move(e.image));
        return images_to_list(images);
      },
      py::arg("directory"));

  m.def(
      "write_dataset",
      [](const std::vector<std::pair<FloatArray, int>>& images, const std::filesystem::path& dir) {
        std::vector<env::MipImage> out;
        for (const auto& [pixels, target] : images) out.push_back(image_from_array(pixels, target));
        return synth::write_dataset(out, dir).size();
      },
      py::arg("images"), py::arg("directory"), "Write (pixels, target_row) pairs as a dataset directory.");

  m.def(
      "mip",
      [](const FloatArray& volume, double z_spacing_mm) {
        if (volume.ndim() != 3) throw ContractError("volume must be a [z, y, x] array");
        synth::Volume v{static_cast<int>(volume.shape(0)), static_cast<int>(volume.shape(1)),
                        static_cast<int>(volume.shape(2)),
                        std::vector<float>(volume.data(), volume.data() + volume.size()), z_spacing_mm};
        return image_array(synth::mip_frontal(synth::resample_z(v)));
      },
      py::arg("volume"), py::arg("z_spacing_mm") = 1.0,
      "Resample a HU volume to 1 mm slices and take the windowed frontal MIP.");

  m.def(
      "extract_state",
      [](const FloatArray& pixels, int row, int rows, int cols) {
        const auto o = env::extract_state(image_from_array(pixels, -1), row, {rows, cols});
        return to_array(o.data, {rows, cols});
      },
      py::arg("pixels"), py::arg("row"), py::arg("rows") = 100, py::arg("cols") = 64);

  m.def(
      "step",
      [](int height, int goal, int position, int action) {
        const env::MipImage image = eval::make_line_image(height, goal);
        env::EnvCursor c(image, position, {3, 2});
        const auto out = c.step(env::action_from_index(action));
        return py::make_tuple(out.next_position, out.reward, out.terminal, out.blocked);
      },
      py::arg("height"), py::arg("goal"), py::arg("position"), py::arg("action"),
      "One transition on a line of `height` rows: (next_row, reward, terminal, blocked).");

  m.def(
      "value_iteration",
      [](int length, int goal, double gamma, double tol) {
        const auto t = eval::value_iteration(length, goal, gamma, tol);
        py::array_t<double> out(std::vector<py::ssize_t>{length, 2});
        auto q = out.mutable_unchecked<2>();
        for (int r = 0; r < length; ++r)
          for (int a = 0; a < 2; ++a) q(r, a) = t.values[r][a];
        return out;
      },
      py::arg("length"), py::arg("goal"), py::arg("gamma") = 0.9, py::arg("tol") = 1e-12);

  m.def(
      "metrics",
      [](const std::vector<double>& errors_mm) {
        const auto e = eval::compute_metrics(errors_mm);
        py::dict d;
        d["mean"] = e.mean;
        d["std"] = e.std;
        d["median"] = e.median;
        d["max"] = e.max;
        d["count_gt_10mm"] = e.count_gt_10mm;
        d["summary"] = eval::format_summary(e);
        return d;
      },
      py::arg("errors_mm"));

  py::class_<Agent>(m, "Agent")
      .def_static("load", &Agent::load, py::arg("directory"))
      .def("save", &Agent::save, py::arg("directory"))
      .def("q_values", &Agent::q_values, py::arg("pixels"), py::arg("row"))
      .def("localize", &Agent::localize, py::arg("pixels"), py::arg("start") = py::none(),
           py::arg("seed") = 0)
      .def_property_readonly("window", &Agent::window)
      .def_property_readonly("gradient_steps", [](const Agent& a) { return a.meta().gradient_steps; })
      .def_property_readonly("episodes", [](const Agent& a) { return a.meta().episodes; });

  m.def(
      "train",
      [](const std::filesystem::path& config, std::optional<std::uint64_t> seed,
         std::optional<int> episodes, std::optional<std::filesystem::path> dataset) {
        const io::RunConfig rc = io::load_run_config(config);
        dqn::TrainConfig t = rc.train;
        if (seed) t.seed = *seed;
        if (episodes) t.episodes = *episodes;
        const std::filesystem::path dir = dataset ? *dataset : std::filesystem::path(rc.dataset);
        std::vector<env::MipImage> images;
        for (auto& e : synth::read_dataset(dir)) images.push_back(std::move(e.image));
        dqn::Trainer trainer(t, rc.network, std::move(images));
        std::vector<dqn::EpisodeLog> log;
        {
          py::gil_scoped_release release;
          log = trainer.run();
        }
        return py::make_tuple(Agent(io::Checkpoint{rc.network, trainer.policy().params(), trainer.meta()}),
                              log_to_list(log));
      },
      py::arg("config"), py::arg("seed") = py::none(), py::arg("episodes") = py::none(),
      py::arg("dataset") = py::none(), "Train from a run config; returns (agent, episode log).");
}
