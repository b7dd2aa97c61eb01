#include <algorithm>
#include <fstream>
#include <sstream>

#include "clusterlab/cli.hpp"
#include "clusterlab/dataset_io.hpp"
#include "json.hpp"

namespace clusterlab::cli {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view text) {
  if (text == "table") return Format::table;
  if (text == "records") return Format::records;
  return std::nullopt;
}

ExperimentConfig default_config() {
  ExperimentConfig config;
  config.algorithms = classification_algorithms();
  const auto make = [](const char* kind) {
    GeneratorSpec spec;
    spec.kind = kind;
    return spec;
  };
  for (auto [k, n] : {std::pair{2, 6}, std::pair{3, 7}}) {
    GeneratorSpec nice = make("niceBlocks");
    nice.k = k;
    nice.n = n;
    nice.gap = 2.0;
    config.generators.push_back(nice);
    GeneratorSpec perfect = make("perfectUniform");
    perfect.k = k;
    perfect.n = n;
    // Below the planted count every union of planted clusters ties exactly
    // under every weighting, so probing there says nothing about weights.
    perfect.ks = {k};
    config.generators.push_back(perfect);
  }
  for (std::size_t n : {6, 7}) {
    GeneratorSpec random = make("genericRandom");
    random.n = n;
    config.generators.push_back(random);
    GeneratorSpec similarity = make("randomSimilarity");
    similarity.n = n;
    config.generators.push_back(similarity);
  }
  return config;
}

namespace {

GeneratorSpec generator_from_json(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("generator entries need a \"kind\"");
  GeneratorSpec spec;
  spec.kind = j.at("kind").get<std::string>();
  spec.k = j.value("k", spec.k);
  spec.n = j.value("n", spec.n);
  spec.within_lo = j.value("withinLo", spec.within_lo);
  spec.within_hi = j.value("withinHi", spec.within_hi);
  spec.lambda = j.value("lambda", spec.lambda);
  spec.gap = j.value("gap", spec.gap);
  if (j.contains("positions")) spec.positions = j.at("positions").get<std::vector<double>>();
  if (j.contains("file")) {
    spec.file = j.at("file").get<std::string>();
    if (spec.file.is_relative() && !base_dir.empty()) spec.file = base_dir / spec.file;
  }
  if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("ks")) spec.ks = j.at("ks").get<std::vector<int>>();
  static const std::vector<std::string> kinds{"perfectUniform", "niceBlocks", "genericRandom", "randomSimilarity",
                                              "line", "custom"};
  if (std::find(kinds.begin(), kinds.end(), spec.kind) == kinds.end()) {
    throw InvalidInput("unknown generator kind '" + spec.kind + "'");
  }
  return spec;
}

}  // namespace

GeneratorSpec parse_generator(const std::string& json_text) {
  try {
    return generator_from_json(json::parse(json_text), {});
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed generator spec: ") + e.what());
  }
}

ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  ExperimentConfig config = default_config();
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw InvalidInput("config must be a JSON object");
    if (j.contains("algorithms")) {
      config.algorithms.clear();
      for (const auto& name : j.at("algorithms")) config.algorithms.push_back(AlgorithmHandle::parse(name.get<std::string>()));
    }
    if (j.contains("generators")) {
      config.generators.clear();
      for (const auto& g : j.at("generators")) config.generators.push_back(generator_from_json(g, base_dir));
    }
    config.seed = j.value("seed", config.seed);
    config.budget = j.value("budget", config.budget);
    config.range_samples = j.value("rangeSamples", config.range_samples);
    config.random_samples = j.value("randomSamples", config.random_samples);
    if (j.contains("ks")) config.ks = j.at("ks").get<std::vector<int>>();
    if (j.contains("out")) config.out = std::filesystem::path(j.at("out").get<std::string>());
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed config: ") + e.what());
  }
  if (config.algorithms.empty()) throw InvalidInput("config lists no algorithms");
  if (config.generators.empty()) throw InvalidInput("config lists no generators");
  return config;
}

ExperimentConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.parent_path());
}

NamedGenerated materialize(const GeneratorSpec& spec, std::uint64_t default_seed) {
  const std::uint64_t seed = spec.seed.value_or(default_seed);
  if (spec.kind == "perfectUniform") {
    auto g = perfect_uniform(spec.k, spec.n, spec.within_lo, spec.within_hi, spec.lambda, seed);
    return {g.generator, std::move(g)};
  }
  if (spec.kind == "niceBlocks") {
    auto g = nice_blocks(spec.k, spec.n, spec.gap, seed);
    return {g.generator, std::move(g)};
  }
  if (spec.kind == "genericRandom") {
    auto g = generic_random(spec.n, seed);
    return {g.generator, std::move(g)};
  }
  if (spec.kind == "randomSimilarity") {
    auto g = random_similarity(spec.n, seed);
    return {g.generator, std::move(g)};
  }
  if (spec.kind == "line") {
    auto g = line(spec.positions);
    return {g.generator, std::move(g)};
  }
  if (spec.kind == "custom") {
    auto doc = read_dataset(spec.file);
    std::string name = "custom(" + spec.file.filename().string() + ")";
    return {name, GeneratedDataset{std::move(doc.dataset), std::move(doc.planted), name}};
  }
  throw InvalidInput("unknown generator kind '" + spec.kind + "'");
}

}  // namespace clusterlab::cli
