#pragma once

// Command implementations behind the clusterlab executable. Each command
// returns the text it would print so tests can drive it without a process.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "clusterlab/generators.hpp"
#include "clusterlab/probe.hpp"

namespace clusterlab::cli {

enum class Format { table, records };
std::optional<Format> parse_format(std::string_view text);

/// One dataset source in an experiment config.
///   perfectUniform  k, n, withinLo, withinHi, lambda, seed
///   niceBlocks      k, n, gap, seed
///   genericRandom   n, seed
///   randomSimilarity n, seed
///   line            positions
///   custom          file
struct GeneratorSpec {
  std::string kind;
  int k = 2;
  std::size_t n = 6;
  double within_lo = 4.0;
  double within_hi = 6.0;
  double lambda = 1.0;
  double gap = 2.0;
  std::vector<double> positions;
  std::filesystem::path file;
  std::optional<std::uint64_t> seed;  // falls back to the config seed
  std::vector<int> ks;                 // overrides the config ks for this dataset
};

struct ExperimentConfig {
  std::vector<AlgorithmHandle> algorithms;
  std::vector<GeneratorSpec> generators;
  std::uint64_t seed = 1;
  std::size_t budget = 2000;
  std::size_t range_samples = 100;
  std::size_t random_samples = 100;
  std::vector<int> ks{2, 3};
  std::optional<std::filesystem::path> out;
};

/// Reproduces the twelve-algorithm classification grid.
ExperimentConfig default_config();
/// JSON config; absent fields keep their default_config() values. Relative
/// custom file paths resolve against base_dir.
ExperimentConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
ExperimentConfig read_config(const std::filesystem::path& path);

/// Parses a generator given as JSON, e.g. {"kind":"niceBlocks","k":3,"n":9,"gap":5}.
GeneratorSpec parse_generator(const std::string& json_text);

struct NamedGenerated {
  std::string name;
  GeneratedDataset generated;
};

NamedGenerated materialize(const GeneratorSpec& spec, std::uint64_t default_seed);

struct CommandResult {
  std::string text;  // report on stdout (or in --out)
  int exit_code = 0;
};

CommandResult cmd_generate(const GeneratorSpec& spec, std::uint64_t seed);

struct RunRequest {
  AlgorithmHandle algorithm;
  std::filesystem::path dataset;
  int k = 2;
  Format format = Format::table;
};
CommandResult cmd_run(const RunRequest& request);

/// Throws InconsistencyError on a certificate/search conflict.
CommandResult cmd_classify(const ExperimentConfig& config, Format format);

struct ProbeRequest {
  AlgorithmHandle algorithm;
  std::filesystem::path dataset;
  int k = 2;
  /// Labels of the clustering to probe; defaults to the dataset's planted
  /// clustering, then to the algorithm's unit-weight output.
  std::optional<std::vector<int>> clustering;
  std::size_t budget = 2000;
  std::uint64_t seed = 1;
  Format format = Format::table;
};
/// Throws InconsistencyError on a certificate/search conflict.
CommandResult cmd_probe(const ProbeRequest& request);

// Report rendering.
std::string format_weights(std::span<const double> weights);
std::string render_classification(const ExperimentConfig& config, const std::vector<CategoryReport>& reports,
                                  Format format);
std::string render_verdict(const AlgorithmHandle& a, const Verdict& verdict, bool certified, Format format);

}  // namespace clusterlab::cli
