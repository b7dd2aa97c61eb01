// clusterlab: generate datasets, run algorithms, probe weight response and
// classify algorithms.
//
// Exit status: 0 success, 1 usage or input error, 2 certificate/search
// inconsistency.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "clusterlab/cli.hpp"
#include "clusterlab/dataset_io.hpp"

namespace cl = clusterlab;
namespace cli = clusterlab::cli;

namespace {

std::vector<int> parse_labels(const std::string& text) {
  std::vector<int> labels;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      labels.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw cl::InvalidInput("--clustering expects comma-separated integer labels");
    }
  }
  return labels;
}

cli::Format parse_format_flag(const std::string& text) {
  if (auto f = cli::parse_format(text)) return *f;
  throw cl::InvalidInput("--format must be table or records");
}

void emit(const cli::CommandResult& result, const std::string& out) {
  if (out.empty()) {
    std::cout << result.text;
  } else {
    cl::write_text_atomically(out, result.text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted clustering laboratory"};
  app.require_subcommand(1);

  std::size_t max_n = 0;
  app.add_option("--max-n", max_n, "Enumeration cap for exact solvers (overrides CLUSTERLAB_MAX_N)")
      ->check(CLI::PositiveNumber);

  std::string out, format = "table", algorithm, dataset, clustering, config_path;
  std::uint64_t seed = 1;
  std::size_t budget = 2000;
  int k = 2;
  cli::GeneratorSpec spec;
  std::string positions;

  auto* generate = app.add_subcommand("generate", "Write a synthetic dataset");
  generate->add_option("kind", spec.kind, "perfectUniform | niceBlocks | genericRandom | randomSimilarity | line")
      ->required();
  generate->add_option("--k", spec.k, "Planted cluster count");
  generate->add_option("--n", spec.n, "Element count");
  generate->add_option("--within-lo", spec.within_lo);
  generate->add_option("--within-hi", spec.within_hi);
  generate->add_option("--lambda", spec.lambda, "Cross-cluster similarity");
  generate->add_option("--gap", spec.gap, "Block separation beyond the diameter");
  generate->add_option("--positions", positions, "Comma-separated positions for line");
  generate->add_option("--seed", seed);
  generate->add_option("--out", out);

  auto* run = app.add_subcommand("run", "Run one algorithm on a dataset file");
  run->add_option("--algorithm", algorithm)->required();
  run->add_option("--dataset", dataset)->required();
  run->add_option("--k", k, "Cluster count (cut level for hierarchical algorithms)");
  run->add_option("--format", format);
  run->add_option("--out", out);

  auto* probe = app.add_subcommand("probe", "Search for witness weightings on one clustering");
  probe->add_option("--algorithm", algorithm)->required();
  probe->add_option("--dataset", dataset)->required();
  probe->add_option("--k", k);
  probe->add_option("--clustering", clustering, "Comma-separated labels; default planted, then unit-weight output");
  probe->add_option("--budget", budget, "Algorithm runs allowed");
  probe->add_option("--seed", seed);
  probe->add_option("--format", format);
  probe->add_option("--out", out);

  auto* classify = app.add_subcommand("classify", "Classify algorithms by weight response");
  classify->add_option("--config", config_path, "JSON experiment config; default reproduces the full grid");
  auto* seed_opt = classify->add_option("--seed", seed);
  auto* budget_opt = classify->add_option("--budget", budget);
  classify->add_option("--format", format);
  classify->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (max_n > 0) setenv("CLUSTERLAB_MAX_N", std::to_string(max_n).c_str(), 1);

  try {
    const cli::Format fmt = parse_format_flag(format);
    if (*generate) {
      if (!positions.empty()) {
        std::stringstream in(positions);
        std::string item;
        while (std::getline(in, item, ',')) spec.positions.push_back(std::stod(item));
      }
      emit(cli::cmd_generate(spec, seed), out);
    } else if (*run) {
      emit(cli::cmd_run({cl::AlgorithmHandle::parse(algorithm), dataset, k, fmt}), out);
    } else if (*probe) {
      cli::ProbeRequest request;
      request.algorithm = cl::AlgorithmHandle::parse(algorithm);
      request.dataset = dataset;
      request.k = k;
      if (!clustering.empty()) request.clustering = parse_labels(clustering);
      request.budget = budget;
      request.seed = seed;
      request.format = fmt;
      emit(cli::cmd_probe(request), out);
    } else if (*classify) {
      cli::ExperimentConfig config = config_path.empty() ? cli::default_config() : cli::read_config(config_path);
      if (*seed_opt) config.seed = seed;
      if (*budget_opt) config.budget = budget;
      if (out.empty() && config.out) out = config.out->string();
      emit(cli::cmd_classify(config, fmt), out);
    }
  } catch (const cl::InconsistencyError& e) {
    std::cerr << "clusterlab: inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "clusterlab: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
