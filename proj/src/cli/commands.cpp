#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "clusterlab/cli.hpp"
#include "clusterlab/dataset_io.hpp"
#include "clusterlab/structure.hpp"
#include "json.hpp"

namespace clusterlab::cli {

using nlohmann::json;

namespace {

// k-cluster cut of a dendrogram: starting from the root, repeatedly split the
// node with the greatest merge height (larger, then lower-indexed, on ties).
Clustering cut(const Dendrogram& d, int k) {
  if (k < 2 || static_cast<std::size_t>(k) >= d.n_leaves()) throw InvalidInput("cut requires 1 < k < n");
  std::vector<int> frontier{d.root()};
  while (static_cast<int>(frontier.size()) < k) {
    auto best = frontier.end();
    for (auto it = frontier.begin(); it != frontier.end(); ++it) {
      const auto& node = d.node(*it);
      if (node.is_leaf()) continue;
      if (best == frontier.end()) {
        best = it;
        continue;
      }
      const auto& incumbent = d.node(*best);
      const auto size = d.members(*it).size(), best_size = d.members(*best).size();
      if (node.height > incumbent.height ||
          (node.height == incumbent.height && (size > best_size || (size == best_size && *it < *best)))) {
        best = it;
      }
    }
    const auto& node = d.node(*best);
    *best = node.left;
    frontier.push_back(node.right);
  }
  std::vector<std::vector<std::size_t>> blocks;
  for (int id : frontier) blocks.push_back(d.members(id));
  return Clustering::from_blocks(blocks, d.n_leaves());
}

json structure_json(const StructureReport& s) {
  json j = json::object();
  if (s.perfect) j["perfect"] = *s.perfect;
  if (s.separation_uniform) j["separationUniform"] = *s.separation_uniform;
  if (s.lambda) j["lambda"] = *s.lambda;
  if (s.nice) j["nice"] = *s.nice;
  j["witnesses"] = s.witnesses;
  return j;
}

std::string structure_lines(const StructureReport& s) {
  std::string out;
  const auto flag = [&](const char* name, const std::optional<bool>& v) {
    if (v) out += std::string(name) + (*v ? "yes" : "no") + "\n";
  };
  flag("perfect       ", s.perfect);
  flag("sep-uniform   ", s.separation_uniform);
  if (s.lambda) out += "lambda        " + json(*s.lambda).dump() + "\n";
  flag("nice          ", s.nice);
  for (const auto& w : s.witnesses) out += "witness       " + w + "\n";
  return out;
}

}  // namespace

CommandResult cmd_generate(const GeneratorSpec& spec, std::uint64_t seed) {
  auto named = materialize(spec, seed);
  DatasetDocument doc{std::move(named.generated.dataset), std::move(named.generated.planted),
                      std::move(named.generated.generator)};
  return {serialize_dataset(doc)};
}

CommandResult cmd_run(const RunRequest& request) {
  const DatasetDocument doc = read_dataset(request.dataset);
  const WeightedDataset& ds = doc.dataset;
  const AlgorithmHandle& a = request.algorithm;
  const AlgorithmOutput out = run_algorithm(a, ds, request.k);

  json record{{"type", "run"}, {"algorithm", a.name()}, {"n", ds.n()}};
  std::string table = "algorithm     " + a.name() + "\n";
  if (!doc.generator.empty()) table += "dataset       " + doc.generator + "\n";
  table += "n             " + std::to_string(ds.n()) + "\n";

  Clustering reported = [&] {
    if (const auto* c = std::get_if<Clustering>(&out)) return *c;
    return cut(std::get<Dendrogram>(out), request.k);
  }();
  if (const auto* d = std::get_if<Dendrogram>(&out)) {
    record["dendrogram"] = d->to_newick();
    record["cutK"] = request.k;
    table += "dendrogram    " + d->to_newick() + "\n";
    table += "cut (k=" + std::to_string(request.k) + ")     " + reported.to_string() + "\n";
    if (doc.planted) {
      const bool has = dendrogram_outputs(*d, *doc.planted);
      record["outputsPlanted"] = has;
      table += "has planted   " + std::string(has ? "yes" : "no") + "\n";
    }
  } else {
    const double value = cost(a.objective(), reported, ds);
    record["k"] = request.k;
    record["cost"] = value;
    table += "k             " + std::to_string(request.k) + "\n";
    table += "clustering    " + reported.to_string() + "\n";
    table += "cost          " + json(value).dump() + "\n";
  }
  record["clustering"] = std::vector<int>(reported.labels().begin(), reported.labels().end());
  const StructureReport structure = structure_report(reported, ds);
  record["structure"] = structure_json(structure);
  table += structure_lines(structure);
  return {request.format == Format::records ? record.dump() + "\n" : table};
}

CommandResult cmd_probe(const ProbeRequest& request) {
  const DatasetDocument doc = read_dataset(request.dataset);
  const WeightedDataset& ds = doc.dataset;
  const AlgorithmHandle& a = request.algorithm;

  const Clustering target = [&] {
    if (request.clustering) {
      if (request.clustering->size() != ds.n()) throw InvalidInput("--clustering has the wrong number of labels");
      return Clustering::from_labels(*request.clustering);
    }
    if (doc.planted) return *doc.planted;
    const AlgorithmOutput out = run_algorithm(a, ds.with_weights(unit_weights(ds.n())), request.k);
    if (const auto* c = std::get_if<Clustering>(&out)) return *c;
    return cut(std::get<Dendrogram>(out), request.k);
  }();

  ProbeOptions options;
  options.budget = request.budget;
  options.seed = request.seed;
  Verdict verdict = responsiveness_probe(a, ds, target, options);
  const bool certified = robustness_certificate(a, ds, target);
  if (!replay_verdict(a, ds, verdict)) {
    throw InconsistencyError(a.name() + ": verdict on " + target.to_string() + " does not replay");
  }
  if (certified && verdict.status == VerdictStatus::responsive) {
    throw InconsistencyError(a.name() + ": " + target.to_string() + " is certified robust yet responsive (remove " +
                             verdict.remove->family + ")");
  }
  if (certified) verdict.status = VerdictStatus::robust_on_clustering;
  return {render_verdict(a, verdict, certified, request.format)};
}

CommandResult cmd_classify(const ExperimentConfig& config, Format format) {
  std::vector<NamedDataset> family;
  for (const auto& spec : config.generators) {
    auto named = materialize(spec, config.seed);
    family.push_back({named.name, std::move(named.generated.dataset), spec.ks});
  }

  ClassifyOptions options;
  options.probe.budget = config.budget;
  options.probe.random_samples = config.random_samples;
  options.probe.seed = config.seed;
  options.range_samples = config.range_samples;
  options.ks = config.ks;

  // Algorithms are independent; results land in config order.
  const std::size_t count = config.algorithms.size();
  std::vector<std::optional<CategoryReport>> reports(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        reports[i] = classify(config.algorithms[i], family, "config", options);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, count);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<CategoryReport> ordered;
  for (auto& r : reports) ordered.push_back(std::move(*r));
  return {render_classification(config, ordered, format)};
}

}  // namespace clusterlab::cli
