#include "clusterlab/probe.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "clusterlab/rng.hpp"
#include "clusterlab/structure.hpp"

namespace clusterlab {

namespace {

constexpr AlgorithmId kPartitionalIds[] = {AlgorithmId::kmeans,      AlgorithmId::kmedian, AlgorithmId::kmedoids,
                                           AlgorithmId::minsum,      AlgorithmId::mindiameter,
                                           AlgorithmId::kcenter,     AlgorithmId::ratiocut};

Objective objective_of(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kmeans: return Objective::kmeans;
    case AlgorithmId::kmedian: return Objective::kmedian;
    case AlgorithmId::kmedoids: return Objective::kmedoids;
    case AlgorithmId::minsum: return Objective::minsum;
    case AlgorithmId::mindiameter: return Objective::mindiameter;
    case AlgorithmId::kcenter: return Objective::kcenter;
    case AlgorithmId::ratiocut: return Objective::ratiocut;
    default: break;
  }
  throw InvalidInput("algorithm is not partitional");
}

std::string format_weight(double w) {
  std::ostringstream out;
  out << w;
  return out.str();
}

}  // namespace

bool AlgorithmHandle::hierarchical() const {
  return id == AlgorithmId::single || id == AlgorithmId::complete || id == AlgorithmId::average ||
         id == AlgorithmId::ward || id == AlgorithmId::divisive;
}

Objective AlgorithmHandle::objective() const { return objective_of(id); }

Linkage AlgorithmHandle::linkage() const {
  switch (id) {
    case AlgorithmId::single: return Linkage::single;
    case AlgorithmId::complete: return Linkage::complete;
    case AlgorithmId::average: return Linkage::average;
    case AlgorithmId::ward: return Linkage::ward;
    default: break;
  }
  throw InvalidInput("algorithm is not linkage-based");
}

TableKind AlgorithmHandle::required_kind() const {
  if (id == AlgorithmId::divisive) return clusterlab::required_kind(divisive_base);
  if (hierarchical()) return TableKind::distance;
  return clusterlab::required_kind(objective());
}

bool AlgorithmHandle::requires_coords() const { return id == AlgorithmId::ward; }

std::string AlgorithmHandle::name() const {
  switch (id) {
    case AlgorithmId::single:
    case AlgorithmId::complete:
    case AlgorithmId::average:
    case AlgorithmId::ward:
      return to_string(linkage());
    case AlgorithmId::divisive:
      return "divisive(" + to_string(divisive_base) + ")";
    default:
      return to_string(objective());
  }
}

AlgorithmHandle AlgorithmHandle::partitional(Objective objective) {
  for (AlgorithmId id : kPartitionalIds) {
    if (objective_of(id) == objective) return AlgorithmHandle{id};
  }
  throw InvalidInput("unknown objective");
}

AlgorithmHandle AlgorithmHandle::parse(std::string_view text) {
  if (auto objective = parse_objective(text)) return partitional(*objective);
  if (auto linkage = parse_linkage(text)) {
    switch (*linkage) {
      case Linkage::single: return AlgorithmHandle{AlgorithmId::single};
      case Linkage::complete: return AlgorithmHandle{AlgorithmId::complete};
      case Linkage::average: return AlgorithmHandle{AlgorithmId::average};
      case Linkage::ward: return AlgorithmHandle{AlgorithmId::ward};
    }
  }
  if (text == "divisive") return AlgorithmHandle{AlgorithmId::divisive, Objective::kmeans};
  constexpr std::string_view prefix = "divisive(";
  if (text.starts_with(prefix) && text.ends_with(")")) {
    const auto inner = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    if (auto objective = parse_objective(inner)) return AlgorithmHandle{AlgorithmId::divisive, *objective};
  }
  throw InvalidInput("unknown algorithm '" + std::string(text) + "'");
}

std::vector<AlgorithmHandle> classification_algorithms() {
  std::vector<AlgorithmHandle> out;
  for (AlgorithmId id : kPartitionalIds) out.push_back(AlgorithmHandle{id});
  for (AlgorithmId id : {AlgorithmId::single, AlgorithmId::complete, AlgorithmId::average, AlgorithmId::ward,
                         AlgorithmId::divisive}) {
    out.push_back(AlgorithmHandle{id});
  }
  return out;
}

bool compatible(const AlgorithmHandle& a, const WeightedDataset& ds) {
  return ds.kind() == a.required_kind() && (!a.requires_coords() || ds.has_coords());
}

AlgorithmOutput run_algorithm(const AlgorithmHandle& a, const WeightedDataset& ds, int k,
                              const MinimizeOptions& minimize) {
  if (ds.kind() != a.required_kind()) {
    throw KindMismatch(a.name() + " requires a " + to_string(a.required_kind()) + " table");
  }
  if (!a.hierarchical()) return exact_minimize(ds, ObjectiveSpec{a.objective(), k}, minimize);
  if (a.id == AlgorithmId::divisive) return divisive(ds, exact_partitional(a.divisive_base, minimize));
  return agglomerate(ds, a.linkage());
}

bool outputs(const AlgorithmHandle& a, const WeightedDataset& ds, const Clustering& c,
             const MinimizeOptions& minimize) {
  if (c.n() != ds.n()) throw InvalidInput("clustering and dataset sizes differ");
  const AlgorithmOutput out = run_algorithm(a, ds, c.k(), minimize);
  if (const auto* clustering = std::get_if<Clustering>(&out)) return *clustering == c;
  return dendrogram_outputs(std::get<Dendrogram>(out), c);
}

// ---- weight families --------------------------------------------------------

WeightFamily WeightFamily::unit() {
  WeightFamily f;
  f.kind = Kind::unit;
  return f;
}

WeightFamily WeightFamily::given(std::vector<double> values, std::string label) {
  WeightFamily f;
  f.kind = Kind::given;
  f.values = std::move(values);
  f.label = std::move(label);
  return f;
}

WeightFamily WeightFamily::log_uniform(double lo, double hi, std::uint64_t seed) {
  if (!(lo > 0.0) || !(hi >= lo)) throw InvalidInput("log-uniform weights need 0 < lo <= hi");
  WeightFamily f;
  f.kind = Kind::log_uniform;
  f.lo = lo;
  f.hi = hi;
  f.seed = seed;
  return f;
}

WeightFamily WeightFamily::spike(std::vector<std::size_t> set, double big) {
  if (!(big > 0.0)) throw InvalidInput("spike height must be positive");
  WeightFamily f;
  f.kind = Kind::spike;
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  f.spiked = std::move(set);
  f.big = big;
  return f;
}

WeightFamily WeightFamily::pair_spike(std::size_t x1, std::size_t x2, double big) {
  if (x1 == x2) throw InvalidInput("pair spike needs two distinct elements");
  return spike({x1, x2}, big);
}

std::vector<double> WeightFamily::materialize(std::size_t n) const {
  switch (kind) {
    case Kind::unit:
      return unit_weights(n);
    case Kind::given:
      if (values.size() != n) throw InvalidInput("given weights have the wrong length");
      return values;
    case Kind::log_uniform: {
      Rng rng = Rng::stream(seed, "weights");
      std::vector<double> w(n);
      for (double& x : w) x = rng.log_uniform(lo, hi);
      return w;
    }
    case Kind::spike: {
      std::vector<double> w(n, 1.0);
      for (std::size_t x : spiked) w.at(x) = big;
      return w;
    }
  }
  return {};
}

std::string WeightFamily::describe() const {
  switch (kind) {
    case Kind::unit:
      return "unit";
    case Kind::given:
      return label.empty() ? "given" : label;
    case Kind::log_uniform:
      return "logUniform(" + format_weight(lo) + "," + format_weight(hi) + ",seed=" + std::to_string(seed) + ")";
    case Kind::spike: {
      std::string out = spiked.size() == 2 ? "pairSpike(" : "spike({";
      for (std::size_t i = 0; i < spiked.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spiked[i]);
      }
      out += spiked.size() == 2 ? "," : "},";
      return out + "W=" + format_weight(big) + ")";
    }
  }
  return "unknown";
}

std::vector<double> default_spike_ladder() {
  std::vector<double> ladder;
  for (double w = 1e2; w <= 1e9; w *= 10.0) ladder.push_back(w);
  return ladder;
}

std::string to_string(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::responsive: return "responsive";
    case VerdictStatus::robust_on_clustering: return "robustOnClustering";
    case VerdictStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::string to_string(Category category) {
  switch (category) {
    case Category::sensitive: return "sensitive";
    case Category::considering: return "considering";
    case Category::robust: return "robust";
    case Category::undetermined: return "undetermined";
  }
  return "unknown";
}

// ---- responsiveness ---------------------------------------------------------

namespace {

void add_spikes(std::vector<WeightFamily>& out, const std::vector<std::size_t>& set, const std::vector<double>& ladder) {
  for (double w : ladder) out.push_back(WeightFamily::spike(set, w));
}

// Within-cluster pairs; on distance data pairs in a strict nice violation
// (d(x1,x2) > d(x1,x3) with x3 outside the cluster) come first.
std::vector<std::pair<std::size_t, std::size_t>> within_pairs(const Clustering& c, const WeightedDataset& ds) {
  std::vector<std::pair<std::size_t, std::size_t>> violating, rest;
  const std::size_t n = c.n();
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
      if (!c.same_cluster(x1, x2)) continue;
      bool violates = false;
      if (ds.kind() == TableKind::distance) {
        for (std::size_t x3 = 0; x3 < n && !violates; ++x3) {
          if (c.same_cluster(x1, x3)) continue;
          violates = ds.d(x1, x2) > ds.d(x1, x3) || ds.d(x2, x1) > ds.d(x2, x3);
        }
      }
      (violates ? violating : rest).emplace_back(x1, x2);
    }
  }
  violating.insert(violating.end(), rest.begin(), rest.end());
  return violating;
}

std::vector<WeightFamily> producer_candidates(const WeightedDataset& ds, const Clustering& c,
                                              const ProbeOptions& options) {
  const std::size_t n = ds.n();
  std::vector<WeightFamily> out;
  for (const auto& hint : options.hints) out.push_back(WeightFamily::given(hint, "hint"));
  out.push_back(WeightFamily::given({ds.weights().begin(), ds.weights().end()}, "dataset"));
  out.push_back(WeightFamily::unit());
  Rng seeds = Rng::stream(options.seed, "probe-produce");
  for (std::size_t i = 0; i < options.random_samples; ++i) out.push_back(WeightFamily::log_uniform(1e-2, 1e2, seeds.bits()));
  for (std::size_t x = 0; x < n; ++x) add_spikes(out, {x}, options.ladder);
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) add_spikes(out, {x1, x2}, options.ladder);
  }
  for (const auto& block : c.blocks()) {
    if (block.size() > 2) add_spikes(out, block, options.ladder);
  }
  return out;
}

std::vector<WeightFamily> remover_candidates(const WeightedDataset& ds, const Clustering& c,
                                             const ProbeOptions& options) {
  const std::size_t n = ds.n();
  std::vector<WeightFamily> out;
  for (const auto& [x1, x2] : within_pairs(c, ds)) add_spikes(out, {x1, x2}, options.ladder);
  for (std::size_t x = 0; x < n; ++x) add_spikes(out, {x}, options.ladder);
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
      if (!c.same_cluster(x1, x2)) add_spikes(out, {x1, x2}, options.ladder);
    }
  }
  for (const auto& block : c.blocks()) {
    if (block.size() > 2) add_spikes(out, block, options.ladder);
  }
  Rng seeds = Rng::stream(options.seed, "probe-remove");
  for (std::size_t i = 0; i < options.random_samples; ++i) out.push_back(WeightFamily::log_uniform(1e-2, 1e2, seeds.bits()));
  out.push_back(WeightFamily::given({ds.weights().begin(), ds.weights().end()}, "dataset"));
  out.push_back(WeightFamily::unit());
  return out;
}

}  // namespace

Verdict responsiveness_probe(const AlgorithmHandle& a, const WeightedDataset& ds, const Clustering& c,
                             const ProbeOptions& options) {
  if (c.n() != ds.n()) throw InvalidInput("clustering and dataset sizes differ");
  Verdict v{c, VerdictStatus::inconclusive, std::nullopt, std::nullopt};
  std::map<std::vector<double>, bool> seen;  // weights -> outputs c

  const auto test = [&](const WeightFamily& family) -> std::optional<std::pair<std::vector<double>, bool>> {
    std::vector<double> w = family.materialize(ds.n());
    if (auto it = seen.find(w); it != seen.end()) return std::pair{std::move(w), it->second};
    if (v.trials >= options.budget) return std::nullopt;
    ++v.trials;
    if (family.kind == WeightFamily::Kind::spike) v.max_w = std::max(v.max_w, family.big);
    const bool produced = outputs(a, ds.with_weights(w), c, options.minimize);
    seen.emplace(w, produced);
    return std::pair{std::move(w), produced};
  };

  for (const auto& family : producer_candidates(ds, c, options)) {
    const auto result = test(family);
    if (!result) break;
    if (result->second) {
      v.produce = Witness{result->first, family.describe()};
      break;
    }
  }
  if (v.produce) {
    for (const auto& family : remover_candidates(ds, c, options)) {
      const auto result = test(family);
      if (!result) break;
      if (!result->second) {
        v.remove = Witness{result->first, family.describe()};
        break;
      }
    }
  }
  v.status = v.produce && v.remove ? VerdictStatus::responsive : VerdictStatus::inconclusive;
  return v;
}

bool robustness_certificate(const AlgorithmHandle& a, const WeightedDataset& ds, const Clustering& c) {
  switch (a.id) {
    case AlgorithmId::single:
    case AlgorithmId::complete:
    case AlgorithmId::mindiameter:
    case AlgorithmId::kcenter:
      return true;
    case AlgorithmId::average:
      return ds.kind() == TableKind::distance && is_nice(c, ds).nice;
    case AlgorithmId::ratiocut:
      return ds.kind() == TableKind::similarity && is_perfect(c, ds).perfect && is_separation_uniform(c, ds).uniform;
    default:
      return false;
  }
}

bool replay_verdict(const AlgorithmHandle& a, const WeightedDataset& ds, const Verdict& v,
                    const MinimizeOptions& minimize) {
  if (v.produce && !outputs(a, ds.with_weights(v.produce->weights), v.clustering, minimize)) return false;
  if (v.remove && outputs(a, ds.with_weights(v.remove->weights), v.clustering, minimize)) return false;
  return v.status != VerdictStatus::responsive || (v.produce && v.remove);
}

// ---- separability -----------------------------------------------------------

SeparabilityResult separability_probe(const AlgorithmHandle& a, const WeightedDataset& ds,
                                      const std::vector<std::size_t>& set, int k, const std::vector<double>& ladder,
                                      const MinimizeOptions& minimize) {
  if (a.hierarchical()) throw InvalidInput("separability is defined for partitional algorithms");
  std::set<std::size_t> distinct(set.begin(), set.end());
  if (distinct.size() != set.size() || set.size() < 2 || static_cast<int>(set.size()) > k ||
      static_cast<std::size_t>(k) >= ds.n()) {
    throw InvalidInput("separability needs 2 <= |S| <= k < n with distinct elements");
  }
  for (std::size_t x : set) {
    if (x >= ds.n()) throw InvalidInput("separability set element out of range");
  }
  SeparabilityResult result;
  for (double w : ladder) {
    result.max_w = w;
    const auto weights = WeightFamily::spike(set, w).materialize(ds.n());
    const Clustering out = exact_minimize(ds.with_weights(weights), ObjectiveSpec{a.objective(), k}, minimize);
    std::set<int> labels;
    for (std::size_t x : set) labels.insert(out.label(x));
    if (labels.size() == set.size()) {
      result.separated = true;
      result.big = w;
      return result;
    }
  }
  return result;
}

// ---- range ------------------------------------------------------------------

RangeSample range_estimate(const AlgorithmHandle& a, const WeightedDataset& ds, int k, std::size_t samples,
                           std::uint64_t seed, const std::vector<double>& ladder, const MinimizeOptions& minimize) {
  const std::size_t n = ds.n();
  std::vector<WeightFamily> families{WeightFamily::unit()};
  Rng seeds = Rng::stream(seed, "range");
  for (std::size_t i = 0; i < samples; ++i) families.push_back(WeightFamily::log_uniform(1e-2, 1e2, seeds.bits()));
  for (std::size_t x = 0; x < n; ++x) add_spikes(families, {x}, ladder);
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) add_spikes(families, {x1, x2}, ladder);
  }

  std::map<Clustering, std::vector<double>> found;
  std::set<std::string> trees;
  RangeSample sample;
  for (const auto& family : families) {
    auto w = family.materialize(n);
    ++sample.runs;
    const AlgorithmOutput out = run_algorithm(a, ds.with_weights(w), k, minimize);
    if (const auto* clustering = std::get_if<Clustering>(&out)) {
      found.try_emplace(*clustering, w);
      continue;
    }
    const auto& tree = std::get<Dendrogram>(out);
    if (!trees.insert(tree.to_newick()).second) continue;
    for (const auto& c : output_clusterings(tree)) found.try_emplace(c, w);
  }
  for (auto& [c, w] : found) {
    sample.clusterings.push_back(c);
    sample.producers.push_back(std::move(w));
  }
  return sample;
}

// ---- classification ---------------------------------------------------------

CategoryReport classify(const AlgorithmHandle& a, const std::vector<NamedDataset>& family,
                        const std::string& family_name, const ClassifyOptions& options) {
  CategoryReport report;
  report.algorithm = a;
  report.family = family_name;
  const auto probe_range = [&](const NamedDataset& named, int k) {
    const auto range = range_estimate(a, named.dataset, k, options.range_samples, options.probe.seed,
                                      options.probe.ladder, options.probe.minimize);
    report.range_size += range.clusterings.size();
    for (std::size_t i = 0; i < range.clusterings.size(); ++i) {
      const Clustering& c = range.clusterings[i];
      ProbeOptions probe = options.probe;
      probe.hints.insert(probe.hints.begin(), range.producers[i]);
      Evidence e{named.name, k, responsiveness_probe(a, named.dataset, c, probe), false};
      e.certified = robustness_certificate(a, named.dataset, c);
      if (!replay_verdict(a, named.dataset, e.verdict, options.probe.minimize)) {
        throw InconsistencyError(a.name() + ": verdict on " + c.to_string() + " in " + named.name +
                                 " does not replay");
      }
      if (e.certified && e.verdict.status == VerdictStatus::responsive) {
        throw InconsistencyError(a.name() + ": " + c.to_string() + " in " + named.name +
                                 " is certified robust yet responsive (produce " + e.verdict.produce->family +
                                 ", remove " + e.verdict.remove->family + ")");
      }
      if (e.certified) e.verdict.status = VerdictStatus::robust_on_clustering;
      ++report.probed;
      switch (e.verdict.status) {
        case VerdictStatus::responsive: ++report.responsive; break;
        case VerdictStatus::robust_on_clustering: ++report.certified; break;
        case VerdictStatus::inconclusive: ++report.inconclusive; break;
      }
      report.evidence.push_back(std::move(e));
    }
  };

  for (const auto& named : family) {
    if (!compatible(a, named.dataset)) continue;
    if (a.hierarchical()) {
      probe_range(named, 0);
      continue;
    }
    for (int k : named.ks.empty() ? options.ks : named.ks) {
      if (k >= 2 && static_cast<std::size_t>(k) < named.dataset.n()) probe_range(named, k);
    }
  }

  if (report.probed == 0 || report.inconclusive > 0) {
    report.category = Category::undetermined;
  } else if (report.responsive == report.probed) {
    report.category = Category::sensitive;
  } else if (report.certified == report.probed) {
    report.category = Category::robust;
  } else {
    report.category = Category::considering;
  }
  return report;
}

}  // namespace clusterlab
