#pragma once

// Clusterability detectors. None of them read weights.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "clusterlab/core.hpp"
#include "clusterlab/partitions.hpp"

namespace clusterlab {

/// x1~x2 within a cluster, x3 and x4 in different clusters, and
/// s(x1,x2) <= s(x3,x4) + tol.
struct PerfectWitness {
  std::array<std::size_t, 4> elements{};
  double within = 0.0;
  double cross = 0.0;
};

struct PerfectResult {
  bool perfect = false;
  std::optional<PerfectWitness> witness;
};

/// Every within-cluster similarity strictly exceeds every cross-cluster one
/// (by more than tol). Self-similarities are never compared.
PerfectResult is_perfect(const Clustering& c, const WeightedDataset& ds, double tol = 0.0);

struct UniformResult {
  bool uniform = false;
  /// Mean cross-cluster similarity; set when uniform.
  std::optional<double> lambda;
  /// Cross pairs holding the smallest and largest cross similarity when not uniform.
  std::optional<std::array<std::size_t, 4>> witness;
};

/// All cross-cluster similarities within tol of one common value.
UniformResult is_separation_uniform(const Clustering& c, const WeightedDataset& ds, double tol = 0.0);

/// x1~x2, x1 and x3 apart, d(x1,x2) >= d(x1,x3) - tol.
struct NiceWitness {
  std::size_t x1 = 0, x2 = 0, x3 = 0;
  double within = 0.0;
  double cross = 0.0;
};

struct NiceResult {
  bool nice = false;
  std::optional<NiceWitness> witness;
};

/// Every point strictly closer to each member of its own cluster than to any
/// point outside it.
NiceResult is_nice(const Clustering& c, const WeightedDataset& ds, double tol = 0.0);

/// Every nice clustering over all valid k, in canonical order (k ascending).
std::vector<Clustering> enumerate_nice_clusterings(const WeightedDataset& ds, std::size_t cap = enumeration_cap());

/// Flags applicable to the dataset's table kind; others stay unset.
struct StructureReport {
  std::optional<bool> perfect;
  std::optional<bool> separation_uniform;
  std::optional<double> lambda;
  std::optional<bool> nice;
  std::vector<std::string> witnesses;
};

StructureReport structure_report(const Clustering& c, const WeightedDataset& ds, double tol = 0.0);

}  // namespace clusterlab
