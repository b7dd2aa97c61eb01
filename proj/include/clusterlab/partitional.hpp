#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterlab/core.hpp"
#include "clusterlab/kernels.hpp"
#include "clusterlab/partitions.hpp"

namespace clusterlab {

enum class Objective { kmeans, kmedian, kmedoids, minsum, mindiameter, kcenter, ratiocut };

inline constexpr Objective kAllObjectives[] = {Objective::kmeans,      Objective::kmedian, Objective::kmedoids,
                                               Objective::minsum,      Objective::mindiameter,
                                               Objective::kcenter,     Objective::ratiocut};

std::string to_string(Objective objective);
std::optional<Objective> parse_objective(std::string_view text);
/// ratiocut reads similarities; every other objective reads distances.
TableKind required_kind(Objective objective);
/// mindiameter and kcenter never read weights.
bool is_weight_free(Objective objective);

struct ObjectiveSpec {
  Objective objective = Objective::kmeans;
  int k = 2;
};

struct CostValue {
  double value = 0.0;
  ObjectiveSpec objective;
};

// Cost functions. All pair sums run over unordered pairs; kmedian/kmedoids
// pick the best in-cluster exemplar with plain and squared distances.
double kmeans_cost(const Clustering& c, const WeightedDataset& ds);
double minsum_cost(const Clustering& c, const WeightedDataset& ds);
double kmedian_cost(const Clustering& c, const WeightedDataset& ds);
double kmedoids_cost(const Clustering& c, const WeightedDataset& ds);
double mindiameter_cost(const Clustering& c, const WeightedDataset& ds);
double kcenter_cost(const Clustering& c, const WeightedDataset& ds);
double ratiocut_cost(const Clustering& c, const WeightedDataset& ds);

double cost(Objective objective, const Clustering& c, const WeightedDataset& ds);
CostValue evaluate(const ObjectiveSpec& spec, const Clustering& c, const WeightedDataset& ds);

/// Precomputed per-(dataset, objective) tables so a cost is a handful of
/// masked row reductions. Reuses internal scratch: one evaluator per thread.
class CostEvaluator {
 public:
  CostEvaluator(const WeightedDataset& ds, Objective objective);

  /// labels: any labeling with values in [0, k).
  double operator()(std::span<const int> labels, int k) const;
  Objective objective() const { return objective_; }

 private:
  Objective objective_;
  std::size_t n_;
  std::vector<double> weights_;
  std::vector<double> table_;  // n x n, meaning depends on objective
  mutable std::vector<kernels::CompensatedSum> acc_;
  mutable std::vector<double> cluster_weight_;
  mutable std::vector<double> best_;
};

/// Cost ties closer than this (relative) go to the earlier canonical partition.
inline constexpr double kTieRelTolerance = 1e-12;

struct MinimizeOptions {
  std::size_t cap = enumeration_cap();
  double tie_tolerance = kTieRelTolerance;
};

/// The cost-minimal k-clustering over all partitions; ties within the
/// relative tolerance resolve to the first in canonical order. Weights are
/// rescaled to max 1 before evaluation.
Clustering exact_minimize(const WeightedDataset& ds, const ObjectiveSpec& spec, const MinimizeOptions& options = {});

}  // namespace clusterlab
