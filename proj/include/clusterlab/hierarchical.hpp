#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clusterlab/core.hpp"
#include "clusterlab/dendrogram.hpp"
#include "clusterlab/partitional.hpp"

namespace clusterlab {

enum class Linkage { single, complete, average, ward };

std::string to_string(Linkage linkage);
std::optional<Linkage> parse_linkage(std::string_view text);

struct LinkageSpec {
  Linkage linkage = Linkage::average;
  bool requires_coords() const { return linkage == Linkage::ward; }
};

/// Weighted center of mass of a set of coordinate points.
struct Centroid {
  std::vector<double> position;
  double mass = 0.0;
};

Centroid centroid(std::span<const std::size_t> members, const WeightedDataset& ds);
Centroid merge(const Centroid& a, const Centroid& b);

/// Linkage between two disjoint, non-empty element sets:
///   single   min d(a,b)
///   complete max d(a,b)
///   average  sum d(a,b) w(a) w(b) / (w(A) w(B))
///   ward     w(A) w(B) |ctr(A) - ctr(B)|^2 / (w(A) + w(B))
double linkage_value(Linkage linkage, std::span<const std::size_t> a, std::span<const std::size_t> b,
                     const WeightedDataset& ds);

/// Linkage values closer than this (relative) are ties.
inline constexpr double kLinkageTieTolerance = 1e-12;

/// Bottom-up agglomeration from singletons, merging the linkage-minimal pair
/// of current clusters at each step. Ties go to the pair whose
/// (min element of first, min element of second) is lexicographically least.
Dendrogram agglomerate(const WeightedDataset& ds, Linkage linkage);

/// A partitional algorithm: (dataset, k) -> k-clustering.
using PartitionalAlgorithm = std::function<Clustering(const WeightedDataset&, int)>;

/// Exact minimizer of an objective, as a PartitionalAlgorithm.
PartitionalAlgorithm exact_partitional(Objective objective, MinimizeOptions options = {});

/// Top-down dendrogram: every node with three or more elements is split by
/// split(w[node], 2); two-element nodes split into singletons directly.
Dendrogram divisive(const WeightedDataset& ds, const PartitionalAlgorithm& split);

}  // namespace clusterlab
