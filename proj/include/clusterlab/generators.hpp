#pragma once

// Synthetic datasets with planted structure. Every generator is a pure
// function of its parameters and seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterlab/core.hpp"
#include "clusterlab/rng.hpp"

namespace clusterlab {

struct GeneratedDataset {
  WeightedDataset dataset;
  std::optional<Clustering> planted;
  std::string generator;  // human-readable parameter summary
};

/// Similarity data with a planted k-clustering (clusters of size >= 2) whose
/// within similarities are drawn from [within_lo, within_hi] on a 1/64 grid
/// and whose cross similarities all equal lambda. Requires within_lo > lambda.
GeneratedDataset perfect_uniform(int k, std::size_t n, double within_lo, double within_hi, double lambda,
                                 std::uint64_t seed);

enum class SimilarityDefect {
  cross_levels,   // perfect, but cross similarities take several values
  weak_within,    // uniform cross lambda, but some within pairs fall below it
};

/// perfect_uniform(k, n, 4, 6, 1) with one planted defect.
GeneratedDataset defective_similarity(int k, std::size_t n, SimilarityDefect defect, std::uint64_t seed);

/// Unstructured similarities, uniform on [0.1, 5].
GeneratedDataset random_similarity(std::size_t n, std::uint64_t seed);

/// 2-D blocks of diameter <= 1 separated by more than 1 + gap, so the planted
/// block clustering is nice. Requires gap > 0.
GeneratedDataset nice_blocks(int k, std::size_t n, double gap, std::uint64_t seed);

/// Uniform points in the unit square.
GeneratedDataset generic_random(std::size_t n, std::uint64_t seed);

/// Points on the real line.
GeneratedDataset line(const std::vector<double>& positions);

/// n log-uniform weights on [lo, hi].
std::vector<double> log_uniform_weights(std::size_t n, double lo, double hi, Rng& rng);

}  // namespace clusterlab
