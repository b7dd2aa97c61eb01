#include "clusterlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace clusterlab {

namespace {

// Random cluster sizes, each at least min_size, summing to n.
std::vector<int> planted_labels(int k, std::size_t n, std::size_t min_size, Rng& rng) {
  const auto kk = static_cast<std::size_t>(k);
  if (k < 2 || n <= kk || n < kk * min_size) {
    throw InvalidInput("infeasible planted clustering: k=" + std::to_string(k) + ", n=" + std::to_string(n));
  }
  std::vector<int> labels;
  for (std::size_t c = 0; c < kk; ++c) labels.insert(labels.end(), min_size, static_cast<int>(c));
  while (labels.size() < n) labels.push_back(static_cast<int>(rng.uniform_int(0, k - 1)));
  // Fisher-Yates so clusters are interleaved over element indices.
  for (std::size_t i = labels.size(); i > 1; --i) {
    std::swap(labels[i - 1], labels[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i - 1)))]);
  }
  return labels;
}

double grid_value(double lo, double hi, Rng& rng) {
  constexpr int kSteps = 64;
  return lo + (hi - lo) * static_cast<double>(rng.uniform_int(0, kSteps)) / kSteps;
}

std::string describe(std::initializer_list<std::pair<const char*, double>> params, const char* name) {
  std::ostringstream out;
  out << name << '(';
  bool first = true;
  for (const auto& [key, value] : params) {
    out << (first ? "" : ", ") << key << '=' << value;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

GeneratedDataset perfect_uniform(int k, std::size_t n, double within_lo, double within_hi, double lambda,
                                 std::uint64_t seed) {
  if (!(within_lo > lambda) || within_hi < within_lo || lambda < 0.0) {
    throw InvalidInput("perfect_uniform requires lambda >= 0 and within similarities above lambda");
  }
  Rng rng = Rng::stream(seed, "perfect_uniform");
  const auto labels = planted_labels(k, n, 2, rng);
  PairTable table(TableKind::similarity, n);
  for (std::size_t i = 0; i < n; ++i) {
    table.at(i, i) = 2.0 * within_hi;  // self-similarity, used when expanding duplicates
    for (std::size_t j = i + 1; j < n; ++j) {
      table.set_symmetric(i, j, labels[i] == labels[j] ? grid_value(within_lo, within_hi, rng) : lambda);
    }
  }
  return {validate_dataset(std::move(table), unit_weights(n)), Clustering::from_labels(labels),
          describe({{"k", k}, {"n", static_cast<double>(n)}, {"within_lo", within_lo}, {"within_hi", within_hi},
                    {"lambda", lambda}, {"seed", static_cast<double>(seed)}},
                   "perfectUniform")};
}

GeneratedDataset defective_similarity(int k, std::size_t n, SimilarityDefect defect, std::uint64_t seed) {
  GeneratedDataset base = perfect_uniform(k, n, 4.0, 6.0, 1.0, seed);
  Rng rng = Rng::stream(seed, "defective_similarity");
  PairTable table = base.dataset.table();
  const Clustering& planted = *base.planted;
  std::vector<std::pair<std::size_t, std::size_t>> within, cross;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) (planted.same_cluster(i, j) ? within : cross).emplace_back(i, j);
  }
  const char* name = "";
  if (defect == SimilarityDefect::cross_levels) {
    for (const auto& [i, j] : cross) table.set_symmetric(i, j, grid_value(0.5, 3.0, rng));
    // Guarantee at least two distinct levels.
    table.set_symmetric(cross.front().first, cross.front().second, 0.5);
    table.set_symmetric(cross.back().first, cross.back().second, 3.0);
    name = "crossLevels";
  } else {
    const auto count = static_cast<std::size_t>(rng.uniform_int(1, std::max<std::int64_t>(1, static_cast<std::int64_t>(within.size()) / 3)));
    for (std::size_t m = 0; m < count; ++m) {
      const auto& [i, j] = within[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(within.size()) - 1))];
      table.set_symmetric(i, j, grid_value(0.25, 1.0, rng));
    }
    name = "weakWithin";
  }
  std::ostringstream desc;
  desc << "defectiveSimilarity(k=" << k << ", n=" << n << ", defect=" << name << ", seed=" << seed << ')';
  return {validate_dataset(std::move(table), unit_weights(n)), planted, desc.str()};
}

GeneratedDataset random_similarity(std::size_t n, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, "random_similarity");
  PairTable table(TableKind::similarity, n);
  for (std::size_t i = 0; i < n; ++i) {
    table.at(i, i) = 10.0;
    for (std::size_t j = i + 1; j < n; ++j) table.set_symmetric(i, j, rng.uniform(0.1, 5.0));
  }
  return {validate_dataset(std::move(table), unit_weights(n)), std::nullopt,
          describe({{"n", static_cast<double>(n)}, {"seed", static_cast<double>(seed)}}, "randomSimilarity")};
}

GeneratedDataset nice_blocks(int k, std::size_t n, double gap, std::uint64_t seed) {
  if (!(gap > 0.0)) throw InvalidInput("nice_blocks requires gap > 0");
  Rng rng = Rng::stream(seed, "nice_blocks");
  const auto labels = planted_labels(k, n, 1, rng);
  // Squares of side 1/sqrt(2) (diameter 1) spaced 1 + gap apart.
  const double side = 1.0 / std::sqrt(2.0);
  Coords coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = static_cast<double>(labels[i]) * (side + 1.0 + gap);
    coords[i] = {x0 + side * rng.uniform(), side * rng.uniform()};
  }
  return {dataset_from_coords(std::move(coords), unit_weights(n)), Clustering::from_labels(labels),
          describe({{"k", k}, {"n", static_cast<double>(n)}, {"gap", gap}, {"seed", static_cast<double>(seed)}},
                   "niceBlocks")};
}

GeneratedDataset generic_random(std::size_t n, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, "generic_random");
  Coords coords(n);
  for (auto& p : coords) p = {rng.uniform(), rng.uniform()};
  return {dataset_from_coords(std::move(coords), unit_weights(n)), std::nullopt,
          describe({{"n", static_cast<double>(n)}, {"seed", static_cast<double>(seed)}}, "genericRandom")};
}

GeneratedDataset line(const std::vector<double>& positions) {
  Coords coords;
  for (double p : positions) coords.push_back({p});
  std::ostringstream desc;
  desc << "line(";
  for (std::size_t i = 0; i < positions.size(); ++i) desc << (i ? "," : "") << positions[i];
  desc << ')';
  return {dataset_from_coords(std::move(coords), unit_weights(positions.size())), std::nullopt, desc.str()};
}

std::vector<double> log_uniform_weights(std::size_t n, double lo, double hi, Rng& rng) {
  std::vector<double> w(n);
  for (double& x : w) x = rng.log_uniform(lo, hi);
  return w;
}

}  // namespace clusterlab
