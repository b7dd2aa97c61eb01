#pragma once

// Test-side oracles: direct-loop cost formulas, a brute-force minimizer that
// enumerates k^n label vectors, and small dataset builders. None of this goes
// through the library's kernels, enumerator or minimizer.

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "clusterlab/core.hpp"
#include "clusterlab/hierarchical.hpp"
#include "clusterlab/partitional.hpp"

namespace oracle {

using clusterlab::Coords;
using clusterlab::Objective;
using clusterlab::TableKind;
using clusterlab::WeightedDataset;

inline WeightedDataset line(const std::vector<double>& xs, std::vector<double> w = {}) {
  Coords c;
  for (double x : xs) c.push_back({x});
  if (w.empty()) w.assign(xs.size(), 1.0);
  return clusterlab::dataset_from_coords(c, w);
}

inline WeightedDataset matrix(TableKind kind, const std::vector<std::vector<double>>& rows, std::vector<double> w = {}) {
  if (w.empty()) w.assign(rows.size(), 1.0);
  return clusterlab::validate_dataset(clusterlab::PairTable(kind, rows), w);
}

/// Similarity table: `within` inside blocks, `cross` across, diagonal 10.
inline WeightedDataset blocks(const std::vector<int>& labels, double within, double cross, std::vector<double> w = {}) {
  const std::size_t n = labels.size();
  std::vector<std::vector<double>> rows(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = i == j ? 10.0 : (labels[i] == labels[j] ? within : cross);
  }
  return matrix(TableKind::similarity, rows, std::move(w));
}

inline std::vector<int> labels_of(const clusterlab::Clustering& c) { return {c.labels().begin(), c.labels().end()}; }

/// Cost straight from the written formulas, with plain loops.
inline double cost(Objective obj, const std::vector<int>& lab, const WeightedDataset& ds) {
  const std::size_t n = ds.n();
  const int k = *std::max_element(lab.begin(), lab.end()) + 1;
  const auto w = [&](std::size_t i) { return ds.weight(i); };
  std::vector<double> cw(k, 0.0);
  for (std::size_t i = 0; i < n; ++i) cw[lab[i]] += w(i);
  double total = 0.0;
  switch (obj) {
    case Objective::kmeans:
    case Objective::minsum:
      for (int c = 0; c < k; ++c) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = i + 1; j < n; ++j) {
            if (lab[i] != c || lab[j] != c) continue;
            const double d = ds.d(i, j);
            s += (obj == Objective::kmeans ? d * d : d) * w(i) * w(j);
          }
        }
        total += obj == Objective::kmeans ? s / cw[c] : s;
      }
      return total;
    case Objective::kmedian:
    case Objective::kmedoids:
      for (int c = 0; c < k; ++c) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t e = 0; e < n; ++e) {
          if (lab[e] != c) continue;
          double s = 0.0;
          for (std::size_t x = 0; x < n; ++x) {
            if (lab[x] != c) continue;
            const double d = ds.d(x, e);
            s += (obj == Objective::kmedoids ? d * d : d) * w(x);
          }
          best = std::min(best, s);
        }
        total += best;
      }
      return total;
    case Objective::mindiameter:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (lab[i] == lab[j]) total = std::max(total, ds.d(i, j));
        }
      }
      return total;
    case Objective::kcenter:
      for (int c = 0; c < k; ++c) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t e = 0; e < n; ++e) {
          if (lab[e] != c) continue;
          double r = 0.0;
          for (std::size_t x = 0; x < n; ++x) {
            if (lab[x] == c) r = std::max(r, ds.d(x, e));
          }
          best = std::min(best, r);
        }
        total = std::max(total, best);
      }
      return total;
    case Objective::ratiocut:
      for (int c = 0; c < k; ++c) {
        double s = 0.0;
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            if (lab[x] == c && lab[y] != c) s += ds.d(x, y) * w(x) * w(y);
          }
        }
        total += s / cw[c];
      }
      return total / 2.0;
  }
  return total;
}

/// Sum of w(x)|x - mu_c|^2 with weighted centroids mu_c.
inline double centroid_cost(const std::vector<int>& lab, const WeightedDataset& ds) {
  const auto& X = ds.coords();
  const std::size_t dim = X[0].size();
  const int k = *std::max_element(lab.begin(), lab.end()) + 1;
  std::vector<std::vector<double>> mu(k, std::vector<double>(dim, 0.0));
  std::vector<double> mass(k, 0.0);
  for (std::size_t i = 0; i < X.size(); ++i) {
    mass[lab[i]] += ds.weight(i);
    for (std::size_t t = 0; t < dim; ++t) mu[lab[i]][t] += ds.weight(i) * X[i][t];
  }
  for (int c = 0; c < k; ++c) {
    for (double& v : mu[c]) v /= mass[c];
  }
  double total = 0.0;
  for (std::size_t i = 0; i < X.size(); ++i) {
    double sq = 0.0;
    for (std::size_t t = 0; t < dim; ++t) sq += (X[i][t] - mu[lab[i]][t]) * (X[i][t] - mu[lab[i]][t]);
    total += ds.weight(i) * sq;
  }
  return total;
}

/// Restricted-growth relabeling.
inline std::vector<int> canonical(const std::vector<int>& lab) {
  std::map<int, int> seen;
  std::vector<int> out;
  for (int l : lab) out.push_back(seen.try_emplace(l, static_cast<int>(seen.size())).first->second);
  return out;
}

/// Every k-partition of n as canonical label vectors, found by counting
/// through all k^n labelings and keeping the canonical ones with k blocks.
inline std::vector<std::vector<int>> all_partitions(std::size_t n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> lab(n, 0);
  while (true) {
    if (canonical(lab) == lab && *std::max_element(lab.begin(), lab.end()) == k - 1) out.push_back(lab);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++lab[i] < k) break;
      lab[i] = 0;
      if (i == 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
    }
  }
}

/// Brute-force argmin: lexicographically first canonical labeling whose cost
/// is within rel_tol of the minimum. Weights are scaled to max 1 first, as
/// the library does.
inline std::vector<int> argmin(Objective obj, int k, const WeightedDataset& ds, double rel_tol = 1e-12) {
  const double top = *std::max_element(ds.weights().begin(), ds.weights().end());
  std::vector<double> w(ds.weights().begin(), ds.weights().end());
  for (double& x : w) x /= top;
  const auto scaled = ds.with_weights(w);
  const auto parts = all_partitions(ds.n(), k);
  std::vector<double> costs;
  for (const auto& p : parts) costs.push_back(cost(obj, p, scaled));
  const double best = *std::min_element(costs.begin(), costs.end());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (costs[i] <= best + rel_tol * std::abs(best)) return parts[i];
  }
  return parts.front();
}

inline Coords random_points(std::size_t n, std::size_t dim, std::mt19937_64& gen, double scale = 10.0) {
  std::uniform_real_distribution<double> u(0.0, scale);
  Coords c(n, std::vector<double>(dim));
  for (auto& p : c) {
    for (double& x : p) x = u(gen);
  }
  return c;
}

inline std::vector<double> random_weights(std::size_t n, std::mt19937_64& gen, double lo = 0.1, double hi = 10.0) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  std::vector<double> w(n);
  for (double& x : w) x = std::exp(u(gen));
  return w;
}

inline std::vector<int> random_labels(std::size_t n, int k, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> u(0, k - 1);
  while (true) {
    std::vector<int> lab(n);
    for (int& l : lab) l = u(gen);
    auto c = canonical(lab);
    if (*std::max_element(c.begin(), c.end()) == k - 1) return c;
  }
}

inline WeightedDataset random_similarity(std::size_t n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.1, 5.0);
  std::vector<std::vector<double>> rows(n, std::vector<double>(n, 10.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) rows[i][j] = rows[j][i] = u(gen);
  }
  return matrix(TableKind::similarity, rows);
}

using Sets = std::set<std::vector<std::size_t>>;

// Direct formula, no caching and no kernels.
inline double linkage_oracle(clusterlab::Linkage l, const std::vector<std::size_t>& A, const std::vector<std::size_t>& B,
                      const WeightedDataset& ds) {
  double lo = 1e300, hi = 0, sum = 0, wa = 0, wb = 0;
  for (auto a : A) wa += ds.weight(a);
  for (auto b : B) wb += ds.weight(b);
  for (auto a : A) {
    for (auto b : B) {
      lo = std::min(lo, ds.d(a, b));
      hi = std::max(hi, ds.d(a, b));
      sum += ds.d(a, b) * ds.weight(a) * ds.weight(b);
    }
  }
  if (l == clusterlab::Linkage::single) return lo;
  if (l == clusterlab::Linkage::complete) return hi;
  if (l == clusterlab::Linkage::average) return sum / (wa * wb);
  const auto& X = ds.coords();
  double sq = 0;
  for (std::size_t t = 0; t < X[0].size(); ++t) {
    double ca = 0, cb = 0;
    for (auto a : A) ca += ds.weight(a) * X[a][t];
    for (auto b : B) cb += ds.weight(b) * X[b][t];
    sq += (ca / wa - cb / wb) * (ca / wa - cb / wb);
  }
  return wa * wb * sq / (wa + wb);
}

// Naive agglomeration returning the set of node clusters.
inline Sets agglomerate_oracle(const WeightedDataset& ds, clusterlab::Linkage l) {
  std::vector<std::vector<std::size_t>> active;
  Sets out;
  for (std::size_t i = 0; i < ds.n(); ++i) {
    active.push_back({i});
    out.insert({i});
  }
  while (active.size() > 1) {
    std::sort(active.begin(), active.end());
    double best = 1e300;
    for (std::size_t s = 0; s < active.size(); ++s) {
      for (std::size_t t = s + 1; t < active.size(); ++t) best = std::min(best, linkage_oracle(l, active[s], active[t], ds));
    }
    bool done = false;
    for (std::size_t s = 0; s < active.size() && !done; ++s) {
      for (std::size_t t = s + 1; t < active.size() && !done; ++t) {
        if (linkage_oracle(l, active[s], active[t], ds) <= best + 1e-12 * std::abs(best)) {
          auto merged = active[s];
          merged.insert(merged.end(), active[t].begin(), active[t].end());
          std::sort(merged.begin(), merged.end());
          out.insert(merged);
          active.erase(active.begin() + t);
          active[s] = merged;
          done = true;
        }
      }
    }
  }
  return out;
}

}  // namespace oracle
