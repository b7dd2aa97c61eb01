#include "clusterlab/structure.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace clusterlab {

namespace {

void require(const WeightedDataset& ds, const Clustering& c, TableKind kind, const char* what) {
  if (ds.kind() != kind) throw KindMismatch(std::string(what) + " requires a " + to_string(kind) + " table");
  if (c.n() != ds.n()) throw InvalidInput("clustering and dataset sizes differ");
}

}  // namespace

PerfectResult is_perfect(const Clustering& c, const WeightedDataset& ds, double tol) {
  require(ds, c, TableKind::similarity, "is_perfect");
  const std::size_t n = ds.n();
  double min_within = std::numeric_limits<double>::infinity();
  double max_cross = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.same_cluster(i, j)) {
        min_within = std::min(min_within, ds.d(i, j));
      } else {
        max_cross = std::max(max_cross, ds.d(i, j));
      }
    }
  }
  if (min_within > max_cross + tol) return {true, std::nullopt};

  // First violating (x1<x2, x3<x4) tuple in lexicographic order.
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
      if (!c.same_cluster(x1, x2)) continue;
      for (std::size_t x3 = 0; x3 < n; ++x3) {
        for (std::size_t x4 = x3 + 1; x4 < n; ++x4) {
          if (c.same_cluster(x3, x4)) continue;
          if (ds.d(x1, x2) <= ds.d(x3, x4) + tol) {
            return {false, PerfectWitness{{x1, x2, x3, x4}, ds.d(x1, x2), ds.d(x3, x4)}};
          }
        }
      }
    }
  }
  return {false, std::nullopt};  // unreachable for a valid clustering
}

UniformResult is_separation_uniform(const Clustering& c, const WeightedDataset& ds, double tol) {
  require(ds, c, TableKind::similarity, "is_separation_uniform");
  const std::size_t n = ds.n();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::array<std::size_t, 2> lo_pair{}, hi_pair{};
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (c.same_cluster(i, j)) continue;
      const double s = ds.d(i, j);
      if (s < lo) {
        lo = s;
        lo_pair = {i, j};
      }
      if (s > hi) {
        hi = s;
        hi_pair = {i, j};
      }
      sum += s;
      ++count;
    }
  }
  // Some common value lies within tol of every entry iff the spread is <= 2 tol.
  if (hi - lo <= 2.0 * tol) return {true, sum / static_cast<double>(count), std::nullopt};
  return {false, std::nullopt, std::array<std::size_t, 4>{lo_pair[0], lo_pair[1], hi_pair[0], hi_pair[1]}};
}

NiceResult is_nice(const Clustering& c, const WeightedDataset& ds, double tol) {
  require(ds, c, TableKind::distance, "is_nice");
  const std::size_t n = ds.n();
  for (std::size_t x1 = 0; x1 < n; ++x1) {
    for (std::size_t x2 = 0; x2 < n; ++x2) {
      if (x2 == x1 || !c.same_cluster(x1, x2)) continue;
      for (std::size_t x3 = 0; x3 < n; ++x3) {
        if (c.same_cluster(x1, x3)) continue;
        if (ds.d(x1, x2) >= ds.d(x1, x3) - tol) {
          return {false, NiceWitness{x1, x2, x3, ds.d(x1, x2), ds.d(x1, x3)}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

std::vector<Clustering> enumerate_nice_clusterings(const WeightedDataset& ds, std::size_t cap) {
  if (ds.kind() != TableKind::distance) throw KindMismatch("nice clusterings require a distance table");
  const std::size_t n = ds.n();
  check_enumeration_cap(n, cap);
  std::vector<Clustering> out;
  // Nice iff every element's farthest cluster-mate is nearer than its
  // nearest outsider.
  for (int k = 2; static_cast<std::size_t>(k) < n; ++k) {
    for_each_partition(
        n, k,
        [&](std::span<const int> labels) {
          for (std::size_t x1 = 0; x1 < n; ++x1) {
            double far_within = 0.0;
            double near_cross = std::numeric_limits<double>::infinity();
            for (std::size_t y = 0; y < n; ++y) {
              if (y == x1) continue;
              if (labels[y] == labels[x1]) {
                far_within = std::max(far_within, ds.d(x1, y));
              } else {
                near_cross = std::min(near_cross, ds.d(x1, y));
              }
            }
            if (!(far_within < near_cross)) return;
          }
          out.push_back(Clustering::from_labels(labels));
        },
        cap);
  }
  return out;
}

StructureReport structure_report(const Clustering& c, const WeightedDataset& ds, double tol) {
  StructureReport report;
  std::ostringstream w;
  if (ds.kind() == TableKind::similarity) {
    const auto perfect = is_perfect(c, ds, tol);
    const auto uniform = is_separation_uniform(c, ds, tol);
    report.perfect = perfect.perfect;
    report.separation_uniform = uniform.uniform;
    report.lambda = uniform.lambda;
    if (perfect.witness) {
      const auto& e = perfect.witness->elements;
      w << "not perfect: s(" << e[0] << ',' << e[1] << ")=" << perfect.witness->within << " <= s(" << e[2] << ','
        << e[3] << ")=" << perfect.witness->cross;
      report.witnesses.push_back(w.str());
      w.str("");
    }
    if (uniform.witness) {
      const auto& e = *uniform.witness;
      w << "not separation-uniform: s(" << e[0] << ',' << e[1] << ")=" << ds.d(e[0], e[1]) << " != s(" << e[2] << ','
        << e[3] << ")=" << ds.d(e[2], e[3]);
      report.witnesses.push_back(w.str());
    }
  } else {
    const auto nice = is_nice(c, ds, tol);
    report.nice = nice.nice;
    if (nice.witness) {
      const auto& x = *nice.witness;
      w << "not nice: d(" << x.x1 << ',' << x.x2 << ")=" << x.within << " >= d(" << x.x1 << ',' << x.x3
        << ")=" << x.cross;
      report.witnesses.push_back(w.str());
    }
  }
  return report;
}

}  // namespace clusterlab
