#include "clusterlab/hierarchical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "clusterlab/kernels.hpp"

namespace clusterlab {

std::string to_string(Linkage linkage) {
  switch (linkage) {
    case Linkage::single: return "single";
    case Linkage::complete: return "complete";
    case Linkage::average: return "average";
    case Linkage::ward: return "ward";
  }
  return "unknown";
}

std::optional<Linkage> parse_linkage(std::string_view text) {
  for (Linkage l : {Linkage::single, Linkage::complete, Linkage::average, Linkage::ward}) {
    if (text == to_string(l)) return l;
  }
  return std::nullopt;
}

Centroid centroid(std::span<const std::size_t> members, const WeightedDataset& ds) {
  const Coords& coords = ds.coords();
  Centroid out;
  out.position.assign(coords.empty() ? 0 : coords[0].size(), 0.0);
  kernels::CompensatedSum mass;
  for (std::size_t x : members) mass.add(ds.weight(x));
  out.mass = mass.value();
  for (std::size_t dim = 0; dim < out.position.size(); ++dim) {
    kernels::CompensatedSum acc;
    for (std::size_t x : members) acc.add(ds.weight(x) * coords[x][dim]);
    out.position[dim] = acc.value() / out.mass;
  }
  return out;
}

Centroid merge(const Centroid& a, const Centroid& b) {
  Centroid out;
  out.mass = a.mass + b.mass;
  out.position.resize(a.position.size());
  for (std::size_t dim = 0; dim < a.position.size(); ++dim) {
    out.position[dim] = (a.mass * a.position[dim] + b.mass * b.position[dim]) / out.mass;
  }
  return out;
}

namespace {

double ward_value(const Centroid& a, const Centroid& b) {
  double sq = 0.0;
  for (std::size_t dim = 0; dim < a.position.size(); ++dim) {
    const double diff = a.position[dim] - b.position[dim];
    sq += diff * diff;
  }
  return a.mass * b.mass * sq / (a.mass + b.mass);
}

// Element-level tables shared by every linkage evaluation on one dataset.
struct LinkageContext {
  Linkage linkage;
  const WeightedDataset& ds;
  std::size_t n;
  std::vector<double> rows;  // d(a,b), or d(a,b) w(b) for average linkage

  LinkageContext(Linkage l, const WeightedDataset& data) : linkage(l), ds(data), n(data.n()), rows(n * n) {
    if (linkage == Linkage::ward && !ds.has_coords()) {
      throw InvalidInput("ward linkage requires a dataset with coordinates");
    }
    if (ds.kind() != TableKind::distance) throw KindMismatch("linkage-based clustering requires a distance table");
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        rows[a * n + b] = linkage == Linkage::average ? ds.d(a, b) * ds.weight(b) : ds.d(a, b);
      }
    }
  }

  // Linkage between members_a and the elements labelled label_b; the masses
  // are only read for average linkage.
  double between(std::span<const std::size_t> members_a, std::span<const int> labels, int label_b, double mass_a,
                 double mass_b) const {
    const auto& kt = kernels::active();
    switch (linkage) {
      case Linkage::single: {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a : members_a) best = std::min(best, kt.min_eq(rows.data() + a * n, labels.data(), n, label_b));
        return best;
      }
      case Linkage::complete: {
        double best = 0.0;
        for (std::size_t a : members_a) best = std::max(best, kt.max_eq(rows.data() + a * n, labels.data(), n, label_b));
        return best;
      }
      case Linkage::average: {
        kernels::CompensatedSum acc;
        for (std::size_t a : members_a) acc.add(ds.weight(a) * kt.sum_eq(rows.data() + a * n, labels.data(), n, label_b));
        return acc.value() / (mass_a * mass_b);
      }
      case Linkage::ward:
        break;
    }
    throw Error("ward linkage is evaluated from centroids");
  }
};

double mass_of(std::span<const std::size_t> members, const WeightedDataset& ds) {
  kernels::CompensatedSum acc;
  for (std::size_t x : members) acc.add(ds.weight(x));
  return acc.value();
}

}  // namespace

double linkage_value(Linkage linkage, std::span<const std::size_t> a, std::span<const std::size_t> b,
                     const WeightedDataset& ds) {
  if (a.empty() || b.empty()) throw InvalidInput("linkage requires non-empty clusters");
  std::vector<int> labels(ds.n(), 0);
  for (std::size_t x : a) labels.at(x) = 1;
  for (std::size_t x : b) {
    if (labels.at(x) == 1) throw InvalidInput("linkage requires disjoint clusters");
    labels[x] = 2;
  }
  if (linkage == Linkage::ward) {
    if (!ds.has_coords()) throw InvalidInput("ward linkage requires a dataset with coordinates");
    return ward_value(centroid(a, ds), centroid(b, ds));
  }
  const LinkageContext ctx(linkage, ds);
  return ctx.between(a, labels, 2, mass_of(a, ds), mass_of(b, ds));
}

Dendrogram agglomerate(const WeightedDataset& ds, Linkage linkage) {
  const std::size_t n = ds.n();
  if (n < 2) throw InvalidInput("agglomeration requires at least two elements");
  const LinkageContext ctx(linkage, ds);

  // Slot s holds the cluster whose smallest element is s.
  std::vector<int> labels(n);
  std::vector<std::vector<std::size_t>> members(n);
  std::vector<double> mass(n);
  std::vector<Centroid> centroids(linkage == Linkage::ward ? n : 0);
  std::vector<int> node_of(n);
  std::vector<bool> active(n, true);
  for (std::size_t s = 0; s < n; ++s) {
    labels[s] = static_cast<int>(s);
    members[s] = {s};
    mass[s] = ds.weight(s);
    node_of[s] = static_cast<int>(s);
    if (linkage == Linkage::ward) centroids[s] = centroid(members[s], ds);
  }

  std::vector<double> cache(n * n, 0.0);
  const auto compute = [&](std::size_t s, std::size_t t) {
    if (linkage == Linkage::ward) return ward_value(centroids[s], centroids[t]);
    return ctx.between(members[s], labels, static_cast<int>(t), mass[s], mass[t]);
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) cache[s * n + t] = compute(s, t);
  }

  Dendrogram d(n);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < n; ++s) {
      if (!active[s]) continue;
      for (std::size_t t = s + 1; t < n; ++t) {
        if (active[t]) best = std::min(best, cache[s * n + t]);
      }
    }
    const double threshold = best + kLinkageTieTolerance * std::abs(best);
    std::size_t keep = n, gone = n;
    for (std::size_t s = 0; s < n && keep == n; ++s) {
      if (!active[s]) continue;
      for (std::size_t t = s + 1; t < n; ++t) {
        if (active[t] && cache[s * n + t] <= threshold) {
          keep = s;
          gone = t;
          break;
        }
      }
    }

    node_of[keep] = d.join(node_of[keep], node_of[gone], cache[keep * n + gone]);
    for (std::size_t x : members[gone]) labels[x] = static_cast<int>(keep);
    members[keep].insert(members[keep].end(), members[gone].begin(), members[gone].end());
    std::sort(members[keep].begin(), members[keep].end());
    members[gone].clear();
    mass[keep] = mass_of(members[keep], ds);
    if (linkage == Linkage::ward) centroids[keep] = centroid(members[keep], ds);
    active[gone] = false;

    for (std::size_t t = 0; t < n; ++t) {
      if (!active[t] || t == keep) continue;
      const std::size_t lo = std::min(keep, t), hi = std::max(keep, t);
      cache[lo * n + hi] = compute(lo, hi);
    }
  }
  return d;
}

PartitionalAlgorithm exact_partitional(Objective objective, MinimizeOptions options) {
  return [objective, options](const WeightedDataset& ds, int k) {
    return exact_minimize(ds, ObjectiveSpec{objective, k}, options);
  };
}

namespace {

int split_node(const WeightedDataset& ds, const PartitionalAlgorithm& split, const std::vector<std::size_t>& members,
               Dendrogram& d) {
  if (members.size() == 1) return d.leaf_of(members[0]);
  std::vector<std::size_t> left, right;
  if (members.size() == 2) {
    left = {members[0]};
    right = {members[1]};
  } else {
    const Clustering halves = split(ds.subset(members), 2);
    if (halves.n() != members.size() || halves.k() != 2) {
      throw Error("divisive: partitional algorithm did not return a 2-partition");
    }
    for (std::size_t i = 0; i < members.size(); ++i) (halves.label(i) == 0 ? left : right).push_back(members[i]);
  }
  // Canonical labels put members[0] (the smallest) in the left block.
  const int l = split_node(ds, split, left, d);
  const int r = split_node(ds, split, right, d);
  return d.join(l, r);
}

}  // namespace

Dendrogram divisive(const WeightedDataset& ds, const PartitionalAlgorithm& split) {
  if (ds.n() < 2) throw InvalidInput("divisive clustering requires at least two elements");
  std::vector<std::size_t> all(ds.n());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Dendrogram d(ds.n());
  split_node(ds, split, all, d);
  return d;
}

}  // namespace clusterlab
