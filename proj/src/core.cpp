#include "clusterlab/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace clusterlab {

std::string to_string(TableKind kind) { return kind == TableKind::distance ? "distance" : "similarity"; }

std::optional<TableKind> parse_table_kind(std::string_view text) {
  if (text == "distance") return TableKind::distance;
  if (text == "similarity") return TableKind::similarity;
  return std::nullopt;
}

PairTable::PairTable(TableKind kind, std::size_t n) : kind_(kind), n_(n), values_(n * n, 0.0) {}

PairTable::PairTable(TableKind kind, const std::vector<std::vector<double>>& rows)
    : kind_(kind), n_(rows.size()), values_(rows.size() * rows.size()) {
  for (std::size_t i = 0; i < n_; ++i) {
    if (rows[i].size() != n_) throw InvalidInput("pair table is not square");
    std::copy(rows[i].begin(), rows[i].end(), values_.begin() + static_cast<std::ptrdiff_t>(i * n_));
  }
}

void PairTable::set_symmetric(std::size_t i, std::size_t j, double v) {
  at(i, j) = v;
  at(j, i) = v;
}

PairTable distance_table(const Coords& coords) {
  const std::size_t n = coords.size();
  PairTable table(TableKind::distance, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (coords[i].size() != coords[0].size()) throw InvalidInput("coordinates have mixed dimension");
    for (std::size_t j = i + 1; j < n; ++j) {
      double sq = 0.0;
      for (std::size_t c = 0; c < coords[i].size(); ++c) {
        const double diff = coords[i][c] - coords[j][c];
        sq += diff * diff;
      }
      table.set_symmetric(i, j, std::sqrt(sq));
    }
  }
  return table;
}

double WeightedDataset::total_weight() const {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

const Coords& WeightedDataset::coords() const {
  if (!coords_) throw InvalidInput("dataset has no coordinates");
  return *coords_;
}

namespace {

void check_weights(std::span<const double> weights, std::size_t n) {
  if (weights.size() != n) throw InvalidInput("weight count does not match element count");
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) throw InvalidInput("non-positive weight");
  }
}

bool rows_match(const PairTable& t, std::size_t x, std::size_t y, double tol) {
  for (std::size_t z = 0; z < t.n(); ++z) {
    if (z == x || z == y) continue;
    if (std::abs(t(x, z) - t(y, z)) > tol) return false;
  }
  return true;
}

}  // namespace

WeightedDataset WeightedDataset::with_weights(std::vector<double> weights) const {
  check_weights(weights, n());
  WeightedDataset out = *this;
  out.weights_ = std::move(weights);
  return out;
}

WeightedDataset WeightedDataset::subset(std::span<const std::size_t> members) const {
  WeightedDataset out;
  const std::size_t m = members.size();
  out.table_ = PairTable(kind(), m);
  out.weights_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    if (members[a] >= n()) throw InvalidInput("subset member out of range");
    out.weights_[a] = weights_[members[a]];
    for (std::size_t b = 0; b < m; ++b) out.table_.at(a, b) = table_(members[a], members[b]);
  }
  if (coords_) {
    Coords sub;
    sub.reserve(m);
    for (std::size_t idx : members) sub.push_back((*coords_)[idx]);
    out.coords_ = std::move(sub);
  }
  return out;
}

WeightedDataset validate_dataset(PairTable raw, std::vector<double> weights, double dup_tol) {
  const std::size_t n = raw.n();
  check_weights(weights, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = raw(i, j);
      if (!std::isfinite(v)) throw InvalidInput("non-finite table entry");
      if (v < 0.0) throw InvalidInput("negative table entry");
      if (v != raw(j, i)) throw InvalidInput("asymmetric table");
    }
  }
  if (raw.kind() == TableKind::distance) {
    for (std::size_t i = 0; i < n; ++i) {
      if (raw(i, i) != 0.0) throw InvalidInput("distance table has non-zero diagonal");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (raw(i, j) <= dup_tol && !rows_match(raw, i, j, dup_tol)) {
          throw InvalidInput("zero distance between non-duplicates (invalid metric)");
        }
      }
    }
  }
  WeightedDataset ds;
  ds.table_ = std::move(raw);
  ds.weights_ = std::move(weights);
  return ds;
}

WeightedDataset dataset_from_coords(Coords coords, std::vector<double> weights) {
  WeightedDataset ds = validate_dataset(distance_table(coords), std::move(weights));
  ds.coords_ = std::move(coords);
  return ds;
}

DedupeResult dedupe(const PairTable& unweighted, double tol) {
  if (unweighted.kind() != TableKind::distance) throw KindMismatch("dedupe requires a distance table");
  const std::size_t n = unweighted.n();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, unassigned);
  std::vector<std::size_t> representative;
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of[x] != unassigned) continue;
    const std::size_t cls = representative.size();
    representative.push_back(x);
    class_of[x] = cls;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (class_of[y] != unassigned || unweighted(x, y) > tol) continue;
      if (!rows_match(unweighted, x, y, tol)) {
        throw InvalidInput("zero distance between non-duplicates (invalid metric)");
      }
      class_of[y] = cls;
    }
  }
  const std::size_t m = representative.size();
  PairTable table(TableKind::distance, m);
  std::vector<double> weights(m, 0.0);
  for (std::size_t x = 0; x < n; ++x) weights[class_of[x]] += 1.0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      table.at(a, b) = a == b ? 0.0 : unweighted(representative[a], representative[b]);
    }
  }
  return {validate_dataset(std::move(table), std::move(weights)), std::move(class_of), std::move(representative)};
}

ExpandResult expand(const WeightedDataset& ds) {
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < ds.n(); ++i) {
    const double w = ds.weight(i);
    if (w != std::floor(w)) throw InvalidInput("expand requires integer weights");
    origin.insert(origin.end(), static_cast<std::size_t>(w), i);
  }
  const std::size_t m = origin.size();
  PairTable table(ds.kind(), m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b) {
        table.at(a, b) = ds.d(origin[a], origin[a]);
      } else if (origin[a] == origin[b]) {
        // Copies: zero distance, or the element's self-similarity.
        table.at(a, b) = ds.kind() == TableKind::distance ? 0.0 : ds.d(origin[a], origin[a]);
      } else {
        table.at(a, b) = ds.d(origin[a], origin[b]);
      }
    }
  }
  if (ds.has_coords()) {
    Coords coords;
    for (std::size_t idx : origin) coords.push_back(ds.coords()[idx]);
    // Recompute from coords so the table is bit-identical to a fresh load.
    return {dataset_from_coords(std::move(coords), unit_weights(m)), std::move(origin)};
  }
  return {validate_dataset(std::move(table), unit_weights(m)), std::move(origin)};
}

int canonicalize_labels(std::span<int> labels) {
  std::vector<int> remap;
  int next = 0;
  for (int& l : labels) {
    if (l < 0) throw InvalidInput("negative cluster label");
    const auto raw = static_cast<std::size_t>(l);
    if (raw >= remap.size()) remap.resize(raw + 1, -1);
    if (remap[raw] < 0) remap[raw] = next++;
    l = remap[raw];
  }
  return next;
}

Clustering Clustering::from_labels(std::span<const int> labels) {
  std::vector<int> canon(labels.begin(), labels.end());
  const int k = canonicalize_labels(canon);
  const auto n = static_cast<int>(canon.size());
  if (!(1 < k && k < n)) {
    throw InvalidInput("clustering must have 1 < k < n (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  return Clustering(std::move(canon), k);
}

Clustering Clustering::from_blocks(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n) {
  std::vector<int> labels(n, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw InvalidInput("empty cluster");
    for (std::size_t x : blocks[b]) {
      if (x >= n || labels[x] >= 0) throw InvalidInput("blocks do not partition the element set");
      labels[x] = static_cast<int>(b);
    }
  }
  if (std::find(labels.begin(), labels.end(), -1) != labels.end()) {
    throw InvalidInput("blocks do not cover the element set");
  }
  return from_labels(labels);
}

std::vector<std::vector<std::size_t>> Clustering::blocks() const {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k_));
  for (std::size_t i = 0; i < labels_.size(); ++i) out[static_cast<std::size_t>(labels_[i])].push_back(i);
  return out;
}

std::vector<double> Clustering::cluster_weights(std::span<const double> weights) const {
  std::vector<double> out(static_cast<std::size_t>(k_), 0.0);
  for (std::size_t i = 0; i < labels_.size(); ++i) out[static_cast<std::size_t>(labels_[i])] += weights[i];
  return out;
}

std::size_t Clustering::min_cluster_size() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k_), 0);
  for (int l : labels_) ++sizes[static_cast<std::size_t>(l)];
  return *std::min_element(sizes.begin(), sizes.end());
}

bool Clustering::has_singleton() const { return min_cluster_size() == 1; }

std::string Clustering::to_string() const {
  std::ostringstream out;
  out << '{';
  const auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) out << ',';
    out << '{';
    for (std::size_t i = 0; i < bs[b].size(); ++i) {
      if (i) out << ',';
      out << bs[b][i];
    }
    out << '}';
  }
  out << '}';
  return out.str();
}

}  // namespace clusterlab
