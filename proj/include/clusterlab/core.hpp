#pragma once

// Domain types shared by every clusterlab module: pairwise tables, weighted
// datasets and clusterings, plus the duplicate <-> weight translation.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clusterlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad table, bad weights, bad clustering.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operation applied to a distance table when it needs similarities, or vice versa.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration refused because n is above the configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

enum class TableKind { distance, similarity };

std::string to_string(TableKind kind);
std::optional<TableKind> parse_table_kind(std::string_view text);

/// Dense symmetric n x n table of distances or similarities, row-major.
class PairTable {
 public:
  PairTable() = default;
  PairTable(TableKind kind, std::size_t n);
  PairTable(TableKind kind, const std::vector<std::vector<double>>& rows);

  TableKind kind() const { return kind_; }
  std::size_t n() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return values_[i * n_ + j]; }
  double& at(std::size_t i, std::size_t j) { return values_[i * n_ + j]; }
  /// Writes both (i,j) and (j,i).
  void set_symmetric(std::size_t i, std::size_t j, double v);

  std::span<const double> row(std::size_t i) const { return {values_.data() + i * n_, n_}; }
  std::span<const double> values() const { return values_; }

  bool operator==(const PairTable&) const = default;

 private:
  TableKind kind_ = TableKind::distance;
  std::size_t n_ = 0;
  std::vector<double> values_;
};

using Coords = std::vector<std::vector<double>>;

/// Euclidean distance table for a point set.
PairTable distance_table(const Coords& coords);

/// Elements with strictly positive weights over a validated pair table.
/// Construct through validate_dataset / dataset_from_coords.
class WeightedDataset {
 public:
  std::size_t n() const { return table_.n(); }
  TableKind kind() const { return table_.kind(); }
  const PairTable& table() const { return table_; }
  double d(std::size_t i, std::size_t j) const { return table_(i, j); }

  std::span<const double> weights() const { return weights_; }
  double weight(std::size_t i) const { return weights_[i]; }
  double total_weight() const;

  bool has_coords() const { return coords_.has_value(); }
  const Coords& coords() const;

  /// Same elements and table under a different weight function.
  WeightedDataset with_weights(std::vector<double> weights) const;
  /// Restriction to the given elements, in the given order.
  WeightedDataset subset(std::span<const std::size_t> members) const;

  bool operator==(const WeightedDataset&) const = default;

 private:
  friend WeightedDataset validate_dataset(PairTable, std::vector<double>, double);
  friend WeightedDataset dataset_from_coords(Coords, std::vector<double>);

  PairTable table_;
  std::vector<double> weights_;
  std::optional<Coords> coords_;
};

/// Checks symmetry, non-negativity and weight positivity. For distance
/// tables a zero off-diagonal entry is accepted only between duplicates
/// (rows equal within dup_tol).
WeightedDataset validate_dataset(PairTable raw, std::vector<double> weights, double dup_tol = 0.0);

/// Distance dataset whose table is the Euclidean metric on coords.
WeightedDataset dataset_from_coords(Coords coords, std::vector<double> weights);

inline std::vector<double> unit_weights(std::size_t n) { return std::vector<double>(n, 1.0); }

struct DedupeResult {
  WeightedDataset dataset;
  /// class_of[original] = index of its representative in dataset.
  std::vector<std::size_t> class_of;
  /// representative[j] = first original element of class j.
  std::vector<std::size_t> representative;
};

/// Collapses duplicate elements (d(x,y)=0 and equal rows) into one
/// representative whose weight is the class size.
DedupeResult dedupe(const PairTable& unweighted, double tol = 0.0);

struct ExpandResult {
  WeightedDataset dataset;             // unit weights
  std::vector<std::size_t> origin;     // expanded index -> weighted index
};

/// Replaces each element of integer weight m by m unit-weight copies, laid
/// out contiguously in element order. For similarity tables copies of x are
/// given mutual similarity s(x,x) (the diagonal).
ExpandResult expand(const WeightedDataset& ds);

/// Unlabeled partition of 0..n-1 into k non-empty blocks with 1 < k < n.
/// Labels are kept in restricted-growth form so equality is partition equality.
class Clustering {
 public:
  static Clustering from_labels(std::span<const int> labels);
  static Clustering from_blocks(const std::vector<std::vector<std::size_t>>& blocks, std::size_t n);

  std::size_t n() const { return labels_.size(); }
  int k() const { return k_; }
  std::span<const int> labels() const { return labels_; }
  int label(std::size_t i) const { return labels_[i]; }
  bool same_cluster(std::size_t i, std::size_t j) const { return labels_[i] == labels_[j]; }

  std::vector<std::vector<std::size_t>> blocks() const;
  std::vector<double> cluster_weights(std::span<const double> weights) const;
  bool has_singleton() const;
  std::size_t min_cluster_size() const;

  std::string to_string() const;

  auto operator<=>(const Clustering&) const = default;

 private:
  Clustering(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k) {}
  std::vector<int> labels_;
  int k_ = 0;
};

/// Relabels to restricted-growth form (first occurrence order); returns block count.
int canonicalize_labels(std::span<int> labels);

}  // namespace clusterlab
