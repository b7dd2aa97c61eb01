#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "clusterlab/core.hpp"

namespace clusterlab {

inline constexpr std::size_t kDefaultEnumerationCap = 12;

/// Enumeration cap: CLUSTERLAB_MAX_N if set to a positive integer, else 12.
std::size_t enumeration_cap();

/// Throws CapExceeded naming the cap when n > cap.
void check_enumeration_cap(std::size_t n, std::size_t cap);

/// Walks every partition of {0..n-1} into exactly k non-empty blocks, as
/// restricted-growth strings in lexicographic order.
///
///   RestrictedGrowthEnumerator e(4, 2);
///   do { use(e.labels()); } while (e.next());
class RestrictedGrowthEnumerator {
 public:
  RestrictedGrowthEnumerator(std::size_t n, int k);

  std::span<const int> labels() const { return labels_; }
  /// Position in canonical order, starting at 0.
  std::uint64_t index() const { return index_; }
  /// Advances; false once the last partition has been passed.
  bool next();

 private:
  void fill_suffix(std::size_t from, int used);

  std::size_t n_;
  int k_;
  std::vector<int> labels_;
  std::vector<int> prefix_max_;  // prefix_max_[i] = max(labels_[0..i])
  std::uint64_t index_ = 0;
};

/// Calls visit(labels) once per k-partition of n elements in canonical
/// order. Requires 1 < k < n and n <= cap.
void for_each_partition(std::size_t n, int k, const std::function<void(std::span<const int>)>& visit,
                        std::size_t cap = enumeration_cap());

/// Materialized form of for_each_partition.
std::vector<Clustering> enumerate_partitions(std::size_t n, int k, std::size_t cap = enumeration_cap());

/// Stirling number of the second kind.
std::uint64_t stirling2(std::size_t n, std::size_t k);

}  // namespace clusterlab
