#include "clusterlab/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace clusterlab {

std::size_t enumeration_cap() {
  const char* env = std::getenv("CLUSTERLAB_MAX_N");
  if (env == nullptr) return kDefaultEnumerationCap;
  std::size_t value = 0;
  const std::string_view text(env);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefaultEnumerationCap;
  return value;
}

void check_enumeration_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceeded("exact enumeration refused: n=" + std::to_string(n) + " exceeds the enumeration cap of " +
                      std::to_string(cap) + " (raise with --max-n or CLUSTERLAB_MAX_N)");
  }
}

RestrictedGrowthEnumerator::RestrictedGrowthEnumerator(std::size_t n, int k)
    : n_(n), k_(k), labels_(n, 0), prefix_max_(n, 0) {
  if (!(1 < k && static_cast<std::size_t>(k) < n)) {
    throw InvalidInput("partition enumeration requires 1 < k < n");
  }
  fill_suffix(1, 1);
}

// Lexicographically smallest completion of positions [from, n) given that
// `used` labels already appear in the prefix: zeros, then the missing labels
// packed at the end.
void RestrictedGrowthEnumerator::fill_suffix(std::size_t from, int used) {
  const std::size_t remaining = n_ - from;
  const auto missing = static_cast<std::size_t>(k_ - used);
  const std::size_t zeros = remaining - missing;
  int running = from == 0 ? 0 : prefix_max_[from - 1];
  for (std::size_t i = from; i < n_; ++i) {
    const std::size_t offset = i - from;
    labels_[i] = offset < zeros ? 0 : used + static_cast<int>(offset - zeros);
    running = std::max(running, labels_[i]);
    prefix_max_[i] = running;
  }
}

bool RestrictedGrowthEnumerator::next() {
  for (std::size_t i = n_ - 1; i >= 1; --i) {
    const int ceiling = std::min(prefix_max_[i - 1] + 1, k_ - 1);
    if (labels_[i] < ceiling) {
      const int candidate = labels_[i] + 1;
      const int used = std::max(prefix_max_[i - 1], candidate) + 1;
      if (static_cast<std::size_t>(used) + (n_ - 1 - i) >= static_cast<std::size_t>(k_)) {
        labels_[i] = candidate;
        prefix_max_[i] = std::max(prefix_max_[i - 1], candidate);
        fill_suffix(i + 1, used);
        ++index_;
        return true;
      }
    }
  }
  return false;
}

void for_each_partition(std::size_t n, int k, const std::function<void(std::span<const int>)>& visit,
                        std::size_t cap) {
  check_enumeration_cap(n, cap);
  RestrictedGrowthEnumerator e(n, k);
  do {
    visit(e.labels());
  } while (e.next());
}

std::vector<Clustering> enumerate_partitions(std::size_t n, int k, std::size_t cap) {
  std::vector<Clustering> out;
  for_each_partition(n, k, [&](std::span<const int> labels) { out.push_back(Clustering::from_labels(labels)); }, cap);
  return out;
}

std::uint64_t stirling2(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

}  // namespace clusterlab
