#pragma once

// Label-masked row reductions: the inner loops of every cost function and
// linkage in the library. Each reduction reads one table row and a label per
// column and folds only the columns whose label matches (or differs from) a
// target label.
//
// A scalar reference implementation is always built; SIMD variants (AVX2 on
// x86-64, NEON on AArch64) are compiled separately and chosen at runtime.
// Sums use compensated (TwoSum) accumulation in every variant so results agree
// to within a few ulps regardless of lane order; min/max are exact.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace clusterlab::kernels {

using Label = std::int32_t;

enum class Isa { scalar, avx2, neon };

std::string_view to_string(Isa isa);

struct KernelTable {
  /// sum of row[j] over j with labels[j] == label
  double (*sum_eq)(const double* row, const Label* labels, std::size_t n, Label label);
  /// sum of row[j] over j with labels[j] != label
  double (*sum_ne)(const double* row, const Label* labels, std::size_t n, Label label);
  /// max of row[j] over j with labels[j] == label; 0 when none match
  double (*max_eq)(const double* row, const Label* labels, std::size_t n, Label label);
  /// min of row[j] over j with labels[j] == label; +inf when none match
  double (*min_eq)(const double* row, const Label* labels, std::size_t n, Label label);
};

const KernelTable& scalar_table();
/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* simd_table(Isa isa);

/// Best available ISA, unless CLUSTERLAB_ISA=scalar|avx2|neon pins one.
Isa active_isa();
/// Overrides the runtime choice; throws if the ISA is unavailable.
void set_active_isa(Isa isa);
const KernelTable& active();

inline double sum_eq(std::span<const double> row, std::span<const Label> labels, Label label) {
  return active().sum_eq(row.data(), labels.data(), row.size(), label);
}
inline double sum_ne(std::span<const double> row, std::span<const Label> labels, Label label) {
  return active().sum_ne(row.data(), labels.data(), row.size(), label);
}
inline double max_eq(std::span<const double> row, std::span<const Label> labels, Label label) {
  return active().max_eq(row.data(), labels.data(), row.size(), label);
}
inline double min_eq(std::span<const double> row, std::span<const Label> labels, Label label) {
  return active().min_eq(row.data(), labels.data(), row.size(), label);
}

/// Neumaier compensated accumulator for the scalar glue around the kernels.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace clusterlab::kernels
