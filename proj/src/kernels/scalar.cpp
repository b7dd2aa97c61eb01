#include <limits>

#include "clusterlab/kernels.hpp"

namespace clusterlab::kernels {
namespace {

double sum_eq_scalar(const double* row, const Label* labels, std::size_t n, Label label) {
  CompensatedSum acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (labels[j] == label) acc.add(row[j]);
  }
  return acc.value();
}

double sum_ne_scalar(const double* row, const Label* labels, std::size_t n, Label label) {
  CompensatedSum acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (labels[j] != label) acc.add(row[j]);
  }
  return acc.value();
}

double max_eq_scalar(const double* row, const Label* labels, std::size_t n, Label label) {
  double best = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (labels[j] == label && row[j] > best) best = row[j];
  }
  return best;
}

double min_eq_scalar(const double* row, const Label* labels, std::size_t n, Label label) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < n; ++j) {
    if (labels[j] == label && row[j] < best) best = row[j];
  }
  return best;
}

constexpr KernelTable kScalar{sum_eq_scalar, sum_ne_scalar, max_eq_scalar, min_eq_scalar};

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

}  // namespace clusterlab::kernels
