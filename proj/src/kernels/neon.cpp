#include <arm_neon.h>

#include <limits>

#include "clusterlab/kernels.hpp"

namespace clusterlab::kernels {
namespace {

inline uint64x2_t lane_mask(const Label* labels, Label label, bool invert) {
  const bool a = (labels[0] == label) != invert;
  const bool b = (labels[1] == label) != invert;
  const uint64_t bits[2] = {a ? ~0ULL : 0ULL, b ? ~0ULL : 0ULL};
  return vld1q_u64(bits);
}

template <bool Invert>
double masked_sum(const double* row, const Label* labels, std::size_t n, Label label) {
  float64x2_t sum = vdupq_n_f64(0.0);
  float64x2_t comp = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t x = vreinterpretq_f64_u64(
        vandq_u64(vreinterpretq_u64_f64(vld1q_f64(row + j)), lane_mask(labels + j, label, Invert)));
    const float64x2_t t = vaddq_f64(sum, x);
    const float64x2_t bp = vsubq_f64(t, sum);
    const float64x2_t err = vaddq_f64(vsubq_f64(sum, vsubq_f64(t, bp)), vsubq_f64(x, bp));
    comp = vaddq_f64(comp, err);
    sum = t;
  }
  CompensatedSum acc;
  acc.add(vgetq_lane_f64(sum, 0));
  acc.add(vgetq_lane_f64(sum, 1));
  acc.add(vgetq_lane_f64(comp, 0));
  acc.add(vgetq_lane_f64(comp, 1));
  for (; j < n; ++j) {
    if ((labels[j] == label) != Invert) acc.add(row[j]);
  }
  return acc.value();
}

double sum_eq_neon(const double* row, const Label* labels, std::size_t n, Label label) {
  return masked_sum<false>(row, labels, n, label);
}

double sum_ne_neon(const double* row, const Label* labels, std::size_t n, Label label) {
  return masked_sum<true>(row, labels, n, label);
}

double max_eq_neon(const double* row, const Label* labels, std::size_t n, Label label) {
  const float64x2_t zero = vdupq_n_f64(0.0);
  float64x2_t best = zero;
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t x = vbslq_f64(lane_mask(labels + j, label, false), vld1q_f64(row + j), zero);
    best = vmaxq_f64(best, x);
  }
  double out = vmaxvq_f64(best);
  for (; j < n; ++j) {
    if (labels[j] == label && row[j] > out) out = row[j];
  }
  return out;
}

double min_eq_neon(const double* row, const Label* labels, std::size_t n, Label label) {
  const float64x2_t inf = vdupq_n_f64(std::numeric_limits<double>::infinity());
  float64x2_t best = inf;
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t x = vbslq_f64(lane_mask(labels + j, label, false), vld1q_f64(row + j), inf);
    best = vminq_f64(best, x);
  }
  double out = vminvq_f64(best);
  for (; j < n; ++j) {
    if (labels[j] == label && row[j] < out) out = row[j];
  }
  return out;
}

}  // namespace

extern const KernelTable kNeonTable{sum_eq_neon, sum_ne_neon, max_eq_neon, min_eq_neon};

}  // namespace clusterlab::kernels
