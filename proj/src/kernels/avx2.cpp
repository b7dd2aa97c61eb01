#include <immintrin.h>

#include <limits>

#include "clusterlab/kernels.hpp"

namespace clusterlab::kernels {
namespace {

inline __m256d lane_mask(const Label* labels, __m128i target, bool invert) {
  __m128i m = _mm_cmpeq_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(labels)), target);
  if (invert) m = _mm_xor_si128(m, _mm_set1_epi32(-1));
  return _mm256_castsi256_pd(_mm256_cvtepi32_epi64(m));
}

template <bool Invert>
double masked_sum(const double* row, const Label* labels, std::size_t n, Label label) {
  const __m128i target = _mm_set1_epi32(label);
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x = _mm256_and_pd(_mm256_loadu_pd(row + j), lane_mask(labels + j, target, Invert));
    // TwoSum per lane.
    const __m256d t = _mm256_add_pd(sum, x);
    const __m256d bp = _mm256_sub_pd(t, sum);
    const __m256d err = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(t, bp)), _mm256_sub_pd(x, bp));
    comp = _mm256_add_pd(comp, err);
    sum = t;
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);
  CompensatedSum acc;
  for (double v : s) acc.add(v);
  for (double v : c) acc.add(v);
  for (; j < n; ++j) {
    if ((labels[j] == label) != Invert) acc.add(row[j]);
  }
  return acc.value();
}

double sum_eq_avx2(const double* row, const Label* labels, std::size_t n, Label label) {
  return masked_sum<false>(row, labels, n, label);
}

double sum_ne_avx2(const double* row, const Label* labels, std::size_t n, Label label) {
  return masked_sum<true>(row, labels, n, label);
}

double max_eq_avx2(const double* row, const Label* labels, std::size_t n, Label label) {
  const __m128i target = _mm_set1_epi32(label);
  const __m256d zero = _mm256_setzero_pd();
  __m256d best = zero;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x = _mm256_blendv_pd(zero, _mm256_loadu_pd(row + j), lane_mask(labels + j, target, false));
    best = _mm256_max_pd(best, x);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = 0.0;
  for (double v : lanes) out = v > out ? v : out;
  for (; j < n; ++j) {
    if (labels[j] == label && row[j] > out) out = row[j];
  }
  return out;
}

double min_eq_avx2(const double* row, const Label* labels, std::size_t n, Label label) {
  const __m128i target = _mm_set1_epi32(label);
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d best = inf;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d x = _mm256_blendv_pd(inf, _mm256_loadu_pd(row + j), lane_mask(labels + j, target, false));
    best = _mm256_min_pd(best, x);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::numeric_limits<double>::infinity();
  for (double v : lanes) out = v < out ? v : out;
  for (; j < n; ++j) {
    if (labels[j] == label && row[j] < out) out = row[j];
  }
  return out;
}

}  // namespace

extern const KernelTable kAvx2Table{sum_eq_avx2, sum_ne_avx2, max_eq_avx2, min_eq_avx2};

}  // namespace clusterlab::kernels
