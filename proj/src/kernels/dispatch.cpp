#include <atomic>
#include <cstdlib>
#include <string>

#include "clusterlab/core.hpp"
#include "clusterlab/kernels.hpp"

namespace clusterlab::kernels {

#if defined(CLUSTERLAB_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif
#if defined(CLUSTERLAB_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

const KernelTable* simd_table(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &scalar_table();
    case Isa::avx2:
#if defined(CLUSTERLAB_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return &kAvx2Table;
#endif
      return nullptr;
    case Isa::neon:
#if defined(CLUSTERLAB_HAVE_NEON)
      return &kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

namespace {

Isa detect() {
  if (const char* env = std::getenv("CLUSTERLAB_ISA")) {
    const std::string_view want(env);
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (want == to_string(isa) && simd_table(isa) != nullptr) return isa;
    }
  }
  if (simd_table(Isa::avx2) != nullptr) return Isa::avx2;
  if (simd_table(Isa::neon) != nullptr) return Isa::neon;
  return Isa::scalar;
}

struct Selection {
  std::atomic<Isa> isa{detect()};
  std::atomic<const KernelTable*> table{simd_table(isa.load())};
};

Selection& selection() {
  static Selection s;
  return s;
}

}  // namespace

Isa active_isa() { return selection().isa.load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  const KernelTable* table = simd_table(isa);
  if (table == nullptr) throw InvalidInput("kernel ISA '" + std::string(to_string(isa)) + "' is not available");
  selection().isa.store(isa, std::memory_order_relaxed);
  selection().table.store(table, std::memory_order_relaxed);
}

const KernelTable& active() { return *selection().table.load(std::memory_order_relaxed); }

}  // namespace clusterlab::kernels
