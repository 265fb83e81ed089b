#include <atomic>

#include "kernels_internal.hpp"

namespace psc::kernels {

namespace {

constexpr KernelTable kScalar{"scalar", &detail::dot_conj_scalar, &detail::dot_i8_scalar};

#if defined(PSC_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{"avx2", &detail::dot_conj_avx2, &detail::dot_i8_avx2};

bool cpu_has_avx2() noexcept {
  static const bool has = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return has;
}
#endif

const KernelTable* best_supported() noexcept {
#if defined(PSC_HAVE_AVX2_KERNELS)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return &kScalar;
}

std::atomic<const KernelTable*>& current() noexcept {
  static std::atomic<const KernelTable*> table{best_supported()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() noexcept { return kScalar; }

const KernelTable* avx2_table() noexcept {
#if defined(PSC_HAVE_AVX2_KERNELS)
  if (cpu_has_avx2()) return &kAvx2;
#endif
  return nullptr;
}

const KernelTable& active() noexcept { return *current().load(std::memory_order_acquire); }

bool select(Isa isa) noexcept {
  const KernelTable* t = isa == Isa::Scalar ? &kScalar : avx2_table();
  if (t == nullptr) return false;
  current().store(t, std::memory_order_release);
  return true;
}

void reset_selection() noexcept { current().store(best_supported(), std::memory_order_release); }

}  // namespace psc::kernels
