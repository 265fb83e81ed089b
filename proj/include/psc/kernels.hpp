#pragma once

// Inner-loop kernels for correlation sums. Every kernel has a portable scalar
// reference; ISA-specific variants must agree with it (exactly for integer
// kernels, to rounding for floating-point ones). The active table is chosen
// once at startup from CPUID and can be overridden for testing.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace psc::kernels {

using cplx = std::complex<double>;

// sum_j a[j] * conj(b[j]) over n terms.
using DotConjFn = cplx (*)(const cplx* a, const cplx* b, std::size_t n);
// sum_j a[j] * b[j] over n terms of +-1 (or any int8) values.
using DotI8Fn = std::int64_t (*)(const std::int8_t* a, const std::int8_t* b, std::size_t n);

struct KernelTable {
  std::string_view name;
  DotConjFn dot_conj;
  DotI8Fn dot_i8;
};

enum class Isa { Scalar, Avx2 };

const KernelTable& scalar_table() noexcept;

// nullptr when the variant was not compiled in or the CPU lacks the features.
const KernelTable* avx2_table() noexcept;

// The table used by the library. Defaults to the best supported ISA.
const KernelTable& active() noexcept;

// Forces a specific ISA; returns false (and changes nothing) if unsupported.
bool select(Isa isa) noexcept;

// Restores CPUID-based selection.
void reset_selection() noexcept;

inline cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
  return active().dot_conj(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

inline std::int64_t dot_i8(std::span<const std::int8_t> a, std::span<const std::int8_t> b) {
  return active().dot_i8(a.data(), b.data(), a.size() < b.size() ? a.size() : b.size());
}

}  // namespace psc::kernels
