#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "psc/sequence.hpp"

namespace psc {

// C_{f,g}(s) for s in [s_min, s_max]; zero outside. For lengths l_f, l_g the
// support is s_min = -(l_g - 1), s_max = l_f - 1.
struct CorrelationSpectrum {
  std::ptrdiff_t s_min = 0;
  std::ptrdiff_t s_max = 0;
  std::vector<cplx> values;

  cplx at(std::ptrdiff_t s) const noexcept {
    return s < s_min || s > s_max ? cplx{} : values[static_cast<std::size_t>(s - s_min)];
  }
  std::size_t size() const noexcept { return values.size(); }
};

// Exact spectrum for a pair of binary sequences.
struct IntegerSpectrum {
  std::ptrdiff_t s_min = 0;
  std::ptrdiff_t s_max = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(std::ptrdiff_t s) const noexcept {
    return s < s_min || s > s_max ? 0 : values[static_cast<std::size_t>(s - s_min)];
  }
};

// C_{f,g}(s) = sum_j f_{j+s} conj(g_j). Exact when both inputs are binary.
cplx crosscorrelation_at(const Sequence& f, const Sequence& g, std::ptrdiff_t s);

// Defining double sum, O(l_f * l_g). Binary pairs take the integer path and
// the result holds exact integers.
CorrelationSpectrum spectrum_naive(const Sequence& f, const Sequence& g);

// Coefficients of f(z) * conj(g)(z^-1) by FFT convolution, O(n log n).
// Agrees with spectrum_naive to ~1e-8 * sqrt(energy(f) * energy(g)).
CorrelationSpectrum spectrum_fast(const Sequence& f, const Sequence& g);

// Both inputs must be binary (DomainError otherwise).
IntegerSpectrum spectrum_exact(const Sequence& f, const Sequence& g);

CorrelationSpectrum autocorrelation_spectrum(const Sequence& f, bool fast = false);

// C_{f,f}(s) for s = 0..l-1 only (the negative side is the conjugate).
std::vector<cplx> autocorrelation_half(const Sequence& f, bool fast = false);
// Binary only: exact C_{f,f}(s), s = 0..l-1.
std::vector<std::int64_t> autocorrelation_half_exact(const Sequence& f);

// sum_s C_{f,f}(s) conj(C_{g,g}(s)), over all s or over s != 0.
cplx autocorrelation_inner_product(const Sequence& f, const Sequence& g, bool include_zero_shift,
                                   bool fast = false);

// Both sides of the energy identity sum_s |C_{f,g}(s)|^2 = sum_s C_ff(s) conj(C_gg(s)).
struct EnergyIdentity {
  double cross_energy = 0.0;  // left side
  cplx autocorrelation_product;  // right side
  double residual() const noexcept { return std::abs(cplx(cross_energy) - autocorrelation_product); }
};

EnergyIdentity energy_identity(const Sequence& f, const Sequence& g, bool fast = false);

// |LHS - RHS| of the energy identity; exactly 0 for binary pairs.
double energy_identity_residual(const Sequence& f, const Sequence& g, bool fast = false);

// One `s<TAB>re<TAB>im` line per shift, ascending.
void write_spectrum(std::ostream& out, const CorrelationSpectrum& spectrum);

}  // namespace psc
