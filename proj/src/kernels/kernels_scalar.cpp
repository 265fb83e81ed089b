#include "kernels_internal.hpp"

namespace psc::kernels::detail {

cplx dot_conj_scalar(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double ar = a[j].real(), ai = a[j].imag();
    const double br = b[j].real(), bi = b[j].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

std::int64_t dot_i8_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n) {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < n; ++j) acc += static_cast<std::int64_t>(a[j]) * b[j];
  return acc;
}

}  // namespace psc::kernels::detail
