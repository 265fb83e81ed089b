#pragma once

#include "psc/kernels.hpp"

namespace psc::kernels::detail {

cplx dot_conj_scalar(const cplx* a, const cplx* b, std::size_t n);
std::int64_t dot_i8_scalar(const std::int8_t* a, const std::int8_t* b, std::size_t n);

#if defined(PSC_HAVE_AVX2_KERNELS)
cplx dot_conj_avx2(const cplx* a, const cplx* b, std::size_t n);
std::int64_t dot_i8_avx2(const std::int8_t* a, const std::int8_t* b, std::size_t n);
#endif

}  // namespace psc::kernels::detail
