#pragma once

// Test-only reference computations. These follow the defining formulas term
// by term and share no code with the library's correlation paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "psc/explore.hpp"
#include "psc/sequence.hpp"

namespace psc::oracle {

using cplx = std::complex<double>;

inline std::vector<cplx> coeffs(const Sequence& f) { return {f.coefficients().begin(), f.coefficients().end()}; }

// C_{f,g}(s) = sum_{j in Z} f_{j+s} conj(g_j), iterating j over the whole
// window where either index could be in range.
inline cplx correlation(const std::vector<cplx>& f, const std::vector<cplx>& g, long s) {
  const long lf = static_cast<long>(f.size()), lg = static_cast<long>(g.size());
  cplx sum{};
  for (long j = -lf - lg; j <= lf + lg; ++j) {
    const long i = j + s;
    const cplx fv = (i >= 0 && i < lf) ? f[i] : cplx{};
    const cplx gv = (j >= 0 && j < lg) ? g[j] : cplx{};
    sum += fv * std::conj(gv);
  }
  return sum;
}

inline std::map<long, cplx> spectrum(const Sequence& f, const Sequence& g) {
  const auto a = coeffs(f), b = coeffs(g);
  std::map<long, cplx> out;
  for (long s = -static_cast<long>(b.size()) + 1; s < static_cast<long>(a.size()); ++s) out[s] = correlation(a, b, s);
  return out;
}

inline double energy(const Sequence& f) {
  double e = 0;
  for (const cplx& v : f.coefficients()) e += std::norm(v);
  return e;
}

inline double adf(const Sequence& f) {
  const auto a = coeffs(f);
  const double e = oracle::energy(f);
  double num = 0;
  for (long s = -static_cast<long>(a.size()) + 1; s < static_cast<long>(a.size()); ++s) {
    if (s != 0) num += std::norm(correlation(a, a, s));
  }
  return num / (e * e);
}

inline double cdf(const Sequence& f, const Sequence& g) {
  double num = 0;
  for (const auto& [s, v] : spectrum(f, g)) num += std::norm(v);
  return num / (oracle::energy(f) * oracle::energy(g));
}

inline double psc(const Sequence& f, const Sequence& g) {
  return std::sqrt(oracle::adf(f) * oracle::adf(g)) + oracle::cdf(f, g);
}

inline bool golay_exact(const std::vector<int>& a, const std::vector<int>& b) {
  const long n = static_cast<long>(std::max(a.size(), b.size()));
  for (long s = 1; s < n; ++s) {
    long sum = 0;
    for (long j = 0; j + s < static_cast<long>(a.size()); ++j) sum += a[j + s] * a[j];
    for (long j = 0; j + s < static_cast<long>(b.size()); ++j) sum += b[j + s] * b[j];
    if (sum != 0) return false;
  }
  return true;
}

inline std::vector<int> ints(const Sequence& f) {
  std::vector<int> out;
  for (const cplx& v : f.coefficients()) out.push_back(static_cast<int>(v.real()));
  return out;
}

// Random complex sequence with parts uniform in [-1, 1).
inline Sequence random_complex(SplitMix64& rng, std::size_t length) {
  auto u = [&rng] { return static_cast<double>(rng.next() >> 11) * 0x1.0p-52 - 1.0; };
  std::vector<cplx> c(length);
  for (cplx& v : c) {
    const double re = u();
    v = cplx(re, u());
  }
  return Sequence(std::move(c));
}

inline std::size_t uniform_int(SplitMix64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.next() % (hi - lo + 1));
}

inline double uniform_real(SplitMix64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng.next() >> 11) * 0x1.0p-53);
}

}  // namespace psc::oracle
