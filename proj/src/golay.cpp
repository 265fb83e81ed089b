#include "psc/golay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "psc/correlation.hpp"
#include "psc/error.hpp"

namespace psc {

namespace {

// Length-10 and length-26 pairs from Golay's original tables.
constexpr std::array<std::int8_t, 10> kSeed10F{1, 1, -1, 1, -1, 1, -1, -1, 1, 1};
constexpr std::array<std::int8_t, 10> kSeed10G{1, 1, -1, 1, 1, 1, 1, 1, -1, -1};
constexpr std::array<std::int8_t, 26> kSeed26F{1, 1,  1, 1, -1, 1,  1,  -1, -1, 1, -1, 1,  -1,
                                               1, -1, -1, 1, -1, 1, 1, 1,  -1, -1, 1, 1, 1};
constexpr std::array<std::int8_t, 26> kSeed26G{1, 1, 1, 1,  -1, 1,  1, -1, -1, 1,  -1, 1, 1,
                                               1, 1, 1, -1, 1,  -1, -1, -1, 1, 1, -1, -1, -1};

template <std::size_t N>
Sequence from_array(const std::array<std::int8_t, N>& a) {
  return Sequence::binary(std::vector<std::int8_t>(a.begin(), a.end()));
}

std::vector<std::int8_t> signs_of(const Sequence& f) { return {f.signs().begin(), f.signs().end()}; }

SequencePair double_unchecked(const SequencePair& pair) {
  if (pair.f.is_binary() && pair.g.is_binary()) {
    auto a = signs_of(pair.f);
    auto b = signs_of(pair.g);
    std::vector<std::int8_t> f(a), g(a);
    f.insert(f.end(), b.begin(), b.end());
    for (std::int8_t v : b) g.push_back(static_cast<std::int8_t>(-v));
    return {Sequence::binary(std::move(f)), Sequence::binary(std::move(g))};
  }
  const auto a = pair.f.coefficients();
  const auto b = pair.g.coefficients();
  std::vector<cplx> f(a.begin(), a.end()), g(a.begin(), a.end());
  f.insert(f.end(), b.begin(), b.end());
  for (const cplx& v : b) g.push_back(-v);
  return {Sequence(std::move(f)), Sequence(std::move(g))};
}

// Writes a = p + q, b = p - q where p, q are the half-sum and half-difference
// (disjoint supports, entries in {-1,0,1}); with c, d the inner pair and
// rev() the reversal,
//   F(z) = p(z) c(z^m) + q(z) rev(d)(z^m)
//   G(z) = p(z) d(z^m) - q(z) rev(c)(z^m).
SequencePair turyn_unchecked(const SequencePair& outer, const SequencePair& inner) {
  const auto a = outer.f.signs();
  const auto b = outer.g.signs();
  const auto c = inner.f.signs();
  const auto d = inner.g.signs();
  const std::size_t m = a.size();
  const std::size_t n = c.size();

  std::vector<std::int8_t> f(m * n), g(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    const int p = (a[i] + b[i]) / 2;
    const int q = (a[i] - b[i]) / 2;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t at = i + m * k;
      if (p != 0) {
        f[at] = static_cast<std::int8_t>(p * c[k]);
        g[at] = static_cast<std::int8_t>(p * d[k]);
      } else {
        f[at] = static_cast<std::int8_t>(q * d[n - 1 - k]);
        g[at] = static_cast<std::int8_t>(-q * c[n - 1 - k]);
      }
    }
  }
  return {Sequence::binary(std::move(f)), Sequence::binary(std::move(g))};
}

}  // namespace

GolayCertificate is_golay_pair(const Sequence& f, const Sequence& g, double tol) {
  require_nonzero(f, "first sequence");
  require_nonzero(g, "second sequence");
  GolayCertificate cert;
  cert.length_f = f.length();
  cert.length_g = g.length();
  const std::size_t reach = std::max(f.length(), g.length());

  if (f.is_binary() && g.is_binary()) {
    auto cf = autocorrelation_half_exact(f);
    auto cg = autocorrelation_half_exact(g);
    cf.resize(reach, 0);
    cg.resize(reach, 0);
    std::int64_t worst = 0;
    for (std::size_t s = 1; s < reach; ++s) worst = std::max<std::int64_t>(worst, std::llabs(cf[s] + cg[s]));
    cert.max_residual = static_cast<double>(worst);
    cert.verdict = worst == 0;
    return cert;
  }

  auto cf = autocorrelation_half(f);
  auto cg = autocorrelation_half(g);
  cf.resize(reach);
  cg.resize(reach);
  for (std::size_t s = 1; s < reach; ++s) cert.max_residual = std::max(cert.max_residual, std::abs(cf[s] + cg[s]));
  cert.threshold = tol * std::sqrt(energy(f) * energy(g));
  cert.verdict = cert.max_residual <= cert.threshold;
  return cert;
}

SequencePair double_pair(const SequencePair& pair, double tol) {
  if (pair.f.length() != pair.g.length()) throw DomainError("doubling requires sequences of equal length");
  if (!is_golay_pair(pair.f, pair.g, tol).verdict) throw DomainError("doubling requires a Golay pair");
  return double_unchecked(pair);
}

SequencePair turyn_product(const SequencePair& outer, const SequencePair& inner) {
  for (const SequencePair* p : {&outer, &inner}) {
    if (!p->f.is_binary() || !p->g.is_binary()) throw DomainError("product construction requires binary pairs");
    if (p->f.length() != p->g.length()) throw DomainError("product construction requires equal lengths");
    if (!is_golay_pair(p->f, p->g).verdict) throw DomainError("product construction requires Golay pairs");
  }
  return turyn_unchecked(outer, inner);
}

SequencePair seed_pair(int base) {
  switch (base) {
    case 1: return {Sequence::binary({1}), Sequence::binary({1})};
    case 2: return {Sequence::binary({1, 1}), Sequence::binary({1, -1})};
    case 10: return {from_array(kSeed10F), from_array(kSeed10G)};
    case 26: return {from_array(kSeed26F), from_array(kSeed26G)};
    default: throw DomainError("no seed pair for base " + std::to_string(base) + " (expected 1, 2, 10 or 26)");
  }
}

LengthFactors factor_admissible_length(std::int64_t length) {
  if (length < 1) throw InadmissibleLength(length);
  std::int64_t rest = length;
  auto strip = [&rest](std::int64_t p) {
    int k = 0;
    while (rest % p == 0) {
      rest /= p;
      ++k;
    }
    return k;
  };
  const int twos = strip(2);
  const int fives = strip(5);
  const int thirteens = strip(13);
  LengthFactors out{twos - fives - thirteens, fives, thirteens};
  if (rest != 1 || out.twos < 0) throw InadmissibleLength(length);
  return out;
}

bool is_admissible_length(std::int64_t length) noexcept {
  try {
    factor_admissible_length(length);
    return true;
  } catch (const InadmissibleLength&) {
    return false;
  }
}

SequencePair construct_for_length(std::int64_t length) {
  const LengthFactors k = factor_admissible_length(length);
  SequencePair pair = seed_pair(1);
  for (int i = 0; i < k.twos; ++i) pair = double_unchecked(pair);
  const SequencePair ten = seed_pair(10);
  for (int i = 0; i < k.tens; ++i) pair = turyn_unchecked(pair, ten);
  const SequencePair twenty_six = seed_pair(26);
  for (int i = 0; i < k.twenty_sixes; ++i) pair = turyn_unchecked(pair, twenty_six);
  return pair;
}

}  // namespace psc
