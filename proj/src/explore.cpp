#include "psc/explore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "psc/correlation.hpp"
#include "psc/error.hpp"

namespace psc {

namespace {

constexpr double kBoundSlack = 1e-9;

void check_exhaustive_length(int length) {
  if (length < 1 || length > kMaxExhaustiveLength) {
    throw DomainError("exhaustive search supports lengths 1.." + std::to_string(kMaxExhaustiveLength) + ", got " +
                      std::to_string(length));
  }
}

// Runs body(begin, end) over [0, count) split into contiguous blocks.
template <typename Body>
void parallel_blocks(std::size_t count, int workers, Body body) {
  const std::size_t n = static_cast<std::size_t>(std::clamp(workers, 1, 256));
  if (n == 1 || count < 2) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> threads;
  const std::size_t block = (count + n - 1) / n;
  for (std::size_t begin = 0; begin < count; begin += block) {
    threads.emplace_back(body, begin, std::min(count, begin + block));
  }
}

std::vector<std::int8_t> index_signs(std::uint32_t index, int length) {
  std::vector<std::int8_t> s(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) s[j] = (index >> j) & 1u ? -1 : 1;
  return s;
}

struct Moments {
  double mean = 0.0;
  double se = 0.0;
};

Moments moments(const std::vector<double>& v) {
  Moments m;
  const double n = static_cast<double>(v.size());
  for (double x : v) m.mean += x;
  m.mean /= n;
  if (v.size() < 2) return m;
  double ss = 0.0;
  for (double x : v) ss += (x - m.mean) * (x - m.mean);
  m.se = std::sqrt(ss / (n - 1.0) / n);
  return m;
}

}  // namespace

Sequence binary_from_index(std::uint32_t index, int length) { return Sequence::binary(index_signs(index, length)); }

SearchResult exhaustive_min_psc(int length, double tol, int workers) {
  check_exhaustive_length(length);
  const auto start = std::chrono::steady_clock::now();

  const std::uint32_t count = 1u << length;
  std::vector<Sequence> seqs;
  seqs.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) seqs.push_back(binary_from_index(i, length));

  std::vector<double> values(std::size_t{count} * count);
  std::vector<char> golay(values.size());
  parallel_blocks(count, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < count; ++j) {
        values[i * count + j] = demerit_report(seqs[i], seqs[j]).psc;
        golay[i * count + j] = is_golay_pair(seqs[i], seqs[j]).verdict;
      }
    }
  });

  SearchResult r;
  r.length = length;
  r.mode = SearchResult::Mode::Exhaustive;
  r.evaluated = values.size();
  r.min_psc = *std::min_element(values.begin(), values.end());
  const bool monomials = length == 1;
  for (std::uint32_t i = 0; i < count; ++i) {
    for (std::uint32_t j = 0; j < count; ++j) {
      const double v = values[std::size_t{i} * count + j];
      if (v <= r.min_psc + tol) r.argmin_pairs.emplace_back(i, j);
      if (golay[std::size_t{i} * count + j]) r.golay_pairs.emplace_back(i, j);
      if (!monomials && v <= 1.0 + tol) r.unit_psc_pairs.emplace_back(i, j);
    }
  }
  r.argmin_count = r.argmin_pairs.size();
  r.golay_count = r.golay_pairs.size();
  r.classification_consistent = monomials ? r.unit_psc_pairs.empty() : r.unit_psc_pairs == r.golay_pairs;
  r.bound_holds = r.min_psc >= 1.0 - kBoundSlack;
  r.best_f = index_signs(r.argmin_pairs.front().first, length);
  r.best_g = index_signs(r.argmin_pairs.front().second, length);
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

std::size_t enumerate_golay_pairs(int length) {
  check_exhaustive_length(length);
  const std::uint32_t count = 1u << length;
  std::size_t total = 0;
  for (std::uint32_t i = 0; i < count; ++i) {
    const Sequence f = binary_from_index(i, length);
    for (std::uint32_t j = 0; j < count; ++j) total += is_golay_pair(f, binary_from_index(j, length)).verdict;
  }
  return total;
}

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample) noexcept {
  return SplitMix64(SplitMix64(seed).next() ^ SplitMix64(sample).next());
}

std::vector<std::int8_t> random_signs(SplitMix64& rng, std::size_t length) {
  std::vector<std::int8_t> out(length);
  std::uint64_t bits = 0;
  for (std::size_t j = 0; j < length; ++j) {
    if (j % 64 == 0) bits = rng.next();
    out[j] = bits & 1u ? -1 : 1;
    bits >>= 1;
  }
  return out;
}

McStats monte_carlo(int length, std::size_t samples, std::uint64_t seed, int workers) {
  if (length < 1) throw DomainError("monte carlo length must be positive");
  if (samples < 1) throw DomainError("monte carlo needs at least one sample");

  std::vector<double> adf_v(samples), cdf_v(samples), psc_v(samples);
  parallel_blocks(samples, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      SplitMix64 rng = sample_stream(seed, i);
      const Sequence f = Sequence::binary(random_signs(rng, static_cast<std::size_t>(length)));
      const Sequence g = Sequence::binary(random_signs(rng, static_cast<std::size_t>(length)));
      const DemeritReport r = demerit_report(f, g);
      adf_v[i] = r.adf_f;
      cdf_v[i] = r.cdf;
      psc_v[i] = r.psc;
    }
  });

  McStats st;
  st.length = length;
  st.samples = samples;
  st.seed = seed;
  const Moments a = moments(adf_v), c = moments(cdf_v), p = moments(psc_v);
  st.mean_adf = a.mean;
  st.se_adf = a.se;
  st.mean_cdf = c.mean;
  st.se_cdf = c.se;
  st.mean_psc = p.mean;
  st.se_psc = p.se;
  return st;
}

IncrementalPsc::IncrementalPsc(std::vector<std::int8_t> f, std::vector<std::int8_t> g)
    : f_(std::move(f)), g_(std::move(g)) {
  if (f_.empty() || f_.size() != g_.size()) throw DomainError("incremental PSC needs two sequences of equal length");
  const Sequence sf = Sequence::binary(f_);
  const Sequence sg = Sequence::binary(g_);
  auto_f_ = autocorrelation_half_exact(sf);
  auto_g_ = autocorrelation_half_exact(sg);
  cross_ = spectrum_exact(sf, sg).values;
  for (std::size_t s = 1; s < auto_f_.size(); ++s) {
    side_f_ += auto_f_[s] * auto_f_[s];
    side_g_ += auto_g_[s] * auto_g_[s];
  }
  for (std::int64_t v : cross_) cross_energy_ += v * v;
}

double IncrementalPsc::psc_from(std::int64_t side_f, std::int64_t side_g, std::int64_t cross) const noexcept {
  const double e = static_cast<double>(f_.size());
  return make_report(2.0 * double(side_f) / (e * e), 2.0 * double(side_g) / (e * e), double(cross) / (e * e)).psc;
}

double IncrementalPsc::psc() const noexcept { return psc_from(side_f_, side_g_, cross_energy_); }

namespace {

// Change in sum_{s>=1} C(s)^2 when x_k flips sign, with C the autocorrelation.
template <typename Apply>
std::int64_t auto_flip(const std::vector<std::int8_t>& x, const std::vector<std::int64_t>& c, std::size_t k,
                       Apply apply) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
  const std::ptrdiff_t kk = static_cast<std::ptrdiff_t>(k);
  std::int64_t delta_energy = 0;
  for (std::ptrdiff_t s = 1; s < n; ++s) {
    std::int64_t neighbours = 0;
    if (kk + s < n) neighbours += x[kk + s];
    if (kk - s >= 0) neighbours += x[kk - s];
    if (neighbours == 0) continue;
    const std::int64_t d = -2 * x[k] * neighbours;
    delta_energy += 2 * c[s] * d + d * d;
    apply(s, d);
  }
  return delta_energy;
}

}  // namespace

// With C_fg(s) = sum_j f_{j+s} g_j, flipping f_k touches j = k - s and
// flipping g_k touches j = k.
double IncrementalPsc::psc_after_flip(std::size_t k) const {
  const std::size_t n = f_.size();
  const std::ptrdiff_t ln = static_cast<std::ptrdiff_t>(n);
  std::int64_t side_f = side_f_, side_g = side_g_, cross = cross_energy_;
  auto none = [](std::ptrdiff_t, std::int64_t) {};
  if (k < n) {
    side_f += auto_flip(f_, auto_f_, k, none);
    const std::ptrdiff_t kk = static_cast<std::ptrdiff_t>(k);
    for (std::ptrdiff_t s = kk - ln + 1; s <= kk; ++s) {
      const std::int64_t c = cross_[static_cast<std::size_t>(s + ln - 1)];
      const std::int64_t d = -2 * f_[k] * g_[static_cast<std::size_t>(kk - s)];
      cross += 2 * c * d + d * d;
    }
  } else {
    const std::size_t j = k - n;
    side_g += auto_flip(g_, auto_g_, j, none);
    const std::ptrdiff_t jj = static_cast<std::ptrdiff_t>(j);
    for (std::ptrdiff_t s = -jj; s < ln - jj; ++s) {
      const std::int64_t c = cross_[static_cast<std::size_t>(s + ln - 1)];
      const std::int64_t d = -2 * f_[static_cast<std::size_t>(jj + s)] * g_[j];
      cross += 2 * c * d + d * d;
    }
  }
  return psc_from(side_f, side_g, cross);
}

void IncrementalPsc::flip(std::size_t k) {
  const std::size_t n = f_.size();
  const std::ptrdiff_t ln = static_cast<std::ptrdiff_t>(n);
  if (k < n) {
    side_f_ += auto_flip(f_, auto_f_, k, [this](std::ptrdiff_t s, std::int64_t d) { auto_f_[s] += d; });
    const std::ptrdiff_t kk = static_cast<std::ptrdiff_t>(k);
    for (std::ptrdiff_t s = kk - ln + 1; s <= kk; ++s) {
      std::int64_t& c = cross_[static_cast<std::size_t>(s + ln - 1)];
      const std::int64_t d = -2 * f_[k] * g_[static_cast<std::size_t>(kk - s)];
      cross_energy_ += 2 * c * d + d * d;
      c += d;
    }
    f_[k] = static_cast<std::int8_t>(-f_[k]);
  } else if (k < 2 * n) {
    const std::size_t j = k - n;
    side_g_ += auto_flip(g_, auto_g_, j, [this](std::ptrdiff_t s, std::int64_t d) { auto_g_[s] += d; });
    const std::ptrdiff_t jj = static_cast<std::ptrdiff_t>(j);
    for (std::ptrdiff_t s = -jj; s < ln - jj; ++s) {
      std::int64_t& c = cross_[static_cast<std::size_t>(s + ln - 1)];
      const std::int64_t d = -2 * f_[static_cast<std::size_t>(jj + s)] * g_[j];
      cross_energy_ += 2 * c * d + d * d;
      c += d;
    }
    g_[j] = static_cast<std::int8_t>(-g_[j]);
  } else {
    throw std::out_of_range("flip coordinate out of range");
  }
}

SearchResult local_search_min_psc(int length, int iterations, int restarts, std::uint64_t seed) {
  if (length < 2) throw DomainError("local search needs length >= 2");
  if (iterations < 0 || restarts < 1) throw DomainError("local search needs restarts >= 1 and iterations >= 0");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = static_cast<std::size_t>(length);

  SearchResult r;
  r.length = length;
  r.mode = SearchResult::Mode::Local;
  r.min_psc = std::numeric_limits<double>::infinity();
  std::vector<double> finals;

  for (int restart = 0; restart < restarts; ++restart) {
    SplitMix64 rng = sample_stream(seed, static_cast<std::uint64_t>(restart));
    auto f = random_signs(rng, n);
    auto g = random_signs(rng, n);
    IncrementalPsc state(std::move(f), std::move(g));
    double current = state.psc();
    ++r.evaluated;

    for (int it = 0; it < iterations; ++it) {
      std::size_t best_k = 2 * n;
      double best = current;
      for (std::size_t k = 0; k < 2 * n; ++k) {
        const double v = state.psc_after_flip(k);
        ++r.evaluated;
        if (v < best - 1e-12) {
          best = v;
          best_k = k;
        }
      }
      if (best_k == 2 * n) break;
      state.flip(best_k);
      current = best;
    }

    finals.push_back(current);
    if (is_golay_pair(Sequence::binary(state.f()), Sequence::binary(state.g())).verdict) ++r.golay_count;
    if (current < r.min_psc) {
      r.min_psc = current;
      r.best_f = state.f();
      r.best_g = state.g();
    }
  }
  r.argmin_count = static_cast<std::size_t>(
      std::count_if(finals.begin(), finals.end(), [&](double v) { return v <= r.min_psc + kDefaultTolerance; }));
  r.bound_holds = r.min_psc >= 1.0 - kBoundSlack;
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

}  // namespace psc
