#include <algorithm>
#include <chrono>
#include <cmath>

#include "psc/cli.hpp"
#include "psc/correlation.hpp"

namespace psc::cli {

namespace {

template <typename Fn>
double median_seconds(int reps, Fn&& fn) {
  std::vector<double> times;
  for (int i = 0; i < std::max(reps, 1); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

}  // namespace

Sequence random_complex(SplitMix64& rng, std::size_t length) {
  auto uniform = [&rng] { return static_cast<double>(rng.next() >> 11) * 0x1.0p-52 - 1.0; };
  std::vector<cplx> c(length);
  for (cplx& v : c) {
    const double re = uniform();
    v = cplx(re, uniform());
  }
  return Sequence(std::move(c));
}

std::vector<BenchRow> bench(std::span<const std::size_t> lengths, int repetitions, std::uint64_t seed) {
  std::vector<BenchRow> rows;
  for (std::size_t length : lengths) {
    SplitMix64 rng = sample_stream(seed, length);
    const Sequence f = random_complex(rng, length);
    const Sequence g = random_complex(rng, length);

    CorrelationSpectrum naive, fast;
    BenchRow row;
    row.length = length;
    row.naive_seconds = median_seconds(repetitions, [&] { naive = spectrum_naive(f, g); });
    row.fast_seconds = median_seconds(repetitions, [&] { fast = spectrum_fast(f, g); });
    for (std::size_t k = 0; k < naive.values.size(); ++k) {
      row.max_deviation = std::max(row.max_deviation, std::abs(naive.values[k] - fast.values[k]));
    }
    row.tolerance = 1e-8 * std::sqrt(energy(f) * energy(g));
    row.within_tolerance = row.max_deviation <= row.tolerance;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace psc::cli
