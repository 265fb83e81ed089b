#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "psc/criteria.hpp"
#include "psc/explore.hpp"
#include "psc/golay.hpp"

namespace psc::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Rounds to 12 significant digits, the precision of all machine output.
double round_sig12(double v);

struct AnalysisReport {
  DemeritReport demerits;
  EqualityCase equality;
  std::optional<GolayCertificate> golay;
};

// Human mode: an aligned two-column table. Machine mode: one JSON object on a
// single line with fields adf_f, adf_g, cdf, psc, lower_slack, upper_slack,
// case, lambda, mu, residual (lambda/mu null unless they apply), plus
// golay_verdict/golay_residual when a certificate is present.
std::string format_report(const AnalysisReport& report, bool machine);

std::string format_search(const SearchResult& result, bool machine);
std::string format_montecarlo(const McStats& stats, bool machine);

struct BenchRow {
  std::size_t length = 0;
  double naive_seconds = 0.0;  // median
  double fast_seconds = 0.0;   // median
  double max_deviation = 0.0;
  double tolerance = 0.0;      // 1e-8 * sqrt(energy(f) * energy(g))
  bool within_tolerance = false;
  double speedup() const noexcept { return fast_seconds > 0.0 ? naive_seconds / fast_seconds : 0.0; }
};

// Times spectrum_naive against spectrum_fast on random complex pairs of equal
// length and records the largest elementwise deviation.
std::vector<BenchRow> bench(std::span<const std::size_t> lengths, int repetitions, std::uint64_t seed = 1);

std::string format_bench(std::span<const BenchRow> rows, bool machine);

// Random complex sequence with real and imaginary parts uniform in [-1, 1).
Sequence random_complex(SplitMix64& rng, std::size_t length);

// Entry point for the `psc` tool. Results go to `out`, diagnostics to `err`.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace psc::cli
