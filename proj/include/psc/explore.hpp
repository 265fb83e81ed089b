#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "psc/criteria.hpp"
#include "psc/golay.hpp"
#include "psc/sequence.hpp"

namespace psc {

inline constexpr int kMaxExhaustiveLength = 6;

// Binary sequence of length `length` encoded by the bits of `index`: bit j set
// means f_j = -1.
Sequence binary_from_index(std::uint32_t index, int length);

// Ordered pair (f index, g index).
using PairIndex = std::pair<std::uint32_t, std::uint32_t>;

struct SearchResult {
  enum class Mode { Exhaustive, Local };

  int length = 0;
  Mode mode = Mode::Exhaustive;
  double min_psc = 0.0;
  std::size_t argmin_count = 0;   // pairs within tol of min_psc (exhaustive)
  std::size_t golay_count = 0;    // ordered pairs passing the verifier
  std::size_t evaluated = 0;      // pair evaluations performed
  std::chrono::nanoseconds elapsed{0};

  // Exhaustive mode: sorted pair sets used by the equality cross-check.
  std::vector<PairIndex> argmin_pairs;
  std::vector<PairIndex> golay_pairs;
  std::vector<PairIndex> unit_psc_pairs;  // non-monomial pairs with PSC <= 1 + tol
  bool classification_consistent = true;  // unit_psc_pairs == non-monomial golay_pairs
  bool bound_holds = true;                // min_psc >= 1 - 1e-9

  // Local mode: the best pair found. Exhaustive mode: the first argmin pair.
  std::vector<std::int8_t> best_f;
  std::vector<std::int8_t> best_g;
};

// Evaluates every ordered binary pair of the given length (1..6). Work is
// split over `workers` threads by outer index; results do not depend on the
// split. Throws DomainError when length is out of range.
SearchResult exhaustive_min_psc(int length, double tol = kDefaultTolerance, int workers = 1);

// Number of ordered binary pairs of the given length (1..6) that are Golay.
std::size_t enumerate_golay_pairs(int length);

struct McStats {
  int length = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double mean_adf = 0.0, se_adf = 0.0;
  double mean_cdf = 0.0, se_cdf = 0.0;
  double mean_psc = 0.0, se_psc = 0.0;
};

// SplitMix64 (Steele, Lea, Flood 2014). Sample i draws its bits from the
// stream whose state starts at mix(seed) ^ mix(i), so every sample is
// reproducible on its own and worker count cannot change results.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}
  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample) noexcept;

// Uniform binary sequence drawn from `rng`.
std::vector<std::int8_t> random_signs(SplitMix64& rng, std::size_t length);

// Means and standard errors of ADF(f), CDF(f,g), PSC(f,g) over `samples`
// uniform binary pairs. Bitwise identical for any `workers`.
McStats monte_carlo(int length, std::size_t samples, std::uint64_t seed, int workers = 1);

// Restarted steepest-descent over single sign flips of the 2l coordinates.
// `iterations` bounds the accepted moves per restart. Deterministic in seed.
SearchResult local_search_min_psc(int length, int iterations, int restarts, std::uint64_t seed);

// Exact PSC pieces for a binary pair, kept up to date under single flips.
// The integer sums let a flip be scored in O(l) instead of O(l^2).
class IncrementalPsc {
 public:
  IncrementalPsc(std::vector<std::int8_t> f, std::vector<std::int8_t> g);

  double psc() const noexcept;
  // PSC after flipping coordinate k (0..l-1 in f, l..2l-1 in g), unchanged state.
  double psc_after_flip(std::size_t k) const;
  void flip(std::size_t k);

  const std::vector<std::int8_t>& f() const noexcept { return f_; }
  const std::vector<std::int8_t>& g() const noexcept { return g_; }

 private:
  double psc_from(std::int64_t side_f, std::int64_t side_g, std::int64_t cross) const noexcept;

  std::vector<std::int8_t> f_, g_;
  std::vector<std::int64_t> auto_f_, auto_g_;  // C(s), s = 0..l-1
  std::vector<std::int64_t> cross_;            // C_fg(s), s = -(l-1)..l-1
  std::int64_t side_f_ = 0, side_g_ = 0;       // sum_{s>=1} C(s)^2
  std::int64_t cross_energy_ = 0;              // sum_s C_fg(s)^2
};

}  // namespace psc
