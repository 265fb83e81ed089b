#pragma once

#include <cstddef>
#include <cstdint>

#include "psc/criteria.hpp"
#include "psc/sequence.hpp"

namespace psc {

struct SequencePair {
  Sequence f;
  Sequence g;
};

struct GolayCertificate {
  bool verdict = false;
  // max_{s != 0} |C_ff(s) + C_gg(s)| over both autocorrelation supports.
  double max_residual = 0.0;
  // Threshold the residual was compared against (0 on the exact path).
  double threshold = 0.0;
  std::size_t length_f = 0;
  std::size_t length_g = 0;
};

// Binary pairs are checked exactly. Otherwise the residual must not exceed
// tol * sqrt(energy(f) * energy(g)).
GolayCertificate is_golay_pair(const Sequence& f, const Sequence& g, double tol = kDefaultTolerance);

// (a, b) -> (a|b, a|-b). Throws DomainError unless the input is a Golay pair
// of equal lengths.
SequencePair double_pair(const SequencePair& pair, double tol = kDefaultTolerance);

// Product of binary Golay pairs of lengths m and n, giving length m*n.
// Throws DomainError on non-binary or non-Golay input.
SequencePair turyn_product(const SequencePair& outer, const SequencePair& inner);

// Embedded binary Golay pairs of length 1, 2, 10 and 26.
SequencePair seed_pair(int base);

struct LengthFactors {
  int twos = 0;   // a
  int tens = 0;   // b
  int twenty_sixes = 0;  // c
};

// Returns the (unique) exponents with length = 2^a 10^b 26^c; throws
// InadmissibleLength otherwise.
LengthFactors factor_admissible_length(std::int64_t length);

bool is_admissible_length(std::int64_t length) noexcept;

// Binary Golay pair of the given length: doublings first, then the length-10
// seeds, then the length-26 seeds, folded in left to right.
SequencePair construct_for_length(std::int64_t length);

}  // namespace psc
