#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psc {

using cplx = std::complex<double>;

// A finite complex sequence f_0..f_{l-1}, read as the polynomial sum f_j z^j.
// Terms outside 0..l-1 are zero. Sequences whose terms are exactly +-1 also
// keep an int8 copy so correlation sums over them are computed exactly.
class Sequence {
 public:
  // Throws DomainError if `coefficients` is empty.
  explicit Sequence(std::vector<cplx> coefficients);

  // Throws DomainError if empty or any value is not +-1.
  static Sequence binary(std::vector<std::int8_t> signs);

  std::size_t length() const noexcept { return coefficients_.size(); }
  std::span<const cplx> coefficients() const noexcept { return coefficients_; }
  const cplx& operator[](std::size_t j) const noexcept { return coefficients_[j]; }

  // Zero outside the support.
  cplx at(std::ptrdiff_t j) const noexcept {
    return j < 0 || static_cast<std::size_t>(j) >= coefficients_.size() ? cplx{} : coefficients_[j];
  }

  bool is_binary() const noexcept { return signs_.has_value(); }
  // Empty unless is_binary().
  std::span<const std::int8_t> signs() const noexcept {
    return signs_ ? std::span<const std::int8_t>(*signs_) : std::span<const std::int8_t>();
  }

  bool is_zero() const noexcept;

  Sequence scaled(cplx factor) const;
  Sequence negated() const;
  Sequence reversed() const;

  friend bool operator==(const Sequence& a, const Sequence& b) { return a.coefficients_ == b.coefficients_; }

 private:
  std::vector<cplx> coefficients_;
  std::optional<std::vector<std::int8_t>> signs_;
};

// Throws DomainError when `f` is all zero; used by every analysis entry point.
void require_nonzero(const Sequence& f, std::string_view what = "sequence");

struct SequenceClass {
  enum class Tag { Binary, MAry, Unimodular, General };
  Tag tag = Tag::General;
  int order = 0;  // m for MAry, 2 for Binary, 0 otherwise
  double tolerance = 0.0;

  friend bool operator==(const SequenceClass&, const SequenceClass&) = default;
};

// Largest root-of-unity order tried by classify().
inline constexpr int kMaxRootOrder = 1024;

// Most specific class: Binary, then MAry with the smallest m, then
// Unimodular, else General. Root-of-unity comparisons use
// max(tol, 16 ulp) because the roots themselves are not exact in double.
SequenceClass classify(const Sequence& f, double tol);

std::string to_string(const SequenceClass& c);

// C_{f,f}(0) = sum |f_j|^2.
double energy(const Sequence& f) noexcept;

// f / sqrt(energy(f)); throws DomainError on the zero sequence.
Sequence normalize(const Sequence& f);

// Exactly one stored coefficient is nonzero (exact comparison).
bool is_monomial(const Sequence& f) noexcept;

// Parses `bin:+-+...` or `cplx:a+bi,...`. An all-zero sequence parses but
// appends a warning to `warnings` if given.
Sequence parse_sequence(std::string_view text, std::vector<std::string>* warnings = nullptr);

// Inverse of parse_sequence for the `bin:` form; `cplx:` otherwise, with
// 17 significant digits so values round-trip.
std::string format_sequence(const Sequence& f);

// Non-empty, non-comment (`%`) lines of a sequence file, trimmed.
std::vector<std::string> sequence_lines(std::string_view file_contents);

}  // namespace psc
