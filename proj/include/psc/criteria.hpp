#pragma once

#include <optional>
#include <string_view>

#include "psc/sequence.hpp"

namespace psc {

inline constexpr double kDefaultTolerance = 1e-9;

// How spectra are computed for non-binary inputs. Binary pairs always use
// exact integer sums.
enum class SpectrumMethod { Auto, Naive, Fast };

// ADF(f) = sum_{s!=0} |C_ff(s)|^2 / C_ff(0)^2.
double adf(const Sequence& f, SpectrumMethod method = SpectrumMethod::Auto);

// CDF(f,g) = sum_s |C_fg(s)|^2 / (C_ff(0) C_gg(0)).
double cdf(const Sequence& f, const Sequence& g, SpectrumMethod method = SpectrumMethod::Auto);

// Pursley-Sarwate criterion sqrt(ADF(f) ADF(g)) + CDF(f,g); never below 1.
double psc(const Sequence& f, const Sequence& g, SpectrumMethod method = SpectrumMethod::Auto);

struct DemeritReport {
  double adf_f = 0.0;
  double adf_g = 0.0;
  double cdf = 0.0;
  double psc = 0.0;
  double lower_slack = 0.0;  // (cdf - 1) + sqrt(adf_f adf_g)
  double upper_slack = 0.0;  // sqrt(adf_f adf_g) - (cdf - 1)
};

DemeritReport demerit_report(const Sequence& f, const Sequence& g, SpectrumMethod method = SpectrumMethod::Auto);

// Builds the report from the three demerit factors.
DemeritReport make_report(double adf_f, double adf_g, double cdf) noexcept;

// Returns lambda > 0 with C_ff(s) + lambda^2 C_gg(s) = 0 for every s != 0,
// checked to tol * energy(f). Throws DomainError if either input is a
// monomial or zero.
std::optional<double> find_golay_scaling(const Sequence& f, const Sequence& g, double tol = kDefaultTolerance);

struct EqualityCase {
  enum class Kind { Monomial, LowerBoundGolay, UpperBound, Interior };
  Kind kind = Kind::Interior;
  std::optional<double> lambda;  // LowerBoundGolay only
  std::optional<double> mu;      // UpperBound only
  // max_{s!=0} |C_ff(s) - mu C_gg(s)| / energy(f) for the anchor-fitted mu
  // (mu = -lambda^2 in the Golay case); 0 for monomials.
  double residual = 0.0;
  // The fit residual lies within 10x of the tolerance on either side.
  bool near_boundary = false;
};

std::string_view to_string(EqualityCase::Kind kind) noexcept;

// Monomial if either side is a monomial; otherwise LowerBoundGolay when a
// positive lambda makes (f, lambda g) complementary, UpperBound when a
// positive mu gives C_ff = mu C_gg off zero, else Interior.
EqualityCase classify_equality(const Sequence& f, const Sequence& g, double tol = kDefaultTolerance);

}  // namespace psc
