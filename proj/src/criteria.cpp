#include "psc/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "psc/correlation.hpp"
#include "psc/error.hpp"

namespace psc {

namespace {

// Above this many naive multiply-adds Auto switches to the FFT path.
constexpr double kAutoFastThreshold = double(1 << 20);

bool use_fast(SpectrumMethod method, std::size_t lf, std::size_t lg) {
  switch (method) {
    case SpectrumMethod::Fast: return true;
    case SpectrumMethod::Naive: return false;
    case SpectrumMethod::Auto: return double(lf) * double(lg) > kAutoFastThreshold;
  }
  return false;
}

// sum_{s != 0} |C_ff(s)|^2, exact for binary input.
double sidelobe_energy(const Sequence& f, SpectrumMethod method) {
  if (f.is_binary()) {
    const auto half = autocorrelation_half_exact(f);
    std::int64_t sum = 0;
    for (std::size_t s = 1; s < half.size(); ++s) sum += half[s] * half[s];
    return 2.0 * static_cast<double>(sum);
  }
  const auto half = autocorrelation_half(f, use_fast(method, f.length(), f.length()));
  double sum = 0.0;
  for (std::size_t s = 1; s < half.size(); ++s) sum += std::norm(half[s]);
  return 2.0 * sum;
}

double cross_energy(const Sequence& f, const Sequence& g, SpectrumMethod method) {
  if (f.is_binary() && g.is_binary()) {
    const IntegerSpectrum spec = spectrum_exact(f, g);
    std::int64_t sum = 0;
    for (std::int64_t v : spec.values) sum += v * v;
    return static_cast<double>(sum);
  }
  const CorrelationSpectrum spec =
      use_fast(method, f.length(), g.length()) ? spectrum_fast(f, g) : spectrum_naive(f, g);
  double sum = 0.0;
  for (const cplx& v : spec.values) sum += std::norm(v);
  return sum;
}

struct RatioFit {
  double mu = 0.0;
  double residual = 0.0;  // normalized by energy(f)
  bool holds = false;
};

// Fits C_ff(s) = mu C_gg(s) for s != 0, anchored at the shift where |C_gg|
// is largest, then checks every other shift (including ones where either
// side vanishes).
RatioFit fit_autocorrelation_ratio(const Sequence& f, const Sequence& g, double tol) {
  const std::size_t reach = std::max(f.length(), g.length());
  const double ef = energy(f);
  RatioFit fit;

  if (f.is_binary() && g.is_binary()) {
    auto cf = autocorrelation_half_exact(f);
    auto cg = autocorrelation_half_exact(g);
    cf.resize(reach, 0);
    cg.resize(reach, 0);
    std::size_t anchor = 1;
    for (std::size_t s = 1; s < reach; ++s) {
      if (std::llabs(cg[s]) > std::llabs(cg[anchor])) anchor = s;
    }
    fit.mu = double(cf[anchor]) / double(cg[anchor]);
    fit.holds = true;
    for (std::size_t s = 1; s < reach; ++s) {
      if (cf[s] * cg[anchor] != cf[anchor] * cg[s]) fit.holds = false;
      fit.residual = std::max(fit.residual, std::abs(double(cf[s]) - fit.mu * double(cg[s])) / ef);
    }
    if (fit.holds) fit.residual = 0.0;
    return fit;
  }

  auto cf = autocorrelation_half(f);
  auto cg = autocorrelation_half(g);
  cf.resize(reach);
  cg.resize(reach);
  std::size_t anchor = 1;
  for (std::size_t s = 1; s < reach; ++s) {
    if (std::abs(cg[s]) > std::abs(cg[anchor])) anchor = s;
  }
  fit.mu = (cf[anchor] / cg[anchor]).real();
  for (std::size_t s = 1; s < reach; ++s) {
    fit.residual = std::max(fit.residual, std::abs(cf[s] - fit.mu * cg[s]) / ef);
  }
  fit.holds = fit.residual <= tol;
  return fit;
}

bool near_tolerance(double residual, double tol) {
  return residual > 0.0 && residual >= tol / 10.0 && residual <= tol * 10.0;
}

}  // namespace

double adf(const Sequence& f, SpectrumMethod method) {
  require_nonzero(f);
  const double e = energy(f);
  return sidelobe_energy(f, method) / (e * e);
}

double cdf(const Sequence& f, const Sequence& g, SpectrumMethod method) {
  require_nonzero(f);
  require_nonzero(g);
  return cross_energy(f, g, method) / (energy(f) * energy(g));
}

double psc(const Sequence& f, const Sequence& g, SpectrumMethod method) {
  return demerit_report(f, g, method).psc;
}

DemeritReport make_report(double adf_f, double adf_g, double cdf_fg) noexcept {
  DemeritReport r;
  r.adf_f = adf_f;
  r.adf_g = adf_g;
  r.cdf = cdf_fg;
  const double geo = std::sqrt(adf_f * adf_g);
  r.psc = geo + cdf_fg;
  r.lower_slack = (cdf_fg - 1.0) + geo;
  r.upper_slack = geo - (cdf_fg - 1.0);
  return r;
}

DemeritReport demerit_report(const Sequence& f, const Sequence& g, SpectrumMethod method) {
  return make_report(adf(f, method), adf(g, method), cdf(f, g, method));
}

std::optional<double> find_golay_scaling(const Sequence& f, const Sequence& g, double tol) {
  require_nonzero(f);
  require_nonzero(g);
  if (is_monomial(f) || is_monomial(g)) throw DomainError("golay scaling is undefined for a monomial");
  const RatioFit fit = fit_autocorrelation_ratio(f, g, tol);
  if (!fit.holds || !(fit.mu < 0.0)) return std::nullopt;
  return std::sqrt(-fit.mu);
}

std::string_view to_string(EqualityCase::Kind kind) noexcept {
  switch (kind) {
    case EqualityCase::Kind::Monomial: return "monomial";
    case EqualityCase::Kind::LowerBoundGolay: return "lower_bound_golay";
    case EqualityCase::Kind::UpperBound: return "upper_bound";
    case EqualityCase::Kind::Interior: return "interior";
  }
  return "interior";
}

EqualityCase classify_equality(const Sequence& f, const Sequence& g, double tol) {
  require_nonzero(f);
  require_nonzero(g);
  EqualityCase out;
  if (is_monomial(f) || is_monomial(g)) {
    out.kind = EqualityCase::Kind::Monomial;
    return out;
  }
  const RatioFit fit = fit_autocorrelation_ratio(f, g, tol);
  out.residual = fit.residual;
  out.near_boundary = near_tolerance(fit.residual, tol);
  if (fit.holds && fit.mu < 0.0) {
    out.kind = EqualityCase::Kind::LowerBoundGolay;
    out.lambda = std::sqrt(-fit.mu);
  } else if (fit.holds && fit.mu > 0.0) {
    out.kind = EqualityCase::Kind::UpperBound;
    out.mu = fit.mu;
  } else {
    out.kind = EqualityCase::Kind::Interior;
  }
  return out;
}

}  // namespace psc
