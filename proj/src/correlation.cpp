#include "psc/correlation.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstdio>
#include <memory>
#include <mutex>
#include <ostream>

#include "psc/error.hpp"
#include "psc/kernels.hpp"

namespace psc {

namespace {

struct ShiftRange {
  std::ptrdiff_t lo = 0;  // first j
  std::size_t count = 0;  // number of overlapping terms
};

// Terms j with 0 <= j < l_g and 0 <= j + s < l_f.
ShiftRange overlap(std::size_t len_f, std::size_t len_g, std::ptrdiff_t s) {
  const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, -s);
  const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(len_g) - 1,
                                                     static_cast<std::ptrdiff_t>(len_f) - 1 - s);
  if (hi < lo) return {lo, 0};
  return {lo, static_cast<std::size_t>(hi - lo + 1)};
}

std::int64_t exact_at(const Sequence& f, const Sequence& g, std::ptrdiff_t s) {
  const ShiftRange r = overlap(f.length(), g.length(), s);
  if (r.count == 0) return 0;
  return kernels::active().dot_i8(f.signs().data() + r.lo + s, g.signs().data() + r.lo, r.count);
}

cplx float_at(const Sequence& f, const Sequence& g, std::ptrdiff_t s) {
  const ShiftRange r = overlap(f.length(), g.length(), s);
  if (r.count == 0) return {};
  return kernels::active().dot_conj(f.coefficients().data() + r.lo + s, g.coefficients().data() + r.lo, r.count);
}

bool both_binary(const Sequence& f, const Sequence& g) { return f.is_binary() && g.is_binary(); }

// FFTW sizes with only small prime factors transform fastest.
std::size_t transform_size(std::size_t n) {
  for (std::size_t m = n;; ++m) {
    std::size_t r = m;
    for (std::size_t p : {2, 3, 5, 7}) {
      while (r % p == 0) r /= p;
    }
    if (r == 1) return m;
  }
}

// Planner calls are not thread-safe in FFTW; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

FftwBuffer make_buffer(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (p == nullptr) throw std::bad_alloc();
  std::fill_n(reinterpret_cast<double*>(p), 2 * n, 0.0);
  return FftwBuffer(p);
}

class Plan {
 public:
  Plan(int n, fftw_complex* in, fftw_complex* out, int sign) {
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(n, in, out, sign, FFTW_ESTIMATE);
  }
  ~Plan() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  void execute(fftw_complex* in, fftw_complex* out) const { fftw_execute_dft(plan_, in, out); }

 private:
  fftw_plan plan_;
};

CorrelationSpectrum empty_spectrum(const Sequence& f, const Sequence& g) {
  CorrelationSpectrum out;
  out.s_min = -static_cast<std::ptrdiff_t>(g.length() - 1);
  out.s_max = static_cast<std::ptrdiff_t>(f.length() - 1);
  out.values.assign(f.length() + g.length() - 1, cplx{});
  return out;
}

}  // namespace

cplx crosscorrelation_at(const Sequence& f, const Sequence& g, std::ptrdiff_t s) {
  require_nonzero(f);
  require_nonzero(g);
  if (both_binary(f, g)) return static_cast<double>(exact_at(f, g, s));
  return float_at(f, g, s);
}

IntegerSpectrum spectrum_exact(const Sequence& f, const Sequence& g) {
  if (!both_binary(f, g)) throw DomainError("exact spectrum requires two binary sequences");
  IntegerSpectrum out;
  out.s_min = -static_cast<std::ptrdiff_t>(g.length() - 1);
  out.s_max = static_cast<std::ptrdiff_t>(f.length() - 1);
  out.values.reserve(f.length() + g.length() - 1);
  for (std::ptrdiff_t s = out.s_min; s <= out.s_max; ++s) out.values.push_back(exact_at(f, g, s));
  return out;
}

CorrelationSpectrum spectrum_naive(const Sequence& f, const Sequence& g) {
  require_nonzero(f);
  require_nonzero(g);
  CorrelationSpectrum out = empty_spectrum(f, g);
  const bool exact = both_binary(f, g);
  for (std::ptrdiff_t s = out.s_min; s <= out.s_max; ++s) {
    out.values[static_cast<std::size_t>(s - out.s_min)] =
        exact ? cplx(static_cast<double>(exact_at(f, g, s))) : float_at(f, g, s);
  }
  return out;
}

// h = f * rev(conj(g)); then C_{f,g}(s) = h[s + l_g - 1].
CorrelationSpectrum spectrum_fast(const Sequence& f, const Sequence& g) {
  require_nonzero(f);
  require_nonzero(g);
  CorrelationSpectrum out = empty_spectrum(f, g);
  const std::size_t n = transform_size(out.values.size());

  FftwBuffer a = make_buffer(n);
  FftwBuffer b = make_buffer(n);
  for (std::size_t j = 0; j < f.length(); ++j) {
    a[j][0] = f[j].real();
    a[j][1] = f[j].imag();
  }
  const std::size_t lg = g.length();
  for (std::size_t j = 0; j < lg; ++j) {
    const cplx v = std::conj(g[lg - 1 - j]);
    b[j][0] = v.real();
    b[j][1] = v.imag();
  }

  const Plan forward(static_cast<int>(n), a.get(), a.get(), FFTW_FORWARD);
  const Plan backward(static_cast<int>(n), a.get(), a.get(), FFTW_BACKWARD);
  forward.execute(a.get(), a.get());
  forward.execute(b.get(), b.get());
  for (std::size_t k = 0; k < n; ++k) {
    const cplx p = cplx(a[k][0], a[k][1]) * cplx(b[k][0], b[k][1]);
    a[k][0] = p.real();
    a[k][1] = p.imag();
  }
  backward.execute(a.get(), a.get());

  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = cplx(a[k][0], a[k][1]) * scale;
  return out;
}

CorrelationSpectrum autocorrelation_spectrum(const Sequence& f, bool fast) {
  return fast && !f.is_binary() ? spectrum_fast(f, f) : spectrum_naive(f, f);
}

std::vector<std::int64_t> autocorrelation_half_exact(const Sequence& f) {
  if (!f.is_binary()) throw DomainError("exact autocorrelation requires a binary sequence");
  std::vector<std::int64_t> out(f.length());
  for (std::size_t s = 0; s < f.length(); ++s) out[s] = exact_at(f, f, static_cast<std::ptrdiff_t>(s));
  return out;
}

std::vector<cplx> autocorrelation_half(const Sequence& f, bool fast) {
  require_nonzero(f);
  std::vector<cplx> out(f.length());
  if (f.is_binary()) {
    const auto exact = autocorrelation_half_exact(f);
    std::transform(exact.begin(), exact.end(), out.begin(), [](std::int64_t v) { return cplx(double(v)); });
  } else if (fast) {
    const CorrelationSpectrum full = spectrum_fast(f, f);
    for (std::size_t s = 0; s < f.length(); ++s) out[s] = full.at(static_cast<std::ptrdiff_t>(s));
  } else {
    for (std::size_t s = 0; s < f.length(); ++s) out[s] = float_at(f, f, static_cast<std::ptrdiff_t>(s));
  }
  return out;
}

cplx autocorrelation_inner_product(const Sequence& f, const Sequence& g, bool include_zero_shift, bool fast) {
  const CorrelationSpectrum cf = autocorrelation_spectrum(f, fast);
  const CorrelationSpectrum cg = autocorrelation_spectrum(g, fast);
  const std::ptrdiff_t reach = std::min(cf.s_max, cg.s_max);
  cplx sum{};
  for (std::ptrdiff_t s = -reach; s <= reach; ++s) {
    if (s == 0 && !include_zero_shift) continue;
    sum += cf.at(s) * std::conj(cg.at(s));
  }
  return sum;
}

EnergyIdentity energy_identity(const Sequence& f, const Sequence& g, bool fast) {
  require_nonzero(f);
  require_nonzero(g);
  EnergyIdentity out;
  if (both_binary(f, g)) {
    const IntegerSpectrum cross = spectrum_exact(f, g);
    std::int64_t lhs = 0;
    for (std::int64_t v : cross.values) lhs += v * v;
    const auto af = autocorrelation_half_exact(f);
    const auto ag = autocorrelation_half_exact(g);
    std::int64_t rhs = af[0] * ag[0];
    for (std::size_t s = 1; s < std::min(af.size(), ag.size()); ++s) rhs += 2 * af[s] * ag[s];
    out.cross_energy = static_cast<double>(lhs);
    out.autocorrelation_product = static_cast<double>(rhs);
    return out;
  }
  const CorrelationSpectrum cross = fast ? spectrum_fast(f, g) : spectrum_naive(f, g);
  for (const cplx& v : cross.values) out.cross_energy += std::norm(v);
  out.autocorrelation_product = autocorrelation_inner_product(f, g, true, fast);
  return out;
}

double energy_identity_residual(const Sequence& f, const Sequence& g, bool fast) {
  return energy_identity(f, g, fast).residual();
}

void write_spectrum(std::ostream& out, const CorrelationSpectrum& spectrum) {
  char buf[96];
  for (std::ptrdiff_t s = spectrum.s_min; s <= spectrum.s_max; ++s) {
    const cplx v = spectrum.at(s);
    std::snprintf(buf, sizeof buf, "%td\t%.17g\t%.17g\n", s, v.real(), v.imag());
    out << buf;
  }
}

}  // namespace psc
