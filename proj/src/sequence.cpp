#include "psc/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "psc/error.hpp"

namespace psc {

namespace {

std::optional<std::vector<std::int8_t>> exact_signs(const std::vector<cplx>& c) {
  std::vector<std::int8_t> signs;
  signs.reserve(c.size());
  for (const cplx& v : c) {
    if (v.imag() != 0.0) return std::nullopt;
    if (v.real() == 1.0) {
      signs.push_back(1);
    } else if (v.real() == -1.0) {
      signs.push_back(-1);
    } else {
      return std::nullopt;
    }
  }
  return signs;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_real(std::string_view text, std::string_view token) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ParseError("malformed complex token '" + std::string(token) + "'");
  }
  return value;
}

// `a+bi`, `a-bi`, `a`, `bi`; a bare `i` / `-i` means +-1.
cplx parse_complex_token(std::string_view token) {
  if (token.empty()) throw ParseError("empty complex token");
  if (token.back() != 'i') return {parse_real(token, token), 0.0};

  const std::string_view body = token.substr(0, token.size() - 1);
  // Split at the last sign that is not leading and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t p = body.size(); p-- > 1;) {
    if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
      split = p;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? body : body.substr(split);

  double im;
  if (im_text.empty() || im_text == "+") {
    im = 1.0;
  } else if (im_text == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_text, token);
  }
  const double re = re_text.empty() ? 0.0 : parse_real(re_text, token);
  return {re, im};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Sequence::Sequence(std::vector<cplx> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) throw DomainError("empty sequence");
  signs_ = exact_signs(coefficients_);
}

Sequence Sequence::binary(std::vector<std::int8_t> signs) {
  std::vector<cplx> c;
  c.reserve(signs.size());
  for (std::int8_t s : signs) {
    if (s != 1 && s != -1) throw DomainError("binary sequence terms must be +1 or -1");
    c.emplace_back(static_cast<double>(s), 0.0);
  }
  return Sequence(std::move(c));
}

bool Sequence::is_zero() const noexcept {
  return std::all_of(coefficients_.begin(), coefficients_.end(), [](const cplx& v) { return v == cplx{}; });
}

Sequence Sequence::scaled(cplx factor) const {
  std::vector<cplx> c(coefficients_);
  for (cplx& v : c) v *= factor;
  return Sequence(std::move(c));
}

Sequence Sequence::negated() const {
  std::vector<cplx> c(coefficients_);
  for (cplx& v : c) v = -v;
  return Sequence(std::move(c));
}

Sequence Sequence::reversed() const {
  return Sequence(std::vector<cplx>(coefficients_.rbegin(), coefficients_.rend()));
}

void require_nonzero(const Sequence& f, std::string_view what) {
  if (f.is_zero()) throw DomainError(std::string(what) + " is the zero polynomial");
}

SequenceClass classify(const Sequence& f, double tol) {
  require_nonzero(f);
  const auto coeffs = f.coefficients();

  const double root_tol = std::max(tol, 16 * std::numeric_limits<double>::epsilon());
  if (f.is_binary() || std::all_of(coeffs.begin(), coeffs.end(), [&](const cplx& v) {
        return std::min(std::abs(v - 1.0), std::abs(v + 1.0)) <= root_tol;
      })) {
    return {SequenceClass::Tag::Binary, 2, tol};
  }

  const bool unimodular =
      std::all_of(coeffs.begin(), coeffs.end(), [&](const cplx& v) { return std::abs(std::abs(v) - 1.0) <= root_tol; });
  if (!unimodular) return {SequenceClass::Tag::General, 0, tol};

  for (int m = 3; m <= kMaxRootOrder; ++m) {
    const double step = 2.0 * std::numbers::pi / m;
    const bool all_roots = std::all_of(coeffs.begin(), coeffs.end(), [&](const cplx& v) {
      const double k = std::round(std::arg(v) / step);
      return std::abs(v - std::polar(1.0, k * step)) <= root_tol;
    });
    if (all_roots) return {SequenceClass::Tag::MAry, m, tol};
  }
  return {SequenceClass::Tag::Unimodular, 0, tol};
}

std::string to_string(const SequenceClass& c) {
  switch (c.tag) {
    case SequenceClass::Tag::Binary: return "binary";
    case SequenceClass::Tag::MAry: return std::to_string(c.order) + "-ary";
    case SequenceClass::Tag::Unimodular: return "unimodular";
    case SequenceClass::Tag::General: return "general";
  }
  return "general";
}

double energy(const Sequence& f) noexcept {
  if (f.is_binary()) return static_cast<double>(f.length());
  double e = 0.0;
  for (const cplx& v : f.coefficients()) e += std::norm(v);
  return e;
}

Sequence normalize(const Sequence& f) {
  require_nonzero(f);
  return f.scaled(1.0 / std::sqrt(energy(f)));
}

bool is_monomial(const Sequence& f) noexcept {
  const auto c = f.coefficients();
  return std::count_if(c.begin(), c.end(), [](const cplx& v) { return v != cplx{}; }) == 1;
}

Sequence parse_sequence(std::string_view text, std::vector<std::string>* warnings) {
  text = trim(text);
  std::vector<cplx> coeffs;

  if (text.starts_with("bin:")) {
    const std::string_view body = trim(text.substr(4));
    if (body.empty()) throw ParseError("empty sequence");
    std::vector<std::int8_t> signs;
    signs.reserve(body.size());
    for (char c : body) {
      if (c == '+') {
        signs.push_back(1);
      } else if (c == '-') {
        signs.push_back(-1);
      } else {
        throw ParseError(std::string("malformed binary token '") + c + "'");
      }
    }
    return Sequence::binary(std::move(signs));
  }

  if (!text.starts_with("cplx:")) throw ParseError("sequence must start with 'bin:' or 'cplx:'");
  std::string_view body = trim(text.substr(5));
  if (body.empty()) throw ParseError("empty sequence");
  while (true) {
    const auto comma = body.find(',');
    coeffs.push_back(parse_complex_token(trim(body.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }

  Sequence f(std::move(coeffs));
  if (warnings != nullptr && f.is_zero()) warnings->push_back("all-zero sequence; analysis will reject it");
  return f;
}

std::string format_sequence(const Sequence& f) {
  std::string out;
  if (f.is_binary()) {
    out = "bin:";
    for (std::int8_t s : f.signs()) out.push_back(s > 0 ? '+' : '-');
    return out;
  }
  out = "cplx:";
  for (std::size_t j = 0; j < f.length(); ++j) {
    if (j > 0) out.push_back(',');
    const cplx v = f[j];
    out += format_double(v.real());
    const bool neg = std::signbit(v.imag());
    out.push_back(neg ? '-' : '+');
    out += format_double(std::abs(v.imag()));
    out.push_back('i');
  }
  return out;
}

std::vector<std::string> sequence_lines(std::string_view contents) {
  std::vector<std::string> lines;
  while (!contents.empty()) {
    const auto nl = contents.find('\n');
    const std::string_view line = trim(contents.substr(0, nl));
    if (!line.empty() && line.front() != '%') lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    contents.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace psc
