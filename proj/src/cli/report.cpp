#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "psc/cli.hpp"

namespace psc::cli {

namespace {

using Json = nlohmann::ordered_json;

Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_sig12(v);
}

Json opt_num(const std::optional<double>& v) { return v ? num(*v) : Json(nullptr); }

std::string g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string case_label(const EqualityCase& c) {
  switch (c.kind) {
    case EqualityCase::Kind::Monomial: return "Monomial";
    case EqualityCase::Kind::LowerBoundGolay: return "LowerBoundGolay(λ=" + g12(*c.lambda) + ")";
    case EqualityCase::Kind::UpperBound: return "UpperBound(μ=" + g12(*c.mu) + ")";
    case EqualityCase::Kind::Interior: return "Interior";
  }
  return "Interior";
}

class Table {
 public:
  void row(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  std::string str() const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    std::string out;
    for (const auto& [k, v] : rows_) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

}  // namespace

double round_sig12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::stod(buf);
}

std::string format_report(const AnalysisReport& report, bool machine) {
  const DemeritReport& d = report.demerits;
  const EqualityCase& e = report.equality;
  if (machine) {
    Json j;
    j["verb"] = "analyze";
    j["adf_f"] = num(d.adf_f);
    j["adf_g"] = num(d.adf_g);
    j["cdf"] = num(d.cdf);
    j["psc"] = num(d.psc);
    j["lower_slack"] = num(d.lower_slack);
    j["upper_slack"] = num(d.upper_slack);
    j["case"] = std::string(to_string(e.kind));
    j["lambda"] = opt_num(e.lambda);
    j["mu"] = opt_num(e.mu);
    j["residual"] = num(e.residual);
    j["near_boundary"] = e.near_boundary;
    if (report.golay) {
      j["golay_verdict"] = report.golay->verdict;
      j["golay_residual"] = num(report.golay->max_residual);
    }
    return j.dump() + "\n";
  }
  Table t;
  t.row("ADF(f)", g12(d.adf_f));
  t.row("ADF(g)", g12(d.adf_g));
  t.row("CDF(f,g)", g12(d.cdf));
  t.row("PSC(f,g)", g12(d.psc));
  t.row("lower slack", g12(d.lower_slack));
  t.row("upper slack", g12(d.upper_slack));
  t.row("case", case_label(e) + (e.near_boundary ? "  [near tolerance boundary]" : ""));
  t.row("fit residual", g12(e.residual));
  if (report.golay) {
    t.row("golay", std::string(report.golay->verdict ? "yes" : "no") + " (max residual " +
                       g12(report.golay->max_residual) + ")");
  }
  return t.str();
}

std::string format_search(const SearchResult& r, bool machine) {
  const bool exhaustive = r.mode == SearchResult::Mode::Exhaustive;
  if (machine) {
    Json j;
    j["verb"] = "search";
    j["mode"] = exhaustive ? "exhaustive" : "local";
    j["length"] = r.length;
    j["min_psc"] = num(r.min_psc);
    j["argmin_count"] = r.argmin_count;
    j["golay_count"] = r.golay_count;
    j["evaluated"] = r.evaluated;
    j["bound_holds"] = r.bound_holds;
    j["classification_consistent"] = r.classification_consistent;
    j["best_f"] = format_sequence(Sequence::binary(r.best_f));
    j["best_g"] = format_sequence(Sequence::binary(r.best_g));
    return j.dump() + "\n";
  }
  Table t;
  t.row("mode", exhaustive ? "exhaustive" : "local");
  t.row("length", std::to_string(r.length));
  t.row("min PSC", g12(r.min_psc));
  t.row("argmin pairs", std::to_string(r.argmin_count));
  t.row(exhaustive ? "golay pairs" : "golay restarts", std::to_string(r.golay_count));
  t.row("evaluations", std::to_string(r.evaluated));
  t.row("bound holds", r.bound_holds ? "yes" : "NO");
  if (exhaustive) t.row("PSC=1 set == golay set", r.classification_consistent ? "yes" : "NO");
  t.row("best f", format_sequence(Sequence::binary(r.best_f)));
  t.row("best g", format_sequence(Sequence::binary(r.best_g)));
  t.row("elapsed", g12(std::chrono::duration<double>(r.elapsed).count()) + " s");
  return t.str();
}

std::string format_montecarlo(const McStats& s, bool machine) {
  const double expected_adf = 1.0 - 1.0 / s.length;
  if (machine) {
    Json j;
    j["verb"] = "montecarlo";
    j["length"] = s.length;
    j["samples"] = s.samples;
    j["seed"] = s.seed;
    j["mean_adf"] = num(s.mean_adf);
    j["se_adf"] = num(s.se_adf);
    j["mean_cdf"] = num(s.mean_cdf);
    j["se_cdf"] = num(s.se_cdf);
    j["mean_psc"] = num(s.mean_psc);
    j["se_psc"] = num(s.se_psc);
    j["expected_adf"] = num(expected_adf);
    j["expected_cdf"] = 1.0;
    return j.dump() + "\n";
  }
  Table t;
  t.row("length", std::to_string(s.length));
  t.row("samples", std::to_string(s.samples));
  t.row("seed", std::to_string(s.seed));
  t.row("mean ADF", g12(s.mean_adf) + " ± " + g12(s.se_adf) + "  (expected " + g12(expected_adf) + ")");
  t.row("mean CDF", g12(s.mean_cdf) + " ± " + g12(s.se_cdf) + "  (expected 1)");
  t.row("mean PSC", g12(s.mean_psc) + " ± " + g12(s.se_psc));
  return t.str();
}

std::string format_bench(std::span<const BenchRow> rows, bool machine) {
  std::ostringstream out;
  if (machine) {
    for (const BenchRow& r : rows) {
      Json j;
      j["verb"] = "bench";
      j["length"] = r.length;
      j["naive_seconds"] = num(r.naive_seconds);
      j["fast_seconds"] = num(r.fast_seconds);
      j["speedup"] = num(r.speedup());
      j["max_deviation"] = num(r.max_deviation);
      j["tolerance"] = num(r.tolerance);
      j["within_tolerance"] = r.within_tolerance;
      out << j.dump() << "\n";
    }
    return out.str();
  }
  char line[160];
  std::snprintf(line, sizeof line, "%8s  %12s  %12s  %9s  %12s  %12s  %s\n", "length", "naive [s]", "fast [s]",
                "speedup", "max dev", "tolerance", "ok");
  out << line;
  for (const BenchRow& r : rows) {
    std::snprintf(line, sizeof line, "%8zu  %12.6g  %12.6g  %9.3g  %12.4g  %12.4g  %s\n", r.length, r.naive_seconds,
                  r.fast_seconds, r.speedup(), r.max_deviation, r.tolerance, r.within_tolerance ? "yes" : "NO");
    out << line;
  }
  return out.str();
}

}  // namespace psc::cli
