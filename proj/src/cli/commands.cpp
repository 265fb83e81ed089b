#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "psc/cli.hpp"
#include "psc/correlation.hpp"
#include "psc/error.hpp"

namespace psc::cli {

namespace {

// Output produced by a command; written only once the command has succeeded.
struct Outcome {
  std::string stdout_text;
  std::vector<std::pair<std::string, std::string>> files;  // path, contents
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Sequence> read_sequences(const std::string& path, std::ostream& err) {
  std::vector<Sequence> out;
  for (const std::string& line : sequence_lines(read_file(path))) {
    std::vector<std::string> warnings;
    try {
      out.push_back(parse_sequence(line, &warnings));
    } catch (const std::exception& e) {
      throw ParseError(path + ": " + e.what());
    }
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << "\n";
  }
  if (out.empty()) throw ParseError(path + ": no sequence found");
  return out;
}

std::string residual_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string pair_lines(const Sequence& f, const Sequence& g) {
  return format_sequence(f) + "\n" + format_sequence(g) + "\n";
}

struct CommonOptions {
  double tol = kDefaultTolerance;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--tol", opts.tol, "Tolerance, scaled by the relevant energies")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_flag("--json", opts.json, "Machine-readable output (one JSON record per line)");
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Aperiodic correlation, Pursley-Sarwate criterion and Golay pair toolkit", "psc"};
  app.require_subcommand(1);

  CommonOptions common;
  std::uint64_t seed = 1;
  int workers = 1;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Demerit factors, PSC and equality case for a pair");
  std::string path_f, path_g, dump_spectrum;
  bool fast = false, naive = false;
  analyze->add_option("f", path_f, "File holding the first sequence")->required();
  analyze->add_option("g", path_g, "File holding the second sequence")->required();
  add_common(analyze, common);
  auto* fast_flag = analyze->add_flag("--fast", fast, "FFT spectra for non-binary input");
  auto* naive_flag = analyze->add_flag("--naive", naive, "Direct-sum spectra");
  fast_flag->excludes(naive_flag);
  analyze->add_option("--dump-spectrum", dump_spectrum, "Write C_{f,g}(s) as s<TAB>re<TAB>im lines");

  // verify-golay
  auto* verify = app.add_subcommand("verify-golay", "Check the complementary property of a pair");
  std::vector<std::string> verify_paths;
  verify->add_option("paths", verify_paths, "Two single-sequence files or one two-line file")
      ->required()
      ->expected(1, 2);
  add_common(verify, common);

  // construct
  auto* construct = app.add_subcommand("construct", "Binary Golay pair of length 2^a 10^b 26^c");
  std::int64_t length = 0;
  construct->add_option("--length,-l", length, "Target length")->required();
  add_common(construct, common);

  // search
  auto* search = app.add_subcommand("search", "Exhaustive or local search for the minimum PSC");
  int search_length = 0, iterations = 1000, restarts = 50;
  std::string mode = "exhaustive", dump_argmin;
  search->add_option("--length,-l", search_length, "Sequence length")->required();
  search->add_option("--mode", mode, "exhaustive or local")
      ->check(CLI::IsMember({"exhaustive", "local"}))
      ->capture_default_str();
  search->add_option("--iterations", iterations, "Local search: moves per restart")->capture_default_str();
  search->add_option("--restarts", restarts, "Local search: number of restarts")->capture_default_str();
  search->add_option("--seed", seed, "Random seed")->capture_default_str();
  search->add_option("--workers", workers, "Worker threads (exhaustive mode)")->check(CLI::PositiveNumber);
  search->add_option("--dump-argmin", dump_argmin, "Write argmin pairs in bin: format");
  add_common(search, common);

  // montecarlo
  auto* mc = app.add_subcommand("montecarlo", "Mean ADF, CDF and PSC of random binary pairs");
  int mc_length = 0;
  std::size_t samples = 10000;
  mc->add_option("--length,-l", mc_length, "Sequence length")->required()->check(CLI::PositiveNumber);
  mc->add_option("--samples,-n", samples, "Number of pairs")->check(CLI::PositiveNumber)->capture_default_str();
  mc->add_option("--seed", seed, "Random seed")->capture_default_str();
  mc->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  add_common(mc, common);

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time naive against FFT spectra");
  std::vector<std::size_t> lengths{256, 1024, 4096};
  int reps = 3;
  bench_cmd->add_option("--lengths", lengths, "Lengths to time")->delimiter(',')->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", reps, "Repetitions per length")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_common(bench_cmd, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  Outcome result;
  try {
    if (analyze->parsed()) {
      const Sequence f = read_sequences(path_f, err).front();
      const Sequence g = read_sequences(path_g, err).front();
      const SpectrumMethod method = fast ? SpectrumMethod::Fast : naive ? SpectrumMethod::Naive : SpectrumMethod::Auto;
      AnalysisReport report{demerit_report(f, g, method), classify_equality(f, g, common.tol),
                            is_golay_pair(f, g, common.tol)};
      result.stdout_text = format_report(report, common.json);
      if (!dump_spectrum.empty()) {
        std::ostringstream s;
        write_spectrum(s, fast ? spectrum_fast(f, g) : spectrum_naive(f, g));
        result.files.emplace_back(dump_spectrum, s.str());
      }
    } else if (verify->parsed()) {
      std::vector<Sequence> seqs;
      if (verify_paths.size() == 1) {
        seqs = read_sequences(verify_paths[0], err);
        if (seqs.size() < 2) throw ParseError(verify_paths[0] + ": expected two sequences");
      } else {
        seqs.push_back(read_sequences(verify_paths[0], err).front());
        seqs.push_back(read_sequences(verify_paths[1], err).front());
      }
      const GolayCertificate cert = is_golay_pair(seqs[0], seqs[1], common.tol);
      if (common.json) {
        nlohmann::ordered_json j;
        j["verb"] = "verify-golay";
        j["verdict"] = cert.verdict;
        j["max_residual"] = round_sig12(cert.max_residual);
        j["threshold"] = round_sig12(cert.threshold);
        j["length_f"] = cert.length_f;
        j["length_g"] = cert.length_g;
        result.stdout_text = j.dump() + "\n";
      } else {
        result.stdout_text = std::string(cert.verdict ? "golay pair" : "not a golay pair") + " (lengths " +
                             std::to_string(cert.length_f) + ", " + std::to_string(cert.length_g) +
                             "; max residual " + residual_text(cert.max_residual) + ")\n";
      }
    } else if (construct->parsed()) {
      const SequencePair pair = construct_for_length(length);
      const GolayCertificate cert = is_golay_pair(pair.f, pair.g);
      if (!cert.verdict) throw DomainError("internal: constructed pair failed certification");
      if (common.json) {
        nlohmann::ordered_json j;
        j["verb"] = "construct";
        j["length"] = length;
        j["f"] = format_sequence(pair.f);
        j["g"] = format_sequence(pair.g);
        j["golay_verdict"] = cert.verdict;
        j["golay_residual"] = round_sig12(cert.max_residual);
        result.stdout_text = j.dump() + "\n";
      } else {
        result.stdout_text = pair_lines(pair.f, pair.g);
      }
    } else if (search->parsed()) {
      const SearchResult r = mode == "exhaustive" ? exhaustive_min_psc(search_length, common.tol, workers)
                                                  : local_search_min_psc(search_length, iterations, restarts, seed);
      result.stdout_text = format_search(r, common.json);
      if (!dump_argmin.empty()) {
        std::string text = "% argmin pairs, length " + std::to_string(r.length) + "\n";
        if (r.mode == SearchResult::Mode::Exhaustive) {
          for (const auto& [i, j] : r.argmin_pairs) {
            text += pair_lines(binary_from_index(i, r.length), binary_from_index(j, r.length));
          }
        } else {
          text += pair_lines(Sequence::binary(r.best_f), Sequence::binary(r.best_g));
        }
        result.files.emplace_back(dump_argmin, text);
      }
    } else if (mc->parsed()) {
      result.stdout_text = format_montecarlo(monte_carlo(mc_length, samples, seed, workers), common.json);
    } else if (bench_cmd->parsed()) {
      result.stdout_text = format_bench(bench(lengths, reps, seed), common.json);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  for (const auto& [path, contents] : result.files) {
    std::ofstream file(path, std::ios::binary);
    if (!(file << contents)) {
      err << "error: cannot write '" << path << "'\n";
      return kExitUsage;
    }
  }
  out << result.stdout_text;
  return kExitOk;
}

}  // namespace psc::cli
