#include "cli.hpp"

#include "tmhankel/automaton.hpp"
#include "tmhankel/closed_form.hpp"
#include "tmhankel/errors.hpp"
#include "tmhankel/hankel.hpp"
#include "tmhankel/sequences.hpp"
#include "tmhankel/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tmhankel::cli {

using json = nlohmann::ordered_json;

BigInt parse_index(std::string_view text) {
  auto digits = [](std::string_view s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    if (!digits(text)) throw ParseError("not a nonnegative decimal integer: '" + std::string(text) + "'");
    return BigInt(std::string(text), 10);
  }
  const auto base = text.substr(0, caret);
  const auto exponent = text.substr(caret + 1);
  if (!digits(base) || !digits(exponent) || exponent.size() > 6) {
    throw ParseError("not an exact power '<digits>^<digits>': '" + std::string(text) + "'");
  }
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), BigInt(std::string(base), 10).get_mpz_t(), std::stoul(std::string(exponent)));
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(ms < 1.0 ? 4 : 2) << ms;
  return os.str();
}

std::optional<Family> parse_family(std::string_view text) {
  if (text == "H" || text == "h") return Family::H;
  if (text == "Sigma" || text == "sigma" || text == "S" || text == "s") return Family::Sigma;
  return std::nullopt;
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

struct SeqArgs {
  std::string kind;
  std::string count;
  OutputFormat format = OutputFormat::Csv;
  bool header = false;
};

int cmd_seq(const SeqArgs& args, std::ostream& out, std::ostream& err) {
  SequenceKind kind;
  if (args.kind == "c") {
    kind = SequenceKind::C;
  } else if (args.kind == "s") {
    kind = SequenceKind::S;
  } else {
    err << "seq: kind must be 'c' or 's'\n";
    return kUsage;
  }
  const BigInt count = parse_index(args.count);
  if (!count.fits_ulong_p()) {
    err << "seq: count too large\n";
    return kUsage;
  }
  const std::uint64_t n_terms = count.get_ui();
  auto value = [&](std::uint64_t n) { return kind == SequenceKind::C ? c_term(n) : s_term(n); };

  switch (args.format) {
    case OutputFormat::Json: {
      json values = json::array();
      for (std::uint64_t n = 0; n < n_terms; ++n) values.push_back({{"n", n}, {"value", to_string(value(n))}});
      print_json(out, {{"command", "seq"}, {"kind", args.kind}, {"count", n_terms}, {"values", std::move(values)}});
      break;
    }
    case OutputFormat::Csv:
      if (args.header) out << "n,value\n";
      for (std::uint64_t n = 0; n < n_terms; ++n) out << n << ',' << to_string(value(n)) << '\n';
      break;
    case OutputFormat::Plain:
      if (args.header) out << "n value\n";
      for (std::uint64_t n = 0; n < n_terms; ++n) out << n << ' ' << to_string(value(n)) << '\n';
      break;
  }
  return kOk;
}

struct DetArgs {
  std::string family;
  std::string p = "0";
  std::string n;
  std::string method = "fast";
  OutputFormat format = OutputFormat::Plain;
  bool header = false;
  bool timing = false;
};

int cmd_det(const DetArgs& args, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(args.family);
  if (!family) {
    err << "det: family must be H or Sigma\n";
    return kUsage;
  }
  const BigInt p = parse_index(args.p);
  const BigInt n = parse_index(args.n);
  const bool want_fast = args.method == "fast" || args.method == "both";
  const bool want_brute = args.method == "brute" || args.method == "both";

  std::optional<UnitOrZero> fast, brute;
  if (want_brute) {
    try {
      brute = oracle_det({*family, p, n});
    } catch (const CapExceeded& e) {
      err << "det: " << e.what() << " (set HANKEL_ORACLE_CAP to raise it)\n";
      return kUsage;
    }
  }
  if (want_fast) {
    Evaluator evaluator;
    const auto start = Clock::now();
    fast = evaluator.eval(*family, n, p);
    if (args.timing) err << "evaluator time: " << format_ms(elapsed_ms(start)) << " ms\n";
  }
  const bool mismatch = fast && brute && *fast != *brute;
  const std::string status = mismatch ? "mismatch" : "ok";

  switch (args.format) {
    case OutputFormat::Plain:
      if (fast && brute) {
        out << to_string(*fast) << ' ' << to_string(*brute) << ' ' << status << '\n';
      } else {
        out << to_string(fast ? *fast : *brute) << '\n';
      }
      break;
    case OutputFormat::Csv:
      if (args.header) out << "family,p,n,fast,brute,status\n";
      out << to_string(*family) << ',' << p.get_str() << ',' << n.get_str() << ','
          << (fast ? to_string(*fast) : "") << ',' << (brute ? to_string(*brute) : "") << ',' << status << '\n';
      break;
    case OutputFormat::Json: {
      json values = json::array();
      if (fast) values.push_back({{"method", "fast"}, {"value", to_string(*fast)}});
      if (brute) values.push_back({{"method", "brute"}, {"value", to_string(*brute)}});
      print_json(out, {{"command", "det"},
                       {"family", std::string(to_string(*family))},
                       {"p", p.get_str()},
                       {"n", n.get_str()},
                       {"method", args.method},
                       {"values", std::move(values)},
                       {"status", status}});
      break;
    }
  }
  if (mismatch) {
    err << "det: fast and brute disagree\n";
    return kMismatch;
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::size_t> n_max;
  std::optional<std::size_t> p_max;
  std::uint64_t seed = VerifyOptions{}.seed;
  unsigned threads = 0;
  OutputFormat format = OutputFormat::Plain;
  bool header = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (!is_suite_name(args.suite)) {
    err << "verify: unknown suite '" << args.suite << "'\n";
    return kUsage;
  }
  VerifyOptions options;
  options.n_max = args.n_max;
  options.p_max = args.p_max;
  options.seed = args.seed;
  options.threads = args.threads;
  const auto reports = run_suites(args.suite, options);

  const SuiteReport* failed = nullptr;
  for (const auto& r : reports) {
    if (!r.ok() && failed == nullptr) failed = &r;
  }

  switch (args.format) {
    case OutputFormat::Plain:
      for (const auto& r : reports) {
        out << "suite " << r.suite << ": " << r.total_checks() << " checks\n";
        for (const auto& t : r.tallies) {
          out << "  " << std::left << std::setw(28) << t.name << " passed " << t.passed << '/' << (t.passed + t.failed)
              << '\n';
        }
        for (const auto& note : r.notes) out << "  note: " << note << '\n';
      }
      out << (failed ? "FAIL" : "PASS") << '\n';
      break;
    case OutputFormat::Csv:
      if (args.header) out << "suite,identity,passed,failed\n";
      for (const auto& r : reports) {
        for (const auto& t : r.tallies) out << r.suite << ',' << t.name << ',' << t.passed << ',' << t.failed << '\n';
      }
      break;
    case OutputFormat::Json: {
      json values = json::array();
      for (const auto& r : reports) {
        for (const auto& t : r.tallies) {
          values.push_back({{"suite", r.suite}, {"identity", t.name}, {"passed", t.passed}, {"failed", t.failed}});
        }
      }
      json doc{{"command", "verify"}, {"suite", args.suite}, {"values", std::move(values)}, {"ok", failed == nullptr}};
      if (failed) {
        const Failure& f = *failed->first_failure;
        doc["first_failure"] = {{"identity", f.identity}, {"n", f.n}, {"p", f.p}, {"lhs", f.lhs}, {"rhs", f.rhs}};
      }
      print_json(out, doc);
      break;
    }
  }
  if (failed) {
    const Failure& f = *failed->first_failure;
    err << "first failure: (" << f.identity << ", n=" << f.n << ", p=" << f.p << ", lhs=" << f.lhs
        << ", rhs=" << f.rhs << ")\n";
    return kVerificationFailed;
  }
  return kOk;
}

struct AutomatonArgs {
  std::string selector;
  std::size_t prefix_len = 729;
  OutputFormat format = OutputFormat::Json;
  bool header = false;
};

int cmd_automaton(const AutomatonArgs& args, std::ostream& out, std::ostream& err) {
  const auto selector = parse_column_selector(args.selector);
  if (!selector) {
    err << "automaton: selector must be one of h0, h1, s0, s1\n";
    return kUsage;
  }
  if (args.prefix_len < kMinPrefixLength) {
    err << "automaton: prefix length must be at least " << kMinPrefixLength << '\n';
    return kUsage;
  }
  Dfao dfao;
  try {
    dfao = kernel_dfao(*selector, args.prefix_len);
  } catch (const NonConvergence& e) {
    err << e.what() << '\n';
    return kAutomatonFailed;
  } catch (const ReplayFailure& e) {
    err << e.what() << '\n';
    return kAutomatonFailed;
  }
  switch (args.format) {
    case OutputFormat::Csv:
      if (args.header) out << "state,output,next0,next1,next2\n";
      for (std::size_t s = 0; s < dfao.state_count(); ++s) {
        const auto& t = dfao.transitions[s];
        out << s << ',' << to_string(dfao.outputs[s]) << ',' << t[0] << ',' << t[1] << ',' << t[2] << '\n';
      }
      break;
    case OutputFormat::Plain:
    case OutputFormat::Json:
      print_json(out, dfao.to_json());
      break;
  }
  return kOk;
}

struct BenchArgs {
  std::string n_list;
  std::string p = "0";
  std::string family = "H";
  OutputFormat format = OutputFormat::Plain;
  bool header = false;
};

struct BenchRow {
  std::string n;
  UnitOrZero fast;
  double fast_ms = 0;
  std::optional<UnitOrZero> brute;
  double brute_ms = 0;
};

// Mean over fresh evaluators until at least 5 ms have elapsed (capped at 1000 runs).
std::pair<UnitOrZero, double> time_fast(Family family, const BigInt& n, const BigInt& p) {
  UnitOrZero value;
  std::size_t runs = 0;
  const auto start = Clock::now();
  do {
    Evaluator evaluator;
    value = evaluator.eval(family, n, p);
    ++runs;
  } while (elapsed_ms(start) < 5.0 && runs < 1000);
  return {value, elapsed_ms(start) / static_cast<double>(runs)};
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  const auto family = parse_family(args.family);
  if (!family) {
    err << "bench: family must be H or Sigma\n";
    return kUsage;
  }
  std::vector<BigInt> ns;
  std::stringstream list(args.n_list);
  for (std::string item; std::getline(list, item, ',');) ns.push_back(parse_index(item));
  if (ns.empty() || args.n_list.back() == ',') {
    err << "bench: expected a comma-separated list of indices\n";
    return kUsage;
  }
  const BigInt p = parse_index(args.p);
  const std::size_t cap = oracle_cap();

  std::vector<BenchRow> rows;
  bool mismatch = false;
  for (const BigInt& n : ns) {
    BenchRow row;
    row.n = n.get_str();
    std::tie(row.fast, row.fast_ms) = time_fast(*family, n, p);
    if (n.fits_ulong_p() && n.get_ui() <= cap) {
      const auto start = Clock::now();
      row.brute = oracle_det({*family, p, n});
      row.brute_ms = elapsed_ms(start);
      mismatch = mismatch || *row.brute != row.fast;
    }
    rows.push_back(std::move(row));
  }

  auto speedup = [](const BenchRow& r) -> std::string {
    if (!r.brute || r.fast_ms <= 0) return "";
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << r.brute_ms / r.fast_ms;
    return os.str();
  };
  switch (args.format) {
    case OutputFormat::Plain:
      out << std::left << std::setw(24) << "n" << std::setw(8) << "fast" << std::setw(14) << "fast_ms" << std::setw(8)
          << "brute" << std::setw(14) << "brute_ms" << "speedup\n";
      for (const auto& r : rows) {
        out << std::left << std::setw(24) << r.n << std::setw(8) << to_string(r.fast) << std::setw(14)
            << format_ms(r.fast_ms) << std::setw(8) << (r.brute ? to_string(*r.brute) : "skipped") << std::setw(14)
            << (r.brute ? format_ms(r.brute_ms) : "-") << (r.brute ? speedup(r) : "-") << '\n';
      }
      break;
    case OutputFormat::Csv:
      if (args.header) out << "n,fast,fast_ms,brute,brute_ms,speedup\n";
      for (const auto& r : rows) {
        out << r.n << ',' << to_string(r.fast) << ',' << format_ms(r.fast_ms) << ','
            << (r.brute ? to_string(*r.brute) : "skipped") << ',' << (r.brute ? format_ms(r.brute_ms) : "") << ','
            << speedup(r) << '\n';
      }
      break;
    case OutputFormat::Json: {
      json values = json::array();
      for (const auto& r : rows) {
        json row{{"n", r.n}, {"fast", to_string(r.fast)}, {"fast_ms", r.fast_ms}};
        if (r.brute) {
          row["brute"] = to_string(*r.brute);
          row["brute_ms"] = r.brute_ms;
          row["speedup"] = r.brute_ms / r.fast_ms;
        } else {
          row["brute"] = "skipped";
        }
        values.push_back(std::move(row));
      }
      print_json(out, {{"command", "bench"},
                       {"family", std::string(to_string(*family))},
                       {"p", p.get_str()},
                       {"values", std::move(values)}});
      break;
    }
  }
  if (mismatch) {
    err << "bench: fast and brute disagree\n";
    return kMismatch;
  }
  return kOk;
}

const std::map<std::string, OutputFormat> kFormats{
    {"plain", OutputFormat::Plain}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};

void add_format(CLI::App* cmd, OutputFormat& format, bool& header) {
  cmd->add_option("--format", format, "Output format: plain, csv or json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  cmd->add_flag("--header", header, "Print a header line (plain/csv)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hankel determinants of the sequence ∏(1 + J x^{3^k}) over Z[J]", "tmhankel"};
  app.require_subcommand(1);

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print the first terms of c or s");
  seq_cmd->add_option("kind", seq.kind, "c or s")->required();
  seq_cmd->add_option("count", seq.count, "Number of terms")->required();
  add_format(seq_cmd, seq.format, seq.header);

  DetArgs det;
  auto* det_cmd = app.add_subcommand("det", "Evaluate |H_n^p| or |Sigma_n^p|");
  det_cmd->add_option("family", det.family, "H or Sigma")->required();
  det_cmd->add_option("--p", det.p, "Offset p (decimal)");
  det_cmd->add_option("--n", det.n, "Order n (decimal)")->required();
  det_cmd->add_option("--method", det.method, "fast, brute or both")
      ->check(CLI::IsMember({"fast", "brute", "both"}));
  det_cmd->add_flag("--timing", det.timing, "Report evaluator time on stderr");
  add_format(det_cmd, det.format, det.header);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run an identity suite against the exact oracle");
  verify_cmd->add_option("suite", verify.suite,
                         "lemma, corollary, theorem-tables, blocks, generators, oracle or all")
      ->required();
  verify_cmd->add_option("--n-max", verify.n_max, "Largest n in the grid");
  verify_cmd->add_option("--p-max", verify.p_max, "Largest p in the grid");
  verify_cmd->add_option("--seed", verify.seed, "Seed for random matrices");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: all cores)");
  add_format(verify_cmd, verify.format, verify.header);

  AutomatonArgs automaton;
  auto* automaton_cmd = app.add_subcommand("automaton", "Build the 3-kernel automaton of a determinant column");
  automaton_cmd->add_option("selector", automaton.selector, "h0, h1, s0 or s1")->required();
  automaton_cmd->add_option("prefix_len", automaton.prefix_len, "Terms compared when merging kernel states");
  add_format(automaton_cmd, automaton.format, automaton.header);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the fast evaluator against the oracle");
  bench_cmd->add_option("n_list", bench.n_list, "Comma-separated orders")->required();
  bench_cmd->add_option("--p", bench.p, "Offset p (decimal)");
  bench_cmd->add_option("--family", bench.family, "H or Sigma");
  add_format(bench_cmd, bench.format, bench.header);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*seq_cmd) return cmd_seq(seq, out, err);
    if (*det_cmd) return cmd_det(det, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*automaton_cmd) return cmd_automaton(automaton, out, err);
    if (*bench_cmd) return cmd_bench(bench, out, err);
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace tmhankel::cli
