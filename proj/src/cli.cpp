#include "kcpm/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "kcpm/oracle.hpp"
#include "kcpm/reduction.hpp"

namespace kcpm {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::string pattern, text, pattern_file, text_file;
  bool strip_newline = false;
  i64 k = 0;
  bool json = false, materialize = false;
};

std::string read_file(const std::string& path, bool strip) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  if (strip) {
    if (!s.empty() && s.back() == '\n') s.pop_back();
    if (!s.empty() && s.back() == '\r') s.pop_back();
  }
  return s;
}

void resolve(Inputs& in, bool p_given, bool t_given) {
  if (!in.pattern_file.empty()) in.pattern = read_file(in.pattern_file, in.strip_newline);
  else if (!p_given) throw UsageError("a pattern is required (-p or --pattern-file)");
  if (!in.text_file.empty()) in.text = read_file(in.text_file, in.strip_newline);
  else if (!t_given) throw UsageError("a text is required (-t or --text-file)");
  if (in.pattern.empty()) throw UsageError("the pattern must be nonempty");
  if (in.k < 0) throw UsageError("k must be nonnegative");
}

void print_positions(std::ostream& out, const std::vector<i64>& v) {
  for (size_t j = 0; j < v.size(); ++j) out << (j ? " " : "") << v[j];
  out << '\n';
}

void print_set(std::ostream& out, const PositionSet& set, const Inputs& in, const std::string& mode) {
  if (in.json) {
    out << set.to_json(mode, in.k) << '\n';
  } else if (in.materialize) {
    print_positions(out, set.materialize());
  } else {
    // One chain per line: lo hi count diff.
    for (const auto& c : set.normalized().chains()) out << c.base.lo << ' ' << c.base.hi << ' ' << c.count << ' ' << c.diff << '\n';
  }
}

int cmd_report(const Inputs& in, std::ostream& out) {
  auto pr = make_problem(in.pattern, in.text);
  print_set(out, circ_occ(*pr, in.k, Mode::report).set, in, "report");
  return kExitOk;
}

int cmd_decide(const Inputs& in, std::ostream& out) {
  auto pr = make_problem(in.pattern, in.text);
  auto w = circ_occ(*pr, in.k, Mode::decide).witness;
  if (in.json) {
    nlohmann::json j{{"mode", "decide"}, {"k", in.k}};
    j["witness"] = w ? nlohmann::json(*w) : nlohmann::json(nullptr);
    out << j.dump() << '\n';
  } else if (w) {
    out << *w << '\n';
  } else {
    out << "none\n";
  }
  return w ? kExitOk : kExitNotFound;
}

int cmd_oracle(const Inputs& in, std::ostream& out) {
  auto pos = oracle::brute_circocc(in.pattern, in.text, in.k).positions;
  if (in.materialize) {
    print_positions(out, pos);
    return kExitOk;
  }
  print_set(out, from_positions(pos), in, "oracle");
  return kExitOk;
}

int cmd_bench(std::uint64_t seed, int cases, std::ostream& out) {
  std::mt19937_64 rng(seed);
  const int sigmas[] = {2, 4, 26};
  int ok = 0;
  i64 chains = 0;
  double ms = 0;
  for (int c = 0; c < cases; ++c) {
    i64 m = 8 + rng() % 33, n = m + rng() % (2 * m + 1), k = rng() % 5;
    int sigma = sigmas[c % 3];
    std::string P, T;
    if (c % 4 == 3) {
      // Near-periodic: both sides close to powers of one primitive root.
      std::string Q = oracle::random_primitive(rng, 2 + rng() % 5, 2 + c % 3);
      P = oracle::plant_edits(rng, oracle::power_prefix(Q, m, rng() % Q.size()), rng() % (k + 1), 3);
      T = oracle::plant_edits(rng, oracle::power_prefix(Q, n, rng() % Q.size()), rng() % (4 * k + 1), 3);
    } else {
      P = oracle::random_string(rng, m, sigma);
      T = oracle::random_string(rng, n, sigma);
      if (c % 2) {
        std::string R = oracle::plant_edits(rng, oracle::rotate(P, rng() % m), rng() % (k + 1), sigma);
        i64 at = rng() % (n - std::min<i64>(n, R.size()) + 1);
        T = T.substr(0, at) + R + T.substr(std::min<size_t>(T.size(), at + R.size()));
      }
    }
    auto t0 = std::chrono::steady_clock::now();
    auto pr = make_problem(P, T);
    auto rep = circ_occ(*pr, k, Mode::report);
    auto dec = circ_occ(*pr, k, Mode::decide);
    ms += std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    auto want = oracle::brute_circocc(P, T, k).positions;
    bool agree = rep.set.materialize() == want && dec.witness.has_value() == !want.empty() &&
                 (!dec.witness || std::binary_search(want.begin(), want.end(), *dec.witness));
    ok += agree;
    chains += static_cast<i64>(rep.set.normalized().chain_count());
  }
  out << ok << '/' << cases << " match\n";
  out << "time_ms " << ms << " chains " << chains << '\n';
  return ok == cases ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-edit circular pattern matching"};
  app.require_subcommand(1);
  Inputs in;
  std::uint64_t seed = 1;
  int cases = 1000;

  auto add_io = [&](CLI::App* sub) {
    sub->add_option("-p,--pattern", in.pattern, "pattern (inline)");
    sub->add_option("-t,--text", in.text, "text (inline)");
    sub->add_option("--pattern-file", in.pattern_file, "read the pattern from a file");
    sub->add_option("--text-file", in.text_file, "read the text from a file");
    sub->add_flag("--strip-newline", in.strip_newline, "drop one trailing newline from file inputs");
    sub->add_option("-k", in.k, "edit budget")->required();
    sub->add_flag("--json", in.json, "JSON output");
    sub->add_flag("--materialize", in.materialize, "print every position");
  };
  auto* report = app.add_subcommand("report", "all starting positions");
  auto* decide = app.add_subcommand("decide", "one starting position, or none");
  auto* orc = app.add_subcommand("oracle", "brute force");
  auto* bench = app.add_subcommand("bench", "random differential run against the brute force");
  for (auto* s : {report, decide, orc}) add_io(s);
  bench->add_option("--seed", seed, "RNG seed");
  bench->add_option("--cases", cases, "number of instances")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*bench) return cmd_bench(seed, cases, out);
    auto* sub = app.get_subcommands().front();
    resolve(in, sub->count("-p") > 0, sub->count("-t") > 0);
    if (*report) return cmd_report(in, out);
    if (*decide) return cmd_decide(in, out);
    return cmd_oracle(in, out);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace kcpm
