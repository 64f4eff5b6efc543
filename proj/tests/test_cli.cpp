#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "kcpm/cli.hpp"
#include "kcpm/intervals.hpp"

using namespace kcpm;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kcpm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report and decide on the small example") {
  auto r = run({"report", "-p", "abcd", "-t", "ccddababc", "-k", "1", "--materialize"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1 2 3 5 6\n");
  auto d = run({"decide", "-p", "abcd", "-t", "ccddababc", "-k", "1"});
  CHECK(d.code == kExitOk);
  auto none = run({"decide", "-p", "aaaa", "-t", "bbbb", "-k", "1"});
  CHECK(none.code == kExitNotFound);
  CHECK(none.out == "none\n");
}

TEST_CASE("JSON output follows the schema and matches --materialize") {
  const std::string P = std::string(99, 'a') + "b";
  auto j = run({"report", "-p", P, "-t", P + P, "-k", "0", "--json"});
  REQUIRE(j.code == kExitOk);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["mode"] == "report");
  CHECK(doc["k"] == 0);
  i64 prev = -1;
  for (const auto& c : doc["chains"]) {
    for (const char* key : {"lo", "hi", "count", "diff"}) CHECK(c.contains(key));
    CHECK(c["lo"].get<i64>() >= prev);
    prev = c["lo"].get<i64>();
  }
  auto m = run({"report", "-p", P, "-t", P + P, "-k", "0", "--materialize"});
  std::ostringstream want;
  auto pos = PositionSet::from_json(j.out).materialize();
  CHECK(pos.size() == 101);
  for (size_t i = 0; i < pos.size(); ++i) want << (i ? " " : "") << pos[i];
  CHECK(m.out == want.str() + "\n");
  auto dj = nlohmann::json::parse(run({"decide", "-p", "aaaa", "-t", "bbbb", "-k", "1", "--json"}).out);
  CHECK(dj["witness"].is_null());
}

TEST_CASE("oracle subcommand agrees with report") {
  for (auto k : {"0", "1", "2"}) {
    auto a = run({"report", "-p", "abcbbbb", "-t", "bacbbcbacbcaaa", "-k", k, "--materialize"});
    auto b = run({"oracle", "-p", "abcbbbb", "-t", "bacbbcbacbcaaa", "-k", k, "--materialize"});
    CHECK(a.out == b.out);
  }
}

TEST_CASE("file inputs are raw bytes unless --strip-newline") {
  const std::string pf = "kcpm_cli_p.txt", tf = "kcpm_cli_t.txt";
  std::ofstream(pf) << "abcd\n";
  std::ofstream(tf) << "ccddababc\n";
  auto raw = run({"report", "--pattern-file", pf, "--text-file", tf, "-k", "1", "--materialize"});
  auto strip = run({"report", "--pattern-file", pf, "--text-file", tf, "-k", "1", "--materialize", "--strip-newline"});
  CHECK(strip.out == "1 2 3 5 6\n");
  CHECK(raw.code == kExitOk);
  CHECK(raw.out != strip.out);
  std::remove(pf.c_str());
  std::remove(tf.c_str());
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"report", "-p", "ab", "-t", "ab", "-k", "-1"}).code == kExitUsage);
  CHECK(run({"report", "-t", "ab", "-k", "1"}).code == kExitUsage);
  CHECK(run({"report", "-p", "", "-t", "ab", "-k", "1"}).code == kExitUsage);
  CHECK(run({"report", "--pattern-file", "/nonexistent/p", "-t", "ab", "-k", "1"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  auto e = run({"report", "-p", "ab", "-t", "ab", "-k", "x"});
  CHECK(e.code == kExitUsage);
  CHECK_FALSE(e.err.empty());
}

TEST_CASE("bench cross-checks against the brute force") {
  auto b = run({"bench", "--seed", "3", "--cases", "60"});
  CHECK(b.code == kExitOk);
  CHECK(b.out.rfind("60/60 match\n", 0) == 0);
}
