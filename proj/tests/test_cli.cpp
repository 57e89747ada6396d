#include <doctest.h>

#include "nearcf/report.hpp"
#include <sstream>

#include "nearcf/cfcore.hpp"
#include "nearcf/cli.hpp"
#include "nearcf/exactnum.hpp"

using namespace nearcf;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("cli golden outputs") {
  CHECK(run({"factor", "741"}).out == "741 = 3 × 247 (l=10, central=18)\n");
  CHECK(run({"--digits", "8", "mean", "--kind", "geometric", "1", "1"}).out ==
        "pre=[1] period=[2,2] value=(0+1√2)/1 ≈ 1.41421356\n");
  CHECK(run({"continuant", "1", "2", "3"}).out == "10\n");
  CHECK(run({"continuant"}).out == "1\n");
  CHECK(run({"eval", "27", "4", "1", "1", "13"}).out == "3321/122\n");
  CHECK(run({"eval", "27", "4", "1", "1", "13", "9"}).out == "30134/1107\n");
  CHECK(run({"eval", "1", "1-i"}).out == "3/2+1/2i\n");
  CHECK(run({"sqrt-cf", "741"}).out.find("period=[4,1,1,13,18,13,1,1,4,54]") != std::string::npos);
  CHECK(run({"sum2sq", "13"}).out == "13 = 3^2 + 2^2 (l=5)\n");
  CHECK(run({"factor", "13"}).out == "13: inapplicable (odd period, l=5)\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"pell", "4"}).code == kExitDomain);
  CHECK(run({"pell", "4"}).err.rfind("error[domain]:", 0) == 0);
  CHECK(run({"mordell", "5"}).code == kExitDomain);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"eval", "x"}).code == kExitUsage);
  CHECK(run({"mean", "--kind", "median", "1", "2"}).code == kExitUsage);
  CHECK(run({"eval", "1", "0"}).code == kExitDomain);
  CHECK(run({"--period-cap", "3", "sqrt-cf", "741"}).code == kExitDomain);
  CHECK(run({"sqrt-cf", "9"}).err.find("rational square root") != std::string::npos);
  CHECK(run({"scan", "10", "2"}).code == kExitDomain);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("cli mean --verify") {
  for (const char* kind : {"arithmetic", "geometric", "harmonic", "cotangent"}) {
    for (const char* variant : {"real", "complex"}) {
      const Run r = run({"mean", "--kind", kind, "--variant", variant, "--verify", "1", "2"});
      CHECK(r.code == kExitOk);
      CHECK(r.out.find("verify: pass") != std::string::npos);
    }
  }
}

TEST_CASE("json-lines records re-verify") {
  const Run f = run({"--format", "json-lines", "factor", "741"});
  const auto record = lines(f.out).at(0);
  CHECK(record["op"] == "factor");
  const Integer u(record["result"]["u"].get<std::string>());
  const Integer v(record["result"]["v"].get<std::string>());
  CHECK(u * v == 741);

  const Run p = run({"--format", "json-lines", "pell", "741"});
  const auto pell = lines(p.out).at(0);
  const Integer x(pell["result"]["x"].get<std::string>());
  const Integer y(pell["result"]["y"].get<std::string>());
  CHECK(x * x - 741 * y * y == std::stoi(pell["result"]["rhs"].get<std::string>()));

  const Run m = run({"--format", "json-lines", "mean", "--kind", "arithmetic", "1", "2"});
  const auto mean = lines(m.out).at(0);
  CHECK(mean["result"]["value"] == "5/4");
  CHECK(mean["checks"]["value_equals_mean"] == true);
  for (const char* key : {"op", "input", "result", "checks"}) CHECK(mean.contains(key));
}

TEST_CASE("scan examples") {
  const Run m = run({"--format", "json-lines", "scan", "--mode", "mordell", "3", "100"});
  CHECK(m.code == 0);
  const auto records = lines(m.out);
  CHECK(records.size() == 14);
  const auto& summary = records.back();
  CHECK(summary["op"] == "scan-summary");
  CHECK(summary["result"]["items"] == "13");
  CHECK(summary["result"]["counterexamples"] == "0");

  const Run f = run({"--format", "json-lines", "scan", "--mode", "factor", "2", "50"});
  bool saw21 = false;
  bool saw33 = false;
  for (const auto& r : lines(f.out)) {
    if (r["op"] != "factor" || !r["result"].contains("u")) continue;
    const std::string n = r["input"]["n"];
    if (n == "21") saw21 = r["result"]["u"] == "3" && r["result"]["v"] == "7";
    if (n == "33") saw33 = r["result"]["u"] == "3" && r["result"]["v"] == "11";
  }
  CHECK(saw21);
  CHECK(saw33);

  const Run p = run({"--format", "json-lines", "scan", "--mode", "pell", "2", "10"});
  int verified = 0;
  for (const auto& r : lines(p.out)) {
    if (r["op"] != "pell" || !r["result"].contains("x")) continue;
    const Integer n(r["input"]["n"].get<std::string>());
    const Integer x(r["result"]["x"].get<std::string>());
    const Integer y(r["result"]["y"].get<std::string>());
    const int rhs = std::stoi(r["result"]["rhs"].get<std::string>());
    if (x * x - n * y * y == rhs && (rhs == 1 || rhs == -1)) ++verified;
  }
  CHECK(verified == 7);
}

TEST_CASE("scan output is identical across worker counts") {
  for (const char* mode : {"mordell", "factor", "pell", "sum2sq"}) {
    const Run one = run({"--workers", "1", "scan", "--mode", mode, "2", "3000"});
    const Run eight = run({"--workers", "8", "scan", "--mode", mode, "2", "3000"});
    CHECK(one.code == 0);
    CHECK(one.out == eight.out);
  }
}
