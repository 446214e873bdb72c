#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "qcollatz/conjugacy.hpp"

using namespace qcollatz;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("map selection") {
  CHECK(cli::parse_map("T").kind() == MapKind::ClassicT);
  CHECK(cli::parse_map("Tq").a() == MapSpec::tq().a());
  CHECK(cli::parse_map("A=1,B=1+q^2").b() == t_one_one_plus_q2().b());
  CHECK(cli::parse_map("A=1+q,B=1/(1+q)").is_q_analog());
  CHECK_THROWS_AS(cli::parse_map("A=q,B=1"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_map("Collatz"), std::invalid_argument);
}

TEST_CASE("xi command") {
  const Run r = run_cli({"xi", "--value", "(1+q)/(1+q^3)"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "-3/7\n");
  const Run inv = run_cli({"xi", "--value", "-3/7", "--inverse"});
  CHECK(inv.code == cli::kExitOk);
  CHECK(parse_ratfun(lines(inv.out).at(0)) == parse_ratfun("(1+q)/(1+q^3)"));
  CHECK(run_cli({"xi", "--value", "1/q"}).code == cli::kExitUsage);
}

TEST_CASE("conjugate reproduces the polynomial table as csv") {
  const Run r = run_cli({"conjugate", "--map", "A=1,B=1+q^2", "--n-max", "20", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0] == "n,xi,value,word");
  CHECK(rows[3] == "3,47,q^5+q^3+q^2+q+1,111101|0");
  CHECK(rows[20] == "20,84,q^6+q^4+q^2,0010101|0");
}

TEST_CASE("conjugate markdown layout") {
  const Run r = run_cli({"conjugate", "--map", "Tq", "--n-max", "3"});
  CHECK(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == "| n | ξ(h(n)) | h(n) |");
  CHECK(rows[2] == "| 1 | -3/7 | (1+q)·1/(1+q^3) |");
  CHECK(rows[4] == "| 3 | -13/7 | 1+(1+q^2)·q^2/(1+q^3) |");
  CHECK(run_cli({"conjugate", "--map", "T"}).code == cli::kExitUsage);
  CHECK(run_cli({"conjugate", "--map", "Tq", "--n-max", "30", "--budget", "5"}).code ==
        cli::kExitCheckFailed);
}

TEST_CASE("orbit command") {
  const Run r = run_cli({"orbit", "--map", "Tq", "--start", "0", "--budget", "10"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("result: fixed point 0") != std::string::npos);
  const Run c = run_cli({"orbit", "--map", "T", "--start", "3"});
  CHECK(c.out.find("result: cycle of length 2 entered at step 4") != std::string::npos);
  const Run b = run_cli({"orbit", "--map", "T", "--start", "27", "--budget", "3"});
  CHECK(b.out.find("budget exhausted after 3 steps") != std::string::npos);
  const Run s = run_cli({"orbit", "--map", "shift", "--start", "1|01"});
  CHECK(s.code == cli::kExitOk);
}

TEST_CASE("json output round trips through the parsers") {
  const Run r = run_cli({"orbit", "--map", "A=1,B=1+q^2", "--start", "q^5+q^3+q^2+q+1",
                         "--format", "json"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  const MapSpec spec = t_one_one_plus_q2();
  Gf2RatFun x = parse_ratfun(j["start"].get<std::string>());
  for (const auto& s : j["states"]) {
    CHECK(parse_ratfun(s.get<std::string>()) == x);
    x = step_TAB(spec, x);
  }
  CHECK(j["cycle_length"] == 2);

  const Run t = run_cli({"conjugate", "--map", "Tq", "--n-max", "9", "--format", "json"});
  const auto table = nlohmann::json::parse(t.out);
  for (const auto& row : table["rows"]) {
    const Gf2RatFun value = parse_ratfun(row["value"].get<std::string>());
    CHECK(parse_ratfun(row["expression"].get<std::string>()) == value);
    CHECK(word_to_ratfun(EpWord::parse(row["word"].get<std::string>())) == value);
    CHECK(OddRational::parse(row["xi"].get<std::string>()) == xi(value));
  }
}

TEST_CASE("parity vector commands") {
  CHECK(run_cli({"pv", "--map", "T", "--start", "3"}).out == "1100|01\n");
  CHECK(run_cli({"pv", "--map", "T", "--start", "1", "--bits", "6"}).out == "101010\n");
  CHECK(run_cli({"pv", "--map", "Tq", "--start", "(1+q)/(1+q^3)"}).out == "|10\n");
  const Run u = run_cli({"pv", "--map", "T", "--start", "27", "--budget", "5", "--precision", "8"});
  std::string prefix;
  for (long long x = 27; prefix.size() < 8; x = x % 2 ? (3 * x + 1) / 2 : x / 2)
    prefix += x % 2 ? '1' : '0';
  CHECK(u.out == "undetermined within 5 steps; first 8 bits: " + prefix + "\n");
  CHECK(run_cli({"pv-inv", "--map", "Tq", "--word", "|10"}).out == "1/(q^2+q+1)\n");
  CHECK(run_cli({"pv-inv", "--map", "T", "--word", "|10"}).out == "1\n");
  CHECK(run_cli({"pv-inv", "--map", "Tq", "--bits", "1111"}).out == "1000\n");
  CHECK(run_cli({"pv-inv", "--map", "Tq"}).code == cli::kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run_cli({"orbit", "--map", "Tq"}).code == cli::kExitUsage);
  const Run even = run_cli({"orbit", "--map", "A=q,B=1", "--start", "1"});
  CHECK(even.code == cli::kExitUsage);
  CHECK_FALSE(even.err.empty());
  CHECK(run_cli({"orbit", "--map", "T", "--start", "1/2"}).code == cli::kExitUsage);
  CHECK(run_cli({"conjugate", "--map", "Tq", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("verify is deterministic") {
  const std::vector<std::string> args{"verify", "--scale", "0.02", "--seed", "17"};
  const Run a = run_cli(args);
  const Run b = run_cli(args);
  CHECK(a.code == cli::kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("all checks passed") != std::string::npos);
}
