#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "halphen/cli.hpp"

using halphen::cli::run;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("series eisenstein lists divisor-sum coefficients") {
  const Run r = call({"series", "eisenstein", "--k", "2", "--order", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  const auto& terms = j["result"]["series"]["terms"];
  REQUIRE(terms.size() == 4);
  CHECK(terms[0][1] == "1/1");
  CHECK(terms[1][1] == "-24/1");
  CHECK(terms[2][1] == "-72/1");
  CHECK(terms[3][1] == "-96/1");
  CHECK(j["command"] == "series eisenstein");
  CHECK(j["version"] == "1.0.0");
  CHECK(j["config"]["order"] == 3);
}

TEST_CASE("verify commands succeed") {
  const Run r = call({"verify", "ramanujan", "--order", "30"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["summary"] == "all coefficients zero");
  CHECK(call({"verify", "gauss-manin", "--samples", "100", "--seed", "7"}).code == 0);
  CHECK(call({"verify", "darboux", "--samples", "20"}).code == 0);
  CHECK(call({"verify", "chazy", "--order", "10", "--tau", "0,1.3"}).code == 0);
}

TEST_CASE("reports are deterministic") {
  const std::vector<std::string> args{"verify", "gauss-manin", "--samples", "30", "--seed", "99"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> other{"verify", "gauss-manin", "--samples", "30", "--seed", "98"};
  CHECK(call(args).out != call(other).out);
}

TEST_CASE("numeric commands") {
  CHECK(call({"dh", "theta", "--tau", "0.1,1.2"}).code == 0);
  const Run d = call({"dh", "integrate", "--tau", "0,1.2", "--tau1", "0,2", "--tol", "1e-10"});
  CHECK(d.code == 0);
  CHECK(json::parse(d.out)["result"]["closed_form_gap"].get<double>() < 1e-8);
  CHECK(call({"frobenius", "wdvv", "--tau", "0,1"}).code == 0);
  CHECK(call({"frobenius", "cubic", "--tau", "0.3,1"}).code == 0);
  CHECK(call({"frobenius", "chazy", "--order", "5"}).code == 0);
  CHECK(call({"bianchi", "flat-family", "--t0", "0.7", "--t1", "2", "--steps", "4"}).code == 0);
  CHECK(call({"bianchi", "flow", "--t0", "0.7", "--t1", "2", "--steps", "4"}).code == 0);
  CHECK(call({"bianchi", "verify-constraint", "--t0", "0.8", "--t1", "1.5", "--steps", "3"}).code == 0);
}

TEST_CASE("CSV output") {
  const Run r = call({"series", "theta", "--which", "3", "--order", "16", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "exponent,coefficient\n0,1/1\n4,2/1\n16,2/1\n");
  const Run t = call({"dh", "integrate", "--tau", "0,1", "--tau1", "0,1.1", "--format", "csv", "--tol", "1e-8"});
  CHECK(t.out.rfind("tau_re,tau_im,", 0) == 0);
}

TEST_CASE("--out writes a file") {
  const std::string path = "halphen_cli_test_out.json";
  const Run r = call({"series", "theta", "--which", "2", "--order", "9", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  CHECK(j["result"]["series"]["variable"] == "w");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  CHECK(call({"series", "eisenstein", "--k", "8"}).code == 2);
  CHECK(call({"series", "eisenstein", "--order", "-1"}).code == 2);
  CHECK(call({"dh", "theta", "--tau", "0,-1"}).code == 2);
  CHECK(call({"dh", "theta", "--tau", "abc"}).code == 2);
  CHECK(call({"dh", "theta", "--tol", "0"}).code == 2);
  CHECK(call({"dh", "theta", "--format", "xml"}).code == 2);
  // A tolerance below what central differences can reach.
  CHECK(call({"dh", "theta", "--tol", "1e-14"}).code == 1);
  // t' = t^2 from t = 1 blows up before the segment ends.
  CHECK(call({"dh", "integrate", "--tau", "0,1", "--tau1", "2,1", "--initial", "1,0,1,0,1,0"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}
