#include <sstream>

#include "doctest.h"

#include "brieskorn/cli.hpp"
#include "brieskorn/parse.hpp"
#include "support/support.hpp"

using namespace brieskorn;

namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "brieskorn");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrix in the printed T255 order") {
  auto r = invoke({"matrix", "--poly", "x^5+x^2*y^2+y^5", "--vars", "x,y", "--trunc", "2",
                   "--basis-order", "paper-t255", "--saito"});
  REQUIRE(r.status == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["entries"]["(1,11)"] == "-1/2");
  CHECK(doc["entries"]["(11,11)"] == "0+1/2*s");
  CHECK(doc["deg_s"] == "-7");
  CHECK(doc["mu"] == 11);
  CHECK(doc["A0"][0][10] == "-1/2");
  CHECK(doc["A1"][6][5] == "-75/16");
  CHECK(doc["basis"][4] == "x*y");
}

TEST_CASE("milnor and basis") {
  auto r = invoke({"milnor", "--poly", "x^6+y^6+z^6+x^4*y^4*z^4", "--vars", "x,y,z"});
  REQUIRE(r.status == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["mu"] == 125);
  auto b = invoke({"basis", "--poly", "x^3+y^3"});
  REQUIRE(b.status == kExitOk);
  CHECK(nlohmann::json::parse(b.out)["basis"] == nlohmann::json({"x*y", "y", "x", "1"}));
}

TEST_CASE("Morse matrix with default variables") {
  auto r = invoke({"matrix", "--poly", "x^2+y^2", "--trunc", "3"});
  REQUIRE(r.status == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["entries"]["(1,1)"] == "0+1*s");
  CHECK(doc["coefficients"][0][0] == nlohmann::json({"0", "1", "0"}));
  CHECK(doc["vars"] == nlohmann::json({"x", "y"}));
}

TEST_CASE("JSON round trip") {
  for (const char* f : {"x^5+x^2*y^2+y^5", "x^4+2*x^2*y^3+x*y^5+y^6"}) {
    auto r = invoke({"matrix", "--poly", f, "--trunc", "4"});
    REQUIRE(r.status == kExitOk);
    auto fam = testing::family_of(f, {"x", "y"});
    CHECK(matrix_from_json(nlohmann::json::parse(r.out), fam.ord) == lattice_matrix(fam, 4));
  }
}

TEST_CASE("stdbasis document") {
  auto r = invoke({"stdbasis", "--poly", "x^5+x^2*y^2+y^5"});
  REQUIRE(r.status == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["g"][3] == "10*y^6+25*x^3*y^4");
  CHECK(doc["U"][1][3] == "2*y^2+5*x^3");
  CHECK(doc["staircase"] == nlohmann::json({"x^2*y", "x*y^2", "x^5", "y^6"}));
}

TEST_CASE("relations and verify") {
  auto rel = invoke({"relations", "--poly", "x^5+x^2*y^2+y^5", "--K", "-4"});
  REQUIRE(rel.status == kExitOk);
  CHECK(nlohmann::json::parse(rel.out)["relations"].empty());
  auto v = invoke({"verify", "--poly", "x^5+x^2*y^2+y^5", "--trunc", "4"});
  CHECK(v.status == kExitOk);
  CHECK(nlohmann::json::parse(v.out)["oracle"] == "match");
}

TEST_CASE("trunc full warns") {
  auto r = invoke({"matrix", "--poly", "x^2+y^3", "--trunc", "full"});
  REQUIRE(r.status == kExitOk);
  CHECK(nlohmann::json::parse(r.out)["trunc"] == 2 * (2 + 2 - 1));
  CHECK(r.err.find("useless in practice") != std::string::npos);
}

TEST_CASE("input errors exit with status 2") {
  auto parse = invoke({"matrix", "--poly", "x^2+q*y", "--vars", "x,y"});
  CHECK(parse.status == kExitInput);
  CHECK(parse.err.find("position 4") != std::string::npos);
  CHECK(parse.err.find("x^2+q*y") != std::string::npos);

  auto nonisolated = invoke({"milnor", "--poly", "x^2*y^2"});
  CHECK(nonisolated.status == kExitInput);
  CHECK(nonisolated.err.find("x^2*y^2") != std::string::npos);

  auto linear = invoke({"matrix", "--poly", "x+y^2"});
  CHECK(linear.status == kExitInput);
  CHECK(linear.err.find("x+y^2") != std::string::npos);

  CHECK(invoke({"matrix", "--poly", "x^2+y^2", "--trunc", "0"}).status == kExitInput);
  CHECK(invoke({"matrix", "--poly", "x^2+y^2", "--weights", "-1,1"}).status == kExitInput);
  CHECK(invoke({"matrix", "--poly", "x^5+x^2*y^2+y^5", "--deg-s", "-6"}).status == kExitInput);
  CHECK(invoke({"matrix", "--poly", "x^2+y^2", "--basis-order", "paper-t255"}).status == kExitInput);
  CHECK(invoke({"frobnicate"}).status == kExitInput);
  CHECK(invoke({"matrix"}).status == kExitInput);
}

TEST_CASE("verify with a tighter deg(s)") {
  // The matrix does not depend on the admissible deg(s).
  auto ok = invoke({"verify", "--poly", "x^3+y^4", "--deg-s", "-6", "--trunc", "3"});
  CHECK(ok.status == kExitOk);
  RunConfig config;
  config.subcommand = "verify";
  config.polys = {"x^3+y^4"};
  config.trunc = "3";
  CHECK(run(config).status == kExitOk);
}

TEST_CASE("bench table") {
  auto r = invoke({"bench", "--poly", "x^5+x^2*y^2+y^5", "--poly", "x^3+y^4", "--truncs", "2,4",
                   "--oracle"});
  REQUIRE(r.status == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["rows"].size() == 4);
  for (const auto& row : doc["rows"]) CHECK(row["agree"] == true);
}
