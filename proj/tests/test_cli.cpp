#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "json_format.hpp"

using bvtorus::cli::Json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bvtorus::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("bracket command") {
  CHECK(run({"bracket", "z^1*t1", "z^-1*t1", "--rank", "1"}).out == "-2*t1\n");
  CHECK(run({"bracket", "t1", "t1"}).out == "0\n");
  CHECK(run({"bracket", "z^(1,0)*t1", "z^(0,1)", "--rank", "2"}).out == "0\n");
  const Outcome bad = run({"bracket", "z^(1,0", "t1", "--rank", "2"});
  CHECK(bad.code == bvtorus::cli::kExitUsage);
  CHECK(bad.err.find("position") != std::string::npos);
}

TEST_CASE("bv and wedge commands") {
  CHECK(run({"bv", "z^(1,2)*t1^t2", "--rank", "2"}).out == "-2*z1^1*z2^2*t1 + z1^1*z2^2*t2\n");
  CHECK(run({"bv", "z^(1,2)*t1^t2", "--rank", "2", "--divergence"}).out == "-2*z1^1*z2^2*t1 + z1^1*z2^2*t2\n");
  CHECK(run({"wedge", "t2", "t1", "--rank", "2", "--pretty"}).out == "-θ1∧θ2\n");
}

TEST_CASE("json envelope") {
  const Outcome o = run({"bracket", "z^1*t1", "z^-1*t1", "--json"});
  REQUIRE(o.code == 0);
  const Json j = Json::parse(o.out);
  CHECK(j["schema"] == 1);
  CHECK(j["command"] == "bracket");
  CHECK(j["exact"] == true);
  CHECK(j["rank"] == 1);
  CHECK(j["result"]["text"] == "-2*t1");
}

TEST_CASE("roots command") {
  const Json j1 = Json::parse(run({"roots", "--rank", "1", "--json"}).out)["result"];
  CHECK(j1["roots"].size() == 2);
  const Json j2 = Json::parse(run({"roots", "--rank", "2", "--json"}).out)["result"];
  CHECK(j2["roots"].size() == 6);
  CHECK(j2["cartan_dim"] == 2);
  CHECK(j2["homomorphism_ok"] == true);
  CHECK(run({"roots", "--rank", "4"}).code == bvtorus::cli::kExitUsage);
  CHECK_FALSE(run({"roots", "--rank", "2"}).out.empty());
}

TEST_CASE("rep and floer commands") {
  const Json rep = Json::parse(run({"rep", "--alpha", "-3/2", "--beta", "-3/2", "--extract"}).out)["result"];
  CHECK(rep["exists"] == true);
  CHECK(rep["dim"] == 4);
  CHECK(rep["h_spectrum"] == Json::parse("[-3,-1,1,3]"));
  CHECK(rep["basis"] == Json::parse("[0,1,2,3]"));
  const Json none = Json::parse(run({"rep", "--alpha", "1/2", "--beta", "0", "--extract"}).out)["result"];
  CHECK(none["exists"] == false);

  const Json fl = Json::parse(run({"floer", "--n", "3"}).out)["result"];
  CHECK(fl["dim"] == 4);
  CHECK(fl["h_spectrum"] == Json::parse("[-3,-1,1,3]"));
  CHECK(fl["unique_up_to_rescaling"] == true);
  CHECK(fl["casimir"] == "15/2");
  CHECK(fl["matches_density_model"] == true);
  CHECK(run({"floer", "--n", "0"}).code == bvtorus::cli::kExitUsage);
}

TEST_CASE("cocycle-check command") {
  CHECK(run({"cocycle-check", "--spec", "alpha=-1/2,beta=[-1/2],g=0", "--window", "2"}).code == 0);
  CHECK(run({"cocycle-check", "--spec", "alpha=1", "--x", "z^1*t", "--y", "z^-1*t"}).code == 0);
}

TEST_CASE("verify command") {
  const Outcome a = run({"verify", "bv-axioms", "--rank", "2", "--window", "3", "--seed", "7", "--samples", "40"});
  CHECK(a.code == 0);
  const Outcome b = run({"verify", "bv-axioms", "--rank", "2", "--window", "3", "--seed", "7", "--samples", "40"});
  CHECK(a.out == b.out);
  const Json j = Json::parse(run({"verify", "floer", "--max-n", "3", "--json"}).out);
  CHECK(j["result"]["passed"] == true);
  CHECK(run({"verify", "nonsense"}).code == bvtorus::cli::kExitUsage);
  CHECK(run({}).code == bvtorus::cli::kExitUsage);
}
