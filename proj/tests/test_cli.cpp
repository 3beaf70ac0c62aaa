#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "ahyp/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ahyp::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = call(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

bool has(const std::string& text, const std::string& what) { return text.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("rank") {
  const auto r = call({"rank", "su*(14) x T^1"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "real rank: 6"));
  CHECK(has(r.out, "a-hyperbolic rank: 3"));
  const auto j = json_of({"rank", "su*(14) x T^1"});
  CHECK(j["real_rank"] == 6);
  CHECK(j["a_hyperbolic_rank"] == 3);
  CHECK(j["compact_center_dim"] == 1);
  CHECK(j["algebra"] == "su*(14) x T^1");
}

TEST_CASE("decide") {
  const auto r = call({"decide", "sl(10,R)", "so(5,5)"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "9 == 5 fails"));
  CHECK(has(r.out, "5 == 4 fails"));
  CHECK(has(r.out, "5 > 5 fails"));
  CHECK(has(r.out, "verdict: Undetermined"));
  const auto j = json_of({"decide", "sl(10,R)", "so(5,5)"});
  CHECK(j["verdict"] == "Undetermined");
  CHECK(j["trace"].size() == 3);
  CHECK(j["g"]["profile"]["real_rank"] == 9);
  CHECK(j["h"]["profile"]["a_hyperbolic_rank"] == 4);

  const auto p = call({"decide", "SL(4k+2l,R)", "SO(2k,2k) x Sp(l,R)", "--params", "k=2,l=2"});
  CHECK(p.code == 0);
  CHECK(has(p.out, "verdict: NoNonVirtuallyAbelian"));

  const auto bad = call({"decide", "e6(IV)", "g2(split)"});
  CHECK(bad.code == 2);
  CHECK(has(bad.err, "not a subgroup pair"));
}

TEST_CASE("embed-check") {
  const auto r = call({"embed-check", "E6^IV", "Sp(2,R)"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "obstructed"));
  const auto j = json_of({"embed-check", "E6^IV", "Sp(2,R)"});
  CHECK(j["obstructed"] == true);
  CHECK(json_of({"embed-check", "sl(6,R)", "sl(3,R)"})["obstructed"] == false);
}

TEST_CASE("satake-show and orbits") {
  const auto r = call({"satake-show", "e6(IV)"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "real rank: 2"));
  const auto j = json_of({"satake-show", "e6(IV)"});
  CHECK(j["black"] == nlohmann::json({2, 3, 4, 6}));
  CHECK(j["real_rank"] == 2);

  const auto o = call({"orbits", "e6(IV)"});
  CHECK(o.code == 0);
  CHECK(o.out == "(1,0,0,0,1,0)\n");
  const auto oj = json_of({"orbits", "e6(IV)"});
  CHECK(oj["generators"] == nlohmann::json({{1, 0, 0, 0, 1, 0}}));
  CHECK(oj["a_hyperbolic_rank"] == 1);

  CHECK(call({"orbits", "sl(3,R) x sl(2,R)"}).code == 2);
}

TEST_CASE("harness commands") {
  CHECK(call({"table1", "--kmax", "6"}).code == 0);
  CHECK(json_of({"table1", "--kmax", "3"})["passed"] == true);
  CHECK(call({"anomaly-scan", "--rank", "9"}).code == 0);
  CHECK(json_of({"anomaly-scan", "--rank", "9"})["forms"].size() == 16);
  // The 3-symmetric table contains entries the rank conditions contradict.
  const auto t2 = call({"table2", "--bound", "4"});
  CHECK(t2.code == 1);
  CHECK(has(t2.out, "FAIL"));
}

TEST_CASE("text and json agree") {
  for (const char* expr : {"sl(10,R)", "so(5,5) x T^2", "e6(I) x R^1", "U(1,1) x SO(3,3)"}) {
    CAPTURE(expr);
    const auto text = call({"rank", expr}).out;
    const auto j = json_of({"rank", expr});
    CHECK(has(text, "real rank: " + std::to_string(j["real_rank"].get<int>())));
    CHECK(has(text, "a-hyperbolic rank: " + std::to_string(j["a_hyperbolic_rank"].get<int>())));
  }
}

TEST_CASE("bad input exits with status 2") {
  const auto r = call({"rank", "sl(3,R) x gl(2)"});
  CHECK(r.code == 2);
  CHECK(has(r.err, "position 10"));
  CHECK(has(r.err, "\n            ^"));
  CHECK(call({"rank", "su*(7)"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"table1", "--kmax", "0"}).code == 2);
  CHECK(call({"rank", "k", "--params", "k"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}
