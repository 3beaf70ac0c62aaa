#include <doctest.h>

#include "ahyp/decision.hpp"
#include "ahyp/errors.hpp"
#include "ahyp/notation.hpp"
#include "oracles.hpp"

using namespace ahyp;

namespace {

RankProfile profile(const std::string& expr) { return rank_profile(parse(expr)); }

}  // namespace

TEST_CASE("verdict names round trip") {
  for (auto v : {Verdict::NoInfiniteDiscontinuous, Verdict::NoNonVirtuallyAbelian,
                 Verdict::AdmitsNonVirtuallyAbelian, Verdict::Undetermined})
    CHECK(parse_verdict(verdict_name(v)) == v);
  CHECK_FALSE(parse_verdict("Maybe").has_value());
}

TEST_CASE("undetermined examples") {
  const auto d = decide(profile("sl(10,R)"), profile("so(5,5)"));
  CHECK(d.verdict == Verdict::Undetermined);
  CHECK(d.condition().empty());
  REQUIRE(d.trace.size() == 3);
  CHECK(d.trace[0] == TraceEntry{"A", 9, "==", 5, false});
  CHECK(d.trace[1] == TraceEntry{"B", 5, "==", 4, false});
  CHECK(d.trace[2] == TraceEntry{"C", 5, ">", 5, false});

  const auto d2 = decide(profile("sl(10,R)"), profile("sl(3,R) x sl(7,R)"));
  CHECK(d2.verdict == Verdict::Undetermined);
}

TEST_CASE("conditions short-circuit in order") {
  const auto a = decide({2, 1}, {2, 1});
  CHECK(a.verdict == Verdict::NoInfiniteDiscontinuous);
  CHECK(a.trace.size() == 1);
  CHECK(a.condition() == "A");

  const auto b = decide({3, 2}, {2, 2});
  CHECK(b.verdict == Verdict::NoNonVirtuallyAbelian);
  CHECK(b.trace.size() == 2);

  const auto c = decide({4, 3}, {2, 1});
  CHECK(c.verdict == Verdict::AdmitsNonVirtuallyAbelian);
  CHECK(c.condition() == "C");
  CHECK(c.trace.size() == 3);
}

TEST_CASE("decision invariants over small profiles") {
  for (int gr = 0; gr <= 6; ++gr)
    for (int ga = 0; ga <= gr; ++ga)
      for (int hr = 0; hr <= gr; ++hr)
        for (int ha = 0; ha <= std::min(hr, ga); ++ha) {
          const RankProfile g{gr, ga}, h{hr, ha};
          const auto d = decide(g, h);
          REQUIRE_FALSE(d.trace.empty());
          for (std::size_t i = 0; i + 1 < d.trace.size(); ++i) CHECK_FALSE(d.trace[i].holds);
          CHECK(d.trace.back().holds == (d.verdict != Verdict::Undetermined));
          if (gr == hr) CHECK(d.verdict == Verdict::NoInfiniteDiscontinuous);
          if (ha == ga) CHECK(d.verdict != Verdict::AdmitsNonVirtuallyAbelian);
          if (hr == 0 && gr > 0 && ga > 0) CHECK(d.verdict == Verdict::AdmitsNonVirtuallyAbelian);
          CHECK_FALSE(embed_obstruction(g, h).obstructed);
        }
}

TEST_CASE("subgroup pair precondition") {
  CHECK_THROWS_AS(decide({2, 1}, {2, 2}), NotASubgroupPair);
  CHECK_THROWS_AS(decide({2, 1}, {3, 1}), NotASubgroupPair);
}

TEST_CASE("embedding obstruction") {
  const auto e6iv = profile("e6(IV)");
  CHECK(e6iv == RankProfile{2, 1});
  const auto g2 = embed_obstruction(e6iv, profile("g2(split)"));
  CHECK(g2.obstructed);
  REQUIRE(g2.witnesses.size() == 1);
  for (const char* h : {"so(2,3)", "so(2,5)", "so(2,7)", "sp(2,R)"})
    CHECK(embed_obstruction(e6iv, profile(h)).obstructed);
  const auto ok = embed_obstruction({5, 3}, {2, 2});
  CHECK_FALSE(ok.obstructed);
  CHECK(ok.witnesses.empty());
  for (int r = 0; r <= 4; ++r)
    for (int a = 0; a <= r; ++a) {
      const auto o = embed_obstruction({2, 1}, {r, a});
      CHECK(o.obstructed == !o.witnesses.empty());
    }
}

TEST_CASE("rank-one restriction for a-hyperbolic rank one groups") {
  const auto db = oracle::database(9);
  for (const char* g_expr : {"e6(IV)", "so*(6)", "sl(3,R)"}) {
    const auto g = profile(g_expr);
    CHECK(g.a_hyperbolic_rank == 1);
    for (const auto& f : db) {
      const auto h = rank_profile(f);
      if (h.real_rank == 0 || h.a_hyperbolic_rank != 1 || h.real_rank > g.real_rank) continue;
      CAPTURE(f.label());
      const auto v = decide(g, h).verdict;
      CHECK((v == Verdict::NoInfiniteDiscontinuous || v == Verdict::NoNonVirtuallyAbelian));
    }
  }
}

TEST_CASE("json shape") {
  const auto j = to_json(decide({9, 5}, {5, 4}));
  CHECK(j["verdict"] == "Undetermined");
  REQUIRE(j["trace"].size() == 3);
  CHECK(j["trace"][0]["condition"] == "A");
  CHECK(j["trace"][0]["lhs"] == 9);
  CHECK(j["trace"][0]["op"] == "==");
  CHECK(j["trace"][0]["rhs"] == 5);
  const auto o = to_json(embed_obstruction({2, 1}, {2, 2}));
  CHECK(o["obstructed"] == true);
  CHECK(o["witnesses"].size() == 1);
}
