#include <doctest.h>

#include "ahyp/errors.hpp"
#include "ahyp/notation.hpp"
#include "oracles.hpp"

using namespace ahyp;

namespace {

ReductiveAlgebra alg(std::vector<RealFormSpec> factors, int compact = 0, int split = 0) {
  ReductiveAlgebra a{std::move(factors), compact, split};
  a.canonicalize();
  return a;
}

std::size_t error_position(const std::string& s) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

const char* const kCorpus[] = {
    "SU*(14)",
    "su*(14) x T^1",
    "{SL(3,C) x SU(2,1)}/Z3",
    "U(1,1) x SO(3,3)",
    "S(U(4,1) x U(1)) x SU(1,1)",
    "{[SU(4,2)/Z3] x T^1}/Z2",
    "Spin(5,3)",
    "E6^IV",
    "e6(-26)",
    "E7^{VI} x T^1",
    "F4^I",
    "G2(split)",
    "sp(3,R) x sp(2,1) x so*(10)",
    "sl(4,H)",
    "A3(C) x e6(C)",
    "so(7) x so(8) x e8",
    "R^2 x T^3",
    "SL(10,R)",
    "so(2,2)",
    "0",
};

}  // namespace

TEST_CASE("spec examples") {
  CHECK(parse("SU*(14)") == alg({RealFormSpec::su_star(14)}));
  CHECK(parse("{SL(3,C) x SU(2,1)}/Z3") ==
        alg({RealFormSpec::complex(LieType('A', 2)), RealFormSpec::su_pq(2, 1)}));
  CHECK(parse("U(1,1) x SO(3,3)") == alg({RealFormSpec::su_pq(1, 1), RealFormSpec::so_pq(3, 3)}, 1));
  CHECK(parse("sl(5,H)") == parse("su*(10)"));
  CHECK(parse("S(U(2,1) x U(1))") == alg({RealFormSpec::su_pq(2, 1)}, 1));
  CHECK(parse("e6(IV)") == alg({RealFormSpec::exceptional(Family::E6IV)}));
  CHECK(parse("E6^IV") == parse("e6(-26)"));
  CHECK(parse("e6") == alg({RealFormSpec::compact(LieType('E', 6))}));
  CHECK(parse("A2(C)") == parse("sl(3,C)"));
  CHECK(parse("T^2 x R^1") == alg({}, 2, 1));
  CHECK(parse("0").is_zero());
}

TEST_CASE("low-rank normalizations") {
  CHECK(parse("so(2)") == alg({}, 1));
  CHECK(parse("so(1,1)") == alg({}, 0, 1));
  CHECK(parse("so(2,2)") == alg({RealFormSpec::sl_R(2), RealFormSpec::sl_R(2)}));
  CHECK(parse("so(3,1)") == alg({RealFormSpec::complex(LieType('A', 1))}));
  CHECK(parse("so(4)") == alg({RealFormSpec::compact(LieType('A', 1)), RealFormSpec::compact(LieType('A', 1))}));
  CHECK(parse("so(2,1)") == alg({RealFormSpec::so_pq(2, 1)}));
  CHECK(parse("sp(1,R)") == alg({RealFormSpec::sl_R(2)}));
  CHECK(parse_expression("so(2,2)").low_rank_normalized);
  CHECK_FALSE(parse_expression("so(2,1)").low_rank_normalized);
  for (const char* s : {"so(2,2)", "so(3,1)", "so(4)", "sp(1,R)", "so(2)", "so(1,1)"})
    CHECK(rank_profile(parse(s)) == rank_profile(parse_expression(s).normalized));
  CHECK(rank_profile(parse("so(2,2)")) == RankProfile{2, 2});
}

TEST_CASE("group data is discarded and flagged") {
  const auto a = parse_expression("{SL(3,C) x SU(2,1)}/Z3");
  CHECK(a.group_data_discarded);
  CHECK(parse_expression("Spin(5,3)").group_data_discarded);
  CHECK(parse_expression("PSL(3,R)").group_data_discarded);
  CHECK_FALSE(parse_expression("sl(3,R)").group_data_discarded);
  CHECK(parse("Spin(5,3)") == parse("so(5,3)"));
  CHECK(parse("SO(4,4)/{Z2 x Z2}") == parse("so(4,4)"));
}

TEST_CASE("rendering") {
  CHECK(render(alg({RealFormSpec::sl_R(7), RealFormSpec::sl_R(3)})) == "sl(3,R) x sl(7,R)");
  CHECK(render(alg({RealFormSpec::su_pq(2, 1)}, 1)) == "su(2,1) x T^1");
  CHECK(render(RealFormSpec::su_star(14)) == "su*(14)");
  CHECK(render(RealFormSpec::exceptional(Family::E6IV)) == "e6(IV)");
  CHECK(render(RealFormSpec::exceptional(Family::G2Split)) == "g2(split)");
  CHECK(render(RealFormSpec::complex(LieType('A', 2))) == "sl(3,C)");
  CHECK(render(ReductiveAlgebra{}) == "0");
}

TEST_CASE("unicode input") {
  CHECK(parse("SL(3,ℂ) × SU(2,1)") == parse("SL(3,C) x SU(2,1)"));
  CHECK(parse("SL(4,ℝ) ⊕ T¹") == parse("sl(4,R) + T^1"));
  CHECK(parse("SU∗(6)") == parse("su*(6)"));
  CHECK(parse("SO(3,3)/ℤ₂") == parse("so(3,3)"));
}

TEST_CASE("errors carry byte positions") {
  CHECK(error_position("sl(3,R) x gl(2)") == 10);
  CHECK(error_position("sl(3,R) ? su(2)") == 8);
  CHECK(error_position("SL(3,ℂ) × gl(2)") == 13);
  CHECK(error_position("e6(V)") != std::string::npos);
  CHECK(error_position("su(2,1") != std::string::npos);
  CHECK(error_position("") != std::string::npos);
  CHECK_THROWS(parse("su*(7)"));
  CHECK_THROWS(parse("frob(3)"));
  try {
    parse("sl(3,R) x gl(2)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at position 10") != std::string::npos);
  }
}

TEST_CASE("canonical round trip") {
  for (const char* s : kCorpus) {
    CAPTURE(s);
    const auto a = parse(s);
    CHECK(parse(render(a)) == a);
    CHECK(render(parse(render(a))) == render(a));
  }
  for (const auto& f : oracle::database(9)) {
    CAPTURE(f.label());
    const ReductiveAlgebra a{{f}, 0, 0};
    CHECK(parse(render(a)) == a);
  }
}
