#include <doctest.h>

#include "g2branch/compatibility.hpp"

using namespace g2branch;

namespace {

const auto So7 = AlgebraId::So7;
const auto G2 = AlgebraId::G2;
const auto Sl3 = AlgebraId::Sl3;

}  // namespace

TEST_SUITE("compatibility") {
  TEST_CASE("so7 witness (4,7)") {
    const HyperbolicWitness h{4, 7};
    CHECK(ambient_simple_value(PairId::So7G2, 0, h) == Rational(1));
    CHECK(ambient_simple_value(PairId::So7G2, 1, h) == Rational(2));
    CHECK(ambient_simple_value(PairId::So7G2, 2, h) == Rational(1));
    CHECK(is_witness(ParabolicSpec::borel(So7), PairId::So7G2, h));
  }

  TEST_CASE("other hand-checked witnesses") {
    CHECK(is_witness(ParabolicSpec(So7, {"e2-e3"}), PairId::So7G2, {2, 3}));
    CHECK(is_witness(ParabolicSpec(So7, {"e1-e2", "e3"}), PairId::So7G2, {1, 2}));
    CHECK(is_witness(ParabolicSpec::full(So7), PairId::So7G2, {0, 0}));
    CHECK_FALSE(is_witness(ParabolicSpec::borel(So7), PairId::So7G2, {1, 2}));
  }

  TEST_CASE("e1-e2 and e3 stand or fall together") {
    CHECK_FALSE(is_compatible(ParabolicSpec(So7, {"e1-e2"}), PairId::So7G2).has_value());
    CHECK_FALSE(is_compatible(ParabolicSpec(So7, {"e3"}), PairId::So7G2).has_value());
    CHECK_FALSE(is_compatible(ParabolicSpec(So7, {"e1-e2", "e2-e3"}), PairId::So7G2).has_value());
  }

  TEST_CASE("returned witnesses are valid") {
    for (auto pair : {PairId::So7G2, PairId::G2Sl3}) {
      for (const auto& p : all_standard_parabolics(ambient_algebra(pair))) {
        const auto h = is_compatible(p, pair);
        if (h) CHECK(is_witness(p, pair, *h));
      }
    }
    const auto h = is_compatible(ParabolicSpec(G2, {"a1"}), PairId::G2Sl3);
    REQUIRE(h.has_value());
    CHECK(ambient_simple_value(PairId::G2Sl3, 0, *h).is_zero());
    CHECK(ambient_simple_value(PairId::G2Sl3, 1, *h) > Rational(0));
  }

  TEST_CASE("census") {
    const auto so7 = enumerate_compatible(PairId::So7G2);
    const std::vector<ParabolicSpec> expected = {ParabolicSpec::borel(So7), ParabolicSpec(So7, {"e2-e3"}),
                                                 ParabolicSpec(So7, {"e1-e2", "e3"}), ParabolicSpec::full(So7)};
    CHECK(so7 == expected);
    CHECK(enumerate_compatible(PairId::G2Sl3).size() == 4);
  }

  TEST_CASE("intersection table") {
    CHECK(intersect_parabolic(ParabolicSpec(So7, {"e2-e3"}), PairId::So7G2) == ParabolicSpec(G2, {"a2"}));
    CHECK(intersect_parabolic(ParabolicSpec(G2, {"a1"}), PairId::G2Sl3) == ParabolicSpec::borel(Sl3));
    CHECK(intersect_parabolic(ParabolicSpec(G2, {"a2"}), PairId::G2Sl3) == ParabolicSpec(Sl3, {"n1-n2"}));
    CHECK_THROWS_AS(intersect_parabolic(ParabolicSpec(So7, {"e3"}), PairId::So7G2), std::invalid_argument);
  }

  TEST_CASE("frozen intersections agree with the witness") {
    for (auto pair : {PairId::So7G2, PairId::G2Sl3}) {
      for (const auto& p : enumerate_compatible(pair)) {
        CHECK(intersect_parabolic(p, pair) == intersect_parabolic_direct(p, pair));
      }
    }
  }

  TEST_CASE("pair names") {
    CHECK(parse_pair("so7-g2") == PairId::So7G2);
    CHECK(pair_name(PairId::G2Sl3) == "g2-sl3");
    CHECK_THROWS_AS(parse_pair("sl2-sl2"), std::invalid_argument);
  }
}
