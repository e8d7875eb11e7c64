#include <doctest.h>

#include <algorithm>

#include "g2branch/simplicity.hpp"

using namespace g2branch;

namespace {

const auto So7 = AlgebraId::So7;
const auto G2 = AlgebraId::G2;

bool has_label(const std::vector<ConditionAtom>& atoms, const std::string& label) {
  return std::any_of(atoms.begin(), atoms.end(), [&](const ConditionAtom& a) { return a.label() == label; });
}

const char* const kGeneric[] = {"so7-borel-generic", "so7-p23-generic", "so7-p12-3-generic",
                                "g2-borel-generic",  "g2-p1-generic",   "g2-p2-generic"};

}  // namespace

TEST_SUITE("simplicity") {
  TEST_CASE("jantzen on the so7 Borel") {
    const auto b = ParabolicSpec::borel(So7);
    CHECK(jantzen_atoms(b).size() == 9);
    const auto yes = jantzen_simple(b, Weight(So7, {Rational(1, 5), Rational(1, 7), Rational(1, 11)}));
    CHECK(yes.certified);
    CHECK(verdict_label(yes) == "certified simple");
    const auto no = jantzen_simple(b, Weight::zero(So7));
    CHECK_FALSE(no.certified);
    CHECK(verdict_label(no) == "not certified");
    CHECK(has_label(no.failing, "λ(H_{e3})+1 ∉ ℤ⁺"));
  }

  TEST_CASE("jantzen on the g2 parabolic with Levi a2") {
    const auto p = ParabolicSpec(G2, {"a2"});
    const auto atoms = jantzen_atoms(p);
    REQUIRE(atoms.size() == 5);
    for (const auto& a : atoms) {
      CHECK(a.set == NumberSet::PositiveInteger);
      CHECK(a.polarity == ConditionAtom::Polarity::Forbidden);
      CHECK(a.shift == pair(rho(G2), a.coroot));
      CHECK(a.coroot.label() != "H_{a2}");
    }
    // u = 1/3, v = 7/6: δ(H_{a2}) = 2
    const Weight d(G2, {Rational(1, 3), Rational(7, 6)});
    CHECK(jantzen_simple(p, d).certified);
    CHECK_THROWS_AS(jantzen_simple(p, Weight(G2, {Rational(1, 3), Rational(1, 3)})), PreconditionError);
  }

  TEST_CASE("jantzen on sl3 accepts both coordinate systems") {
    const Weight w(G2, {Rational(1, 7), Rational(1, 11)});
    const auto b = ParabolicSpec::borel(AlgebraId::Sl3);
    CHECK(jantzen_simple(b, w).certified == jantzen_simple(b, g2_coords_to_eta(w)).certified);
    CHECK_FALSE(jantzen_simple(b, Weight::zero(AlgebraId::Sl3)).certified);
  }

  TEST_CASE("hypothesis examples") {
    CHECK(in_hypothesis("so7-borel-generic", Weight(So7, {Rational(1, 5), Rational(1, 7), Rational(1, 11)})).holds);
    const auto zero = in_hypothesis("so7-borel-generic", Weight::zero(So7));
    CHECK_FALSE(zero.holds);
    CHECK(has_label(zero.failing, "λ(H_{e3}) ∉ ℕ"));
    const Weight lambda(G2, {Rational(1, 3), Rational(7, 6)});
    REQUIRE(pair(lambda, coroot(G2, "a2")) == Rational(2));
    REQUIRE(pair(lambda, coroot(G2, "2a1+a2")) == Rational(1, 3));
    CHECK(in_hypothesis("g2-p2-generic", lambda).holds);
    CHECK_THROWS_AS(hypothesis_set("nonexistent"), std::invalid_argument);
  }

  TEST_CASE("samples satisfy their sets") {
    for (const char* name : kGeneric) {
      for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Weight w = sample_generic(name, seed);
        CHECK_MESSAGE(in_hypothesis(name, w).holds, name << " seed " << seed);
        CHECK(w == sample_generic(name, seed));
      }
    }
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Rational n = pair(sample_generic("so7-p23-generic", seed), coroot(So7, "e2-e3"));
      CHECK(n.is_natural());
      CHECK(n <= Rational(6));
    }
    CHECK_THROWS_AS(sample_generic("so7-borel-simple", 1), std::invalid_argument);
  }

  TEST_CASE("cross implications on samples") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Weight b = sample_generic("so7-borel-generic", seed);
      CHECK(jantzen_simple(ParabolicSpec::borel(So7), b).certified);
      CHECK(in_hypothesis("so7-borel-simple", b).holds);
      CHECK(in_hypothesis("so7-borel-summand", b).holds);

      const Weight p23 = sample_generic("so7-p23-generic", seed);
      CHECK(in_hypothesis("so7-p23-summand", p23).holds);

      const Weight p123 = sample_generic("so7-p12-3-generic", seed);
      CHECK(in_hypothesis("so7-p12-3-summand", p123).holds);
      CHECK(in_hypothesis("so7-p12-3-simple", p123).holds);
    }
  }

  TEST_CASE("p23 generic set does not imply ambient simplicity") {
    const Weight lambda(So7, {Rational(1, 8), Rational(1, 8), Rational(1, 8)});
    CHECK(in_hypothesis("so7-p23-generic", lambda).holds);
    CHECK(in_hypothesis("so7-p23-summand", lambda).holds);
    const auto simple = in_hypothesis("so7-p23-simple", lambda);
    CHECK_FALSE(simple.holds);
    CHECK(has_label(simple.failing, "λ(H_{e1-e2}) ∉ ℕ"));
    CHECK_FALSE(jantzen_simple(ParabolicSpec(So7, {"e2-e3"}), lambda).certified);
    MESSAGE("so7-p23-generic holds but ambient simplicity fails at λ = " << lambda.to_string() << " on "
                                                                         << simple.failing.front().label());
  }

  TEST_CASE("summands are certified simple") {
    for (auto id : all_cases()) {
      const auto& c = branching_case(id);
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Weight lambda = sample_generic(generic_hypothesis(id).name, seed);
        for (const auto& t : enumerate(id, lambda, 12).terms) {
          CHECK(jantzen_simple(c.sub_parabolic, t.delta).certified);
        }
      }
    }
  }

  TEST_CASE("B3-borel summands are anti-dominant") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Weight lambda = sample_generic("so7-borel-generic", seed);
      for (const auto& t : enumerate(CaseId::B3Borel, lambda, 12).terms) {
        for (const auto& r : positive_root_table(G2)) {
          const Rational v = pair(t.delta + rho(G2), coroot(G2, r.label));
          CHECK_FALSE(v.is_positive_integer());
        }
      }
    }
  }

  TEST_CASE("linkage disjointness") {
    const Weight lambda = sample_generic("so7-borel-generic", 3);
    const auto dec = enumerate(CaseId::B3Borel, lambda, 10);
    CHECK(linkage_disjoint(dec));
    CHECK(linkage_disjoint(enumerate(CaseId::B3Borel, lambda, 0)));
    Decomposition twin = enumerate(CaseId::B3Borel, lambda, 0);
    const Weight d = twin.terms[0].delta;
    twin.terms.push_back({dot_action(WeylElementG2::by_name("s1"), d), {0, 0}, 1});
    CHECK_FALSE(linkage_disjoint(twin));
    const Weight g2 = sample_generic("g2-borel-generic", 3);
    CHECK_THROWS_AS(linkage_disjoint(enumerate(CaseId::G2Borel, g2, 2)), std::invalid_argument);
  }
}
