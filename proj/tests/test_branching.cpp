#include <doctest.h>

#include <set>
#include <sstream>

#include "g2branch/character.hpp"
#include "g2branch/simplicity.hpp"

using namespace g2branch;

namespace {

const auto So7 = AlgebraId::So7;
const auto G2 = AlgebraId::G2;

Weight g2w(Rational u, Rational v) { return Weight(G2, {u, v}); }

// δ = Resλ - μ for a chosen μ in g2 coordinates.
Weight below(CaseId id, const Weight& lambda, const Weight& mu) { return restricted_highest_weight(id, lambda) - mu; }

Rational sl3_pair(const Weight& w, const char* label) { return pair(w, coroot(AlgebraId::Sl3, label)); }
Rational g2_pair(const Weight& w, const char* label) { return pair(w, coroot(G2, label)); }

// The G2-p1 formula with the bound on δ(H_{n1-n2}) taken against λ(H_{3a1+2a2}).
std::int64_t g2p1_with_long_root_bound(const Weight& lambda, const Weight& delta) {
  const Weight mu = lambda - delta;
  const Rational x = sl3_pair(mu, "n1-n3");
  const Rational y = sl3_pair(mu, "n2-n3");
  if (!x.is_natural() || !y.is_natural()) return 0;
  if (sl3_pair(delta, "n1-n2") > g2_pair(lambda, "3a1+2a2")) return 0;
  const Rational v = Rational(1) + min(x, y) - max(y - g2_pair(lambda, "a1"), Rational(0));
  return v.to_int64();
}

}  // namespace

TEST_SUITE("closed-form") {
  TEST_CASE("B3-borel examples") {
    const Weight lambda(So7, {Rational(1, 5), Rational(1, 7), Rational(1, 11)});
    CHECK(multiplicity(CaseId::B3Borel, lambda, below(CaseId::B3Borel, lambda, g2w(0, 0))) == 1);
    CHECK(multiplicity(CaseId::B3Borel, lambda, below(CaseId::B3Borel, lambda, g2w(4, 2))) == 3);
    CHECK(multiplicity(CaseId::B3Borel, lambda, below(CaseId::B3Borel, lambda, g2w(0, 1))) == 0);
    CHECK(lattice_point_oracle(CaseId::B3Borel, lambda, below(CaseId::B3Borel, lambda, g2w(4, 2))) == 3);
  }

  TEST_CASE("G2-borel example") {
    const Weight lambda = g2w(Rational(1, 13), Rational(2, 17));
    const Weight mu = eta_to_g2_coords(Weight(AlgebraId::Sl3, {1, 3}));
    CHECK(sl3_pair(mu, "n1-n3") == Rational(1));
    CHECK(sl3_pair(mu, "n2-n3") == Rational(3));
    CHECK(multiplicity(CaseId::G2Borel, lambda, below(CaseId::G2Borel, lambda, mu)) == 2);
    // δ accepted in either coordinate system
    CHECK(multiplicity(CaseId::G2Borel, lambda, g2_coords_to_eta(below(CaseId::G2Borel, lambda, mu))) == 2);
  }

  TEST_CASE("B3-p23 lattice count at the top") {
    const Weight lambda(So7, {Rational(1, 13), Rational(3) + Rational(1, 17), Rational(1, 17)});
    const Weight top = below(CaseId::B3P23, lambda, g2w(0, 0));
    CHECK(g2_pair(top, "a2") == pair(lambda, coroot(So7, "e2-e3")));
    CHECK(lattice_point_oracle(CaseId::B3P23, lambda, top) == 1);
    CHECK(multiplicity(CaseId::B3P23, lambda, top) == 1);
  }

  TEST_CASE("one-dimensional Levi modules") {
    // B3-p12-3 with λ(H_{e1-e2}) = λ(H_{e3}) = 0, and G2-p1 with λ(H_{a1}) = 0
    const Weight b3(So7, {Rational(2, 19), Rational(2, 19), 0});
    const Weight g2 = g2w(Rational(3, 26), Rational(1, 13));
    REQUIRE(g2_pair(g2, "a1").is_zero());
    for (auto [id, lambda] : {std::pair{CaseId::B3P12_3, b3}, std::pair{CaseId::G2P1, g2}}) {
      const auto grid = hom_grid(id, lambda, 12);
      const auto offsets = offsets_up_to(12);
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        const Weight d = delta_at(id, lambda, offsets[i]);
        const auto m = multiplicity(id, lambda, d);
        CHECK(m == lattice_point_oracle(id, lambda, d));
        CHECK(m == grid[i].value_or(0));
      }
    }
  }

  TEST_CASE("dominance gates name the coroot") {
    const Weight bad(So7, {0, Rational(1, 2), 0});
    CHECK_THROWS_AS(check_dominance(CaseId::B3P23, bad), PreconditionError);
    try {
      check_dominance(CaseId::B3P23, bad);
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("H_{e2-e3}") != std::string::npos);
    }
    CHECK_THROWS_AS(multiplicity(CaseId::G2P2, g2w(0, Rational(1, 3)), g2w(0, 0)), PreconditionError);
    CHECK_NOTHROW(check_dominance(CaseId::B3Borel, bad));
  }

  TEST_CASE("depth 0 gives the top term only") {
    for (auto id : all_cases()) {
      const Weight lambda = sample_generic(generic_hypothesis(id).name, 9);
      const auto dec = enumerate(id, lambda, 0);
      REQUIRE(dec.terms.size() == 1);
      CHECK(dec.terms[0].multiplicity == 1);
      CHECK(dec.terms[0].delta == to_sub_coords(id, restricted_highest_weight(id, lambda)));
    }
  }

  TEST_CASE("B3-borel depth 2") {
    const Weight lambda(So7, {Rational(1, 5), Rational(1, 7), Rational(1, 11)});
    const auto dec = enumerate(CaseId::B3Borel, lambda, 2);
    const std::vector<std::pair<Offset, std::int64_t>> expected = {
        {{0, 0}, 1}, {{1, 0}, 1}, {{1, 1}, 1}, {{2, 0}, 1}};
    REQUIRE(dec.terms.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(dec.terms[i].offset == expected[i].first);
      CHECK(dec.terms[i].multiplicity == expected[i].second);
    }
  }

  TEST_CASE("closed form equals the lattice count on samples") {
    const auto offsets = offsets_up_to(12);
    for (auto id : all_cases()) {
      for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const Weight lambda = sample_generic(generic_hypothesis(id).name, seed);
        for (const auto& o : offsets) {
          const Weight d = delta_at(id, lambda, o);
          REQUIRE_MESSAGE(multiplicity(id, lambda, d) == lattice_point_oracle(id, lambda, d),
                          case_name(id) << " seed " << seed << " offset " << o.p << "," << o.q);
        }
      }
    }
  }

  TEST_CASE("parallel and serial enumeration agree") {
    for (auto id : all_cases()) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Weight lambda = sample_generic(generic_hypothesis(id).name, seed);
        const auto a = enumerate(id, lambda, 12);
        const auto b = enumerate_serial(id, lambda, 12);
        REQUIRE(a.terms.size() == b.terms.size());
        for (std::size_t i = 0; i < a.terms.size(); ++i) {
          CHECK(a.terms[i].delta == b.terms[i].delta);
          CHECK(a.terms[i].offset == b.terms[i].offset);
          CHECK(a.terms[i].multiplicity == b.terms[i].multiplicity);
        }
      }
    }
  }

  TEST_CASE("terms are ordered, positive and distinct") {
    for (auto id : all_cases()) {
      const Weight lambda = sample_generic(generic_hypothesis(id).name, 4);
      const auto dec = enumerate(id, lambda, 12);
      std::set<Weight> seen;
      for (std::size_t i = 0; i < dec.terms.size(); ++i) {
        CHECK(dec.terms[i].multiplicity >= 1);
        CHECK(seen.insert(dec.terms[i].delta).second);
        if (i > 0) CHECK(offset_order(dec.terms[i - 1].offset, dec.terms[i].offset) < 0);
      }
    }
  }

  TEST_CASE("nothing below a negative component") {
    for (auto id : all_cases()) {
      const Weight lambda = sample_generic(generic_hypothesis(id).name, 2);
      for (int p = -12; p <= 12; ++p) {
        for (int q = -12; q <= 12; ++q) {
          if (p >= 0 && q >= 0) continue;
          const Weight d = delta_at(id, lambda, {p, q});
          CHECK(multiplicity(id, lambda, d) == 0);
        }
      }
    }
  }

  TEST_CASE("G2-p1 bound uses the short root 3a1+a2") {
    // Search for a sampled point where bounding by λ(H_{3a1+2a2}) miscounts.
    bool found = false;
    for (std::uint64_t seed = 1; seed <= 50 && !found; ++seed) {
      const Weight lambda = sample_generic("g2-p1-generic", seed);
      const auto grid = hom_grid(CaseId::G2P1, lambda, 12);
      const auto offsets = offsets_up_to(12);
      for (std::size_t i = 0; i < offsets.size(); ++i) {
        const Weight d = delta_at(CaseId::G2P1, lambda, offsets[i]);
        const std::int64_t truth = grid[i].value_or(0);
        CHECK(multiplicity(CaseId::G2P1, lambda, d) == truth);
        if (g2p1_with_long_root_bound(lambda, d) != truth) {
          found = true;
          MESSAGE("λ = " << lambda.to_string() << ", δ = " << d.to_string() << ": long-root bound gives "
                         << g2p1_with_long_root_bound(lambda, d) << ", Hom count is " << truth);
        }
      }
    }
    CHECK(found);
  }
}
