#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "g2branch/character.hpp"
#include "g2branch/simplicity.hpp"
#include "oracles.hpp"

using namespace g2branch;

namespace {

using Entries = std::vector<std::pair<Offset, std::int64_t>>;

bool same_terms(const Decomposition& a, const Decomposition& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].delta != b.terms[i].delta || a.terms[i].offset != b.terms[i].offset ||
        a.terms[i].multiplicity != b.terms[i].multiplicity) {
      return false;
    }
  }
  return true;
}

Weight generic(CaseId id, std::uint64_t seed) { return sample_generic(generic_hypothesis(id).name, seed); }

}  // namespace

TEST_SUITE("char-oracle") {
  TEST_CASE("gl2 tensor examples") {
    CHECK(gl2_tensor_decompose(1, 1) == std::vector<int>{0, 2});
    CHECK(gl2_tensor_decompose(0, 5) == std::vector<int>{5});
    CHECK(gl2_tensor_decompose(2, 3) == std::vector<int>{1, 3, 5});
    CHECK_THROWS_AS(gl2_tensor_decompose(-1, 2), std::invalid_argument);
  }

  TEST_CASE("gl2 tensor rule against weight stripping") {
    for (int i = 0; i <= 15; ++i) {
      for (int n = 0; n <= 15; ++n) {
        const auto ks = gl2_tensor_decompose(i, n);
        CHECK(ks == oracle::brute_force_gl2(i, n));
        CHECK(ks.size() == static_cast<std::size_t>(std::min(i, n) + 1));
        const int dim = std::accumulate(ks.begin(), ks.end(), 0, [](int s, int k) { return s + k + 1; });
        CHECK(dim == (i + 1) * (n + 1));
      }
    }
  }

  TEST_CASE("small Verma characters") {
    const Weight lambda(AlgebraId::So7, {Rational(1, 5), Rational(1, 7), Rational(1, 11)});
    const Weight top = restricted_highest_weight(CaseId::B3Borel, lambda);
    CHECK(module_character(Side::Sub, CaseId::B3Borel, top, 1).nonzero() ==
          Entries{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}});
    CHECK(module_character(Side::Ambient, CaseId::B3Borel, lambda, 1).nonzero() ==
          Entries{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 2}});
    CHECK(module_character(Side::Ambient, CaseId::B3Borel, lambda, 0).nonzero() == Entries{{{0, 0}, 1}});
  }

  TEST_CASE("nilradical offsets") {
    CHECK(ambient_nilradical_offsets(CaseId::B3Borel).size() == 9);
    CHECK(ambient_nilradical_offsets(CaseId::B3P23).size() == 8);
    CHECK(ambient_nilradical_offsets(CaseId::B3P12_3).size() == 7);
    CHECK(sub_nilradical_offsets(CaseId::B3Borel).size() == 6);
    CHECK(sub_nilradical_offsets(CaseId::G2P2).size() == 2);
  }

  TEST_CASE("geometric factors commute") {
    std::mt19937_64 rng(3);
    for (auto id : all_cases()) {
      auto roots = ambient_nilradical_offsets(id);
      const Weight anchor = restricted_highest_weight(id, generic(id, 1));
      FormalCharacter reference(anchor, 10);
      reference.add({0, 0}, 1);
      reference.multiply_string({1, 0}, 3);
      for (const auto& r : roots) reference.multiply_geometric(r);
      for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(roots.begin(), roots.end(), rng);
        FormalCharacter c(anchor, 10);
        c.add({0, 0}, 1);
        for (std::size_t i = 0; i < roots.size(); ++i) {
          c.multiply_geometric(roots[i]);
          if (i == roots.size() / 2) c.multiply_string({1, 0}, 3);
        }
        CHECK(c == reference);
      }
    }
  }

  TEST_CASE("truncation drops deep terms") {
    FormalCharacter c(Weight::zero(AlgebraId::G2), 2);
    c.add({2, 1}, 5);
    CHECK(c.is_zero());
    c.add({1, 1}, 2);
    CHECK(c.at({1, 1}) == 2);
    CHECK(c.at({-1, 0}) == 0);
    CHECK(c.depth_sums() == std::vector<std::int64_t>{0, 0, 2});
  }

  TEST_CASE("hom multiplicity examples") {
    const Weight lambda(AlgebraId::So7, {Rational(1, 5), Rational(1, 7), Rational(1, 11)});
    CHECK(hom_multiplicity(CaseId::B3Borel, lambda, {0, 0}, 12) == 1);
    CHECK(hom_multiplicity(CaseId::B3Borel, lambda, {4, 2}, 12) == 3);
    const Weight g2p2(AlgebraId::G2, {Rational(1, 13), Rational(1, 26)});
    REQUIRE(pair(g2p2, coroot(AlgebraId::G2, "a2")).is_zero());
    CHECK_THROWS_AS(hom_multiplicity(CaseId::G2P2, g2p2, {0, 1}, 12), PreconditionError);
    CHECK_FALSE(hom_grid(CaseId::G2P2, g2p2, 2)[1].has_value());
  }

  TEST_CASE("peel reproduces the closed form") {
    for (auto [id, depth] : {std::pair{CaseId::B3Borel, 4}, std::pair{CaseId::B3P23, 8}}) {
      const Weight lambda = generic(id, 6);
      const auto peeled = peel(module_character(Side::Ambient, id, lambda, depth), id, lambda);
      CHECK(same_terms(peeled, enumerate(id, lambda, depth)));
    }
    for (auto id : all_cases()) {
      const Weight lambda = generic(id, 8);
      const auto peeled = peel(module_character(Side::Ambient, id, lambda, 0), id, lambda);
      REQUIRE(peeled.terms.size() == 1);
      CHECK(peeled.terms[0].multiplicity == 1);
      CHECK(peeled.terms[0].offset == Offset{0, 0});
    }
  }

  TEST_CASE("peel reports failures") {
    FormalCharacter neg(restricted_highest_weight(CaseId::B3Borel, generic(CaseId::B3Borel, 1)), 3);
    neg.add({1, 0}, -2);
    try {
      peel(neg, CaseId::B3Borel, generic(CaseId::B3Borel, 1));
      FAIL("expected an oracle failure");
    } catch (const OracleFailure& e) {
      CHECK(e.report().offset == Offset{1, 0});
      CHECK(e.report().remainder_coefficient == -2);
    }
    const Weight g2p2(AlgebraId::G2, {Rational(1, 13), Rational(1, 26)});
    FormalCharacter bad(g2p2, 3);
    bad.add({0, 1}, 1);
    CHECK_THROWS_AS(peel(bad, CaseId::G2P2, g2p2), OracleFailure);
  }

  TEST_CASE("degree bookkeeping") {
    for (auto id : all_cases()) {
      const Weight lambda = generic(id, 5);
      const int depth = 12;
      const auto ambient = module_character(Side::Ambient, id, lambda, depth).depth_sums();
      std::vector<std::int64_t> total(depth + 1, 0);
      for (const auto& t : enumerate(id, lambda, depth).terms) {
        const int d0 = t.offset.depth();
        const auto sub = module_character(Side::Sub, id, t.delta, depth - d0).depth_sums();
        for (int d = d0; d <= depth; ++d) total[d] += t.multiplicity * sub[d - d0];
      }
      CHECK(total == ambient);
    }
  }
}
