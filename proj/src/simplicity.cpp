#include "g2branch/simplicity.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace g2branch {

namespace {

using A = ConditionAtom;
using N = NumberSet;

Coroot H(std::string_view root) {
  // so7 labels use e, g2 labels use a; the two never overlap.
  return coroot(root.find('e') != std::string_view::npos ? AlgebraId::So7 : AlgebraId::G2, root);
}

std::vector<HypothesisSet> build_sets() {
  const auto So7 = AlgebraId::So7;
  const auto G2 = AlgebraId::G2;

  // a-b+2c, b-c, a+2b-c, 2a+b+c, a+c, a+b
  const Coroot x1 = H("e1-e2") + H("e3");
  const Coroot x2 = H("e2-e3");
  const Coroot x3 = H("e1-e3") + H("e2");
  const Coroot x4 = H("e1") + H("e2+e3");
  const Coroot x5 = H("e1+e3");
  const Coroot x6 = H("e1+e2");

  // 2a+4, 2b+2, 2c, a-b, b-c, a-c+1, a+b+3, b+c+1, a+c+2  (∉ ℕ)
  const A s1 = A::not_in(H("e1"), N::Natural, 4);
  const A s2 = A::not_in(H("e2"), N::Natural, 2);
  const A s3 = A::not_in(H("e3"), N::Natural);
  const A s4 = A::not_in(H("e1-e2"), N::Natural);
  const A s5 = A::not_in(H("e2-e3"), N::Natural);
  const A s6 = A::not_in(H("e1-e3"), N::Natural, 1);
  const A s7 = A::not_in(H("e1+e2"), N::Natural, 3);
  const A s8 = A::not_in(H("e2+e3"), N::Natural, 1);
  const A s9 = A::not_in(H("e1+e3"), N::Natural, 2);

  const A p23 = A::in(H("e2-e3"), N::Natural);
  const A p12 = A::in(H("e1-e2"), N::Natural);
  const A p3 = A::in(H("e3"), N::Natural);
  auto z = [](const Coroot& h) { return A::not_in(h, N::Integer); };

  std::vector<HypothesisSet> out;
  out.push_back({"so7-borel-generic", So7,
                 {s1, s2, s3, s4, s6, s8, z(x6), z(x5), z(x2), z(x1), z(x3), z(x4)}});
  out.push_back({"so7-p23-generic", So7, {p23, s1, s2, z(x4)}});
  out.push_back({"so7-p12-3-generic", So7, {p12, p3, z(x6), z(x4)}});
  out.push_back({"g2-borel-generic", G2,
                 {A::not_in(H("a1"), N::Natural), A::not_in(H("a1+a2"), N::Natural, 3),
                  A::not_in(H("2a1+a2"), N::Natural, 4), z(H("a2")), z(H("3a1+a2")), z(H("3a1+2a2"))}});
  out.push_back({"g2-p1-generic", G2,
                 {A::in(H("a1"), N::Natural), A::not_in(H("2a1+a2"), N::Natural, 4), z(H("3a1+2a2"))}});
  out.push_back({"g2-p2-generic", G2, {A::in(H("a2"), N::Natural), z(H("2a1+a2"))}});

  out.push_back({"so7-borel-summand", So7, {z(x1), z(x2), z(x3), z(x4), z(x5), z(x6)}});
  out.push_back({"so7-p23-summand", So7, {p23, z(x1), z(x4), z(x3), z(x6), z(x5)}});
  out.push_back({"so7-p12-3-summand", So7, {p12, p3, z(x2), z(x4), z(x3), z(x6), z(x5)}});

  out.push_back({"so7-borel-simple", So7, {s1, s2, s3, s4, s5, s6, s7, s8, s9}});
  out.push_back({"so7-p23-simple", So7, {p23, s1, s2, s3, s4, s6, s7, s8, s9}});
  out.push_back({"so7-p12-3-simple", So7, {p12, p3, s1, s2, s5, s6, s7, s8, s9}});
  return out;
}

constexpr std::array<long, 10> kPrimes = {13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  // k/p with p a prime not used before in this draw and |k| <= 40.
  Rational fraction() {
    const std::size_t remaining = kPrimes.size() - used_;
    const std::size_t pick = used_ + static_cast<std::size_t>(rng_() % remaining);
    std::swap(primes_[used_], primes_[pick]);
    const long p = primes_[used_++];
    const long k = static_cast<long>(rng_() % 81) - 40;
    return Rational(k, p);
  }

  Rational natural() { return Rational(static_cast<long>(rng_() % 7)); }

  void reset() { used_ = 0; }

 private:
  std::mt19937_64 rng_;
  std::array<long, 10> primes_ = kPrimes;
  std::size_t used_ = 0;
};

Weight draw(std::string_view name, Sampler& s) {
  const auto So7 = AlgebraId::So7;
  const auto G2 = AlgebraId::G2;
  const Rational half(1, 2);
  if (name == "so7-borel-generic") {
    const Rational a = s.fraction(), b = s.fraction(), c = s.fraction();
    return Weight(So7, {a, b, c});
  }
  if (name == "so7-p23-generic") {
    const Rational c = s.fraction(), a = s.fraction();
    return Weight(So7, {a, c + s.natural(), c});
  }
  if (name == "so7-p12-3-generic") {
    const Rational b = s.fraction();
    const Rational a = b + s.natural();
    return Weight(So7, {a, b, s.natural() * half});
  }
  if (name == "g2-borel-generic") {
    const Rational u = s.fraction(), v = s.fraction();
    return Weight(G2, {u, v});
  }
  if (name == "g2-p1-generic") {
    const Rational v = s.fraction();
    return Weight(G2, {(s.natural() + Rational(3) * v) * half, v});
  }
  if (name == "g2-p2-generic") {
    const Rational u = s.fraction();
    return Weight(G2, {u, (s.natural() + u) * half});
  }
  throw std::invalid_argument("no sampler for hypothesis set '" + std::string(name) + "'");
}

}  // namespace

std::span<const HypothesisSet> hypothesis_sets() {
  static const std::vector<HypothesisSet> sets = build_sets();
  return sets;
}

const HypothesisSet& hypothesis_set(std::string_view name) {
  for (const auto& set : hypothesis_sets()) {
    if (set.name == name) return set;
  }
  throw std::invalid_argument("unknown hypothesis set '" + std::string(name) + "'");
}

const HypothesisSet& generic_hypothesis(CaseId id) {
  switch (id) {
    case CaseId::B3Borel: return hypothesis_set("so7-borel-generic");
    case CaseId::B3P23: return hypothesis_set("so7-p23-generic");
    case CaseId::B3P12_3: return hypothesis_set("so7-p12-3-generic");
    case CaseId::G2Borel: return hypothesis_set("g2-borel-generic");
    case CaseId::G2P1: return hypothesis_set("g2-p1-generic");
    case CaseId::G2P2: return hypothesis_set("g2-p2-generic");
  }
  throw std::logic_error("unknown CaseId");
}

HypothesisResult in_hypothesis(const HypothesisSet& set, const Weight& w) {
  if (w.algebra() != set.algebra) {
    throw std::invalid_argument("hypothesis set " + set.name + " expects a weight of " +
                                std::string(algebra_name(set.algebra)));
  }
  auto failing = failing_atoms(set.atoms, w);
  return {failing.empty(), std::move(failing)};
}

HypothesisResult in_hypothesis(std::string_view name, const Weight& w) { return in_hypothesis(hypothesis_set(name), w); }

std::vector<ConditionAtom> jantzen_atoms(const ParabolicSpec& p) {
  const auto table = positive_root_table(p.algebra());
  const Weight r = rho(p.algebra());
  std::vector<ConditionAtom> out;
  for (auto index : nilradical_roots(p)) {
    const Coroot h = coroot(p.algebra(), table[index].label);
    out.push_back(A::not_in(h, N::PositiveInteger, pair(r, h)));
  }
  return out;
}

SimplicityVerdict jantzen_simple(const ParabolicSpec& p, const Weight& w_in) {
  Weight w = w_in;
  if (p.algebra() == AlgebraId::Sl3 && w.algebra() == AlgebraId::G2) w = g2_coords_to_eta(w);
  if (w.algebra() != p.algebra()) {
    throw std::invalid_argument("jantzen_simple: weight of " + std::string(algebra_name(w.algebra())) +
                                " for a parabolic of " + std::string(algebra_name(p.algebra())));
  }
  const auto table = positive_root_table(p.algebra());
  std::vector<ConditionAtom> dominance;
  for (auto s : p.simple_indices()) dominance.push_back(A::in(coroot(p.algebra(), table[s].label), N::Natural));
  require_all(dominance, w, "jantzen_simple " + p.label());
  auto failing = failing_atoms(jantzen_atoms(p), w);
  return {failing.empty(), std::move(failing)};
}

std::string_view verdict_label(const SimplicityVerdict& v) { return v.certified ? "certified simple" : "not certified"; }

Weight sample_generic(std::string_view name, std::uint64_t seed) {
  const HypothesisSet& set = hypothesis_set(name);
  Sampler sampler(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    sampler.reset();
    Weight w = draw(name, sampler);
    if (in_hypothesis(set, w).holds) return w;
  }
  throw std::runtime_error("sample_generic(" + std::string(name) + ", " + std::to_string(seed) +
                           "): no admissible weight after 256 draws");
}

bool linkage_disjoint(const Decomposition& dec) {
  if (branching_case(dec.case_id).pair != PairId::So7G2) {
    throw std::invalid_argument("linkage_disjoint is defined for g2-target decompositions only");
  }
  for (std::size_t i = 0; i < dec.terms.size(); ++i) {
    for (std::size_t j = i + 1; j < dec.terms.size(); ++j) {
      if (same_linkage_class(dec.terms[i].delta, dec.terms[j].delta)) return false;
    }
  }
  return true;
}

}  // namespace g2branch
