#include "g2branch/branching.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <exception>
#include <stdexcept>

namespace g2branch {

namespace {

constexpr std::array<CaseId, 6> kCases = {CaseId::B3Borel, CaseId::B3P23,   CaseId::B3P12_3,
                                          CaseId::G2Borel, CaseId::G2P1, CaseId::G2P2};

Rational so7(const Weight& w, std::string_view root) { return pair(w, coroot(AlgebraId::So7, root)); }
Rational g2(const Weight& w, std::string_view root) { return pair(w, coroot(AlgebraId::G2, root)); }
Rational sl3(const Weight& w, std::string_view root) { return pair(w, coroot(AlgebraId::Sl3, root)); }

std::vector<BranchingCase> build_cases() {
  const auto So7 = AlgebraId::So7;
  const auto G2 = AlgebraId::G2;
  const auto Sl3 = AlgebraId::Sl3;
  const std::vector<Offset> three = {{1, 0}, {1, 1}, {2, 1}};
  const std::vector<Offset> two = {{1, 1}, {2, 1}};
  using A = ConditionAtom;
  using N = NumberSet;
  std::vector<BranchingCase> out;
  out.push_back({CaseId::B3Borel, PairId::So7G2, ParabolicSpec::borel(So7), ParabolicSpec::borel(G2), three, {}});
  out.push_back({CaseId::B3P23, PairId::So7G2, ParabolicSpec(So7, {"e2-e3"}), ParabolicSpec(G2, {"a2"}), three,
                 {A::in(coroot(So7, "e2-e3"), N::Natural)}});
  out.push_back({CaseId::B3P12_3, PairId::So7G2, ParabolicSpec(So7, {"e1-e2", "e3"}), ParabolicSpec(G2, {"a1"}), two,
                 {A::in(coroot(So7, "e1-e2"), N::Natural), A::in(coroot(So7, "e3"), N::Natural)}});
  out.push_back({CaseId::G2Borel, PairId::G2Sl3, ParabolicSpec::borel(G2), ParabolicSpec::borel(Sl3), three, {}});
  out.push_back({CaseId::G2P1, PairId::G2Sl3, ParabolicSpec(G2, {"a1"}), ParabolicSpec::borel(Sl3), two,
                 {A::in(coroot(G2, "a1"), N::Natural)}});
  out.push_back({CaseId::G2P2, PairId::G2Sl3, ParabolicSpec(G2, {"a2"}), ParabolicSpec(Sl3, {"n1-n2"}), three,
                 {A::in(coroot(G2, "a2"), N::Natural)}});
  return out;
}

std::int64_t checked_natural(const Rational& value, CaseId id) {
  if (!value.is_natural()) {
    throw std::logic_error(std::string(case_name(id)) + ": gated formula produced " + value.to_string());
  }
  return value.to_int64();
}

Weight as_g2(const Weight& delta) {
  if (delta.algebra() == AlgebraId::Sl3) return eta_to_g2_coords(delta);
  if (delta.algebra() != AlgebraId::G2) throw std::invalid_argument("δ must be a g2 or sl3 weight");
  return delta;
}

// Value of the closed form, before dominance of λ is checked.
std::int64_t closed_form(CaseId id, const Weight& lambda, const Weight& delta) {
  const Weight res = restricted_highest_weight(id, lambda);
  const Weight mu = res - delta;
  const Weight sigma = res + delta;
  switch (id) {
    case CaseId::B3Borel: {
      const Rational x = g2(mu, "3a1+a2");
      const Rational y = g2(mu, "3a1+2a2");
      if (!x.is_natural() || !y.is_natural()) return 0;
      return 1 + min(x, y).to_int64();
    }
    case CaseId::B3P23: {
      if (!g2(delta, "a2").is_natural() || !g2(mu, "3a1+a2").is_natural() || !g2(mu, "3a1+2a2").is_natural()) {
        return 0;
      }
      const Rational A = min(g2(mu, "2a1+a2"), g2(sigma, "a2"));
      return checked_natural(Rational(1) + (A - g2(mu, "a2").abs()) / Rational(2), id);
    }
    case CaseId::B3P12_3: {
      const Rational m32 = g2(mu, "3a1+2a2");
      if (!m32.is_natural() || !g2(mu, "3a1+a2").is_integer()) return 0;
      const Rational d1 = g2(delta, "a1");
      const Rational sum = so7(lambda, "e1-e2") + so7(lambda, "e3");
      const Rational diff = so7(lambda, "e1-e2") - so7(lambda, "e3");
      const Rational B = min(m32 + d1, sum);
      const Rational C = max((m32 - d1).abs(), diff.abs());
      if (C > B) return 0;
      return checked_natural(Rational(1) + (B - C) / Rational(2), id);
    }
    case CaseId::G2Borel: {
      const Rational x = sl3(mu, "n1-n3");
      const Rational y = sl3(mu, "n2-n3");
      if (!x.is_natural() || !y.is_natural()) return 0;
      return 1 + min(x, y).to_int64();
    }
    case CaseId::G2P1: {
      const Rational x = sl3(mu, "n1-n3");
      const Rational y = sl3(mu, "n2-n3");
      if (!x.is_natural() || !y.is_natural()) return 0;
      // The bound on δ(H_{n1-n2}) is λ(H_{3a1+a2}); see the G2P1 gate test.
      if (sl3(delta, "n1-n2") > g2(lambda, "3a1+a2")) return 0;
      const Rational X = min(x, y);
      const Rational Y = max(y - g2(lambda, "a1"), Rational(0));
      return checked_natural(Rational(1) + X - Y, id);
    }
    case CaseId::G2P2: {
      if (!sl3(delta, "n1-n2").is_natural() || !sl3(mu, "n1-n3").is_natural() || !sl3(mu, "n2-n3").is_natural()) {
        return 0;
      }
      const Rational Z = min(sl3(mu, "n1-n3") + sl3(mu, "n2-n3"), sl3(sigma, "n1-n2"));
      return checked_natural(Rational(1) + (Z - sl3(mu, "n1-n2").abs()) / Rational(2), id);
    }
  }
  throw std::logic_error("unknown CaseId");
}

// Clebsch-Gordan membership: F(k) ⊂ F(i) ⊗ F(n).
bool cg_contains(std::int64_t i, std::int64_t n, std::int64_t k) {
  return k >= std::abs(n - i) && k <= n + i && (n + i - k) % 2 == 0;
}

// Number of i = P - 2j >= 0 with F(k) ⊂ F(i) ⊗ F(n): the doublet/singlet quotient
// under an sl2 Levi whose string is F(n).
std::int64_t doublet_singlet_count(std::int64_t P, std::int64_t n, std::int64_t k) {
  std::int64_t count = 0;
  for (std::int64_t j = 0; 2 * j <= P; ++j) {
    if (cg_contains(P - 2 * j, n, k)) ++count;
  }
  return count;
}

Decomposition collect(CaseId id, const Weight& lambda, int depth, const std::vector<Offset>& offsets,
                      const std::vector<std::int64_t>& mult) {
  Decomposition dec{id, lambda, depth, {}};
  for (std::size_t i = 0; i < offsets.size(); ++i) {
    if (mult[i] > 0) dec.terms.push_back({to_sub_coords(id, delta_at(id, lambda, offsets[i])), offsets[i], mult[i]});
  }
  return dec;
}

}  // namespace

std::string_view case_name(CaseId id) {
  switch (id) {
    case CaseId::B3Borel: return "B3-borel";
    case CaseId::B3P23: return "B3-p23";
    case CaseId::B3P12_3: return "B3-p12-3";
    case CaseId::G2Borel: return "G2-borel";
    case CaseId::G2P1: return "G2-p1";
    case CaseId::G2P2: return "G2-p2";
  }
  throw std::logic_error("unknown CaseId");
}

CaseId parse_case(std::string_view name) {
  for (auto id : kCases) {
    if (case_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown branching case '" + std::string(name) + "'");
}

std::span<const CaseId> all_cases() { return kCases; }

const BranchingCase& branching_case(CaseId id) {
  static const std::vector<BranchingCase> cases = build_cases();
  return cases.at(static_cast<std::size_t>(id));
}

CaseId case_for(PairId pair, const ParabolicSpec& ambient) {
  if (ambient.algebra() != ambient_algebra(pair)) {
    throw std::invalid_argument("parabolic " + ambient.label() + " does not belong to the ambient algebra of " +
                                std::string(pair_name(pair)));
  }
  for (auto id : kCases) {
    const auto& c = branching_case(id);
    if (c.pair == pair && c.ambient_parabolic == ambient) return id;
  }
  if (ambient.is_full()) {
    throw std::invalid_argument("the full parabolic gives a finite-dimensional module; no branching case");
  }
  throw std::invalid_argument("parabolic " + ambient.label() + " is not compatible with " + std::string(pair_name(pair)));
}

void check_dominance(CaseId id, const Weight& lambda) {
  const auto& c = branching_case(id);
  if (lambda.algebra() != ambient_algebra(c.pair)) {
    throw std::invalid_argument(std::string(case_name(id)) + " expects λ in " +
                                std::string(algebra_name(ambient_algebra(c.pair))) + " coordinates");
  }
  require_all(c.dominance, lambda, case_name(id));
}

Weight restricted_highest_weight(CaseId id, const Weight& lambda) {
  return branching_case(id).pair == PairId::So7G2 ? restrict_so7_to_g2(lambda) : lambda;
}

Weight delta_at(CaseId id, const Weight& lambda, Offset o) {
  return restricted_highest_weight(id, lambda) - Weight(AlgebraId::G2, {Rational(o.p), Rational(o.q)});
}

Weight to_sub_coords(CaseId id, const Weight& delta_g2) {
  return branching_case(id).pair == PairId::G2Sl3 ? g2_coords_to_eta(delta_g2) : delta_g2;
}

std::int64_t multiplicity(CaseId id, const Weight& lambda, const Weight& delta) {
  check_dominance(id, lambda);
  return closed_form(id, lambda, as_g2(delta));
}

std::vector<Offset> offsets_up_to(int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  std::vector<Offset> out;
  out.reserve(static_cast<std::size_t>((depth + 1) * (depth + 2) / 2));
  for (int d = 0; d <= depth; ++d) {
    for (int p = 0; p <= d; ++p) out.push_back({p, d - p});
  }
  return out;
}

Decomposition enumerate(CaseId id, const Weight& lambda, int depth) {
  check_dominance(id, lambda);
  const auto offsets = offsets_up_to(depth);
  std::vector<std::int64_t> mult(offsets.size(), 0);
  std::exception_ptr failure;
  const long n = static_cast<long>(offsets.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < n; ++i) {
    try {
      mult[i] = closed_form(id, lambda, delta_at(id, lambda, offsets[i]));
    } catch (...) {
#pragma omp critical(g2branch_enumerate_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return collect(id, lambda, depth, offsets, mult);
}

Decomposition enumerate_serial(CaseId id, const Weight& lambda, int depth) {
  check_dominance(id, lambda);
  const auto offsets = offsets_up_to(depth);
  std::vector<std::int64_t> mult;
  mult.reserve(offsets.size());
  for (const auto& o : offsets) mult.push_back(closed_form(id, lambda, delta_at(id, lambda, o)));
  return collect(id, lambda, depth, offsets, mult);
}

std::int64_t lattice_point_oracle(CaseId id, const Weight& lambda, const Weight& delta_in) {
  check_dominance(id, lambda);
  const Weight delta = as_g2(delta_in);
  const Weight mu = restricted_highest_weight(id, lambda) - delta;
  if (!mu[0].is_natural() || !mu[1].is_natural()) return 0;
  const std::int64_t P = mu[0].to_int64();
  const std::int64_t Q = mu[1].to_int64();
  std::int64_t count = 0;
  switch (id) {
    case CaseId::B3Borel:
    case CaseId::G2Borel:
      // i(2a1+a2) + j(a1+a2) + k a1 = P a1 + Q a2
      for (std::int64_t i = 0; i <= Q; ++i) {
        const std::int64_t j = Q - i;
        if (P - 2 * i - j >= 0) ++count;
      }
      return count;
    case CaseId::G2P1: {
      // the a1-string t a1 (t <= λ(H_{a1})) on top of the two quotient weights
      const std::int64_t n = g2(lambda, "a1").to_int64();
      for (std::int64_t k = 0; k <= Q; ++k) {
        const std::int64_t t = P - (Q - k) - 2 * k;
        if (t >= 0 && t <= n) ++count;
      }
      return count;
    }
    case CaseId::B3P23:
    case CaseId::G2P2: {
      const Rational k = g2(delta, "a2");
      if (!k.is_natural()) return 0;
      const std::int64_t n = id == CaseId::B3P23 ? so7(lambda, "e2-e3").to_int64() : g2(lambda, "a2").to_int64();
      return doublet_singlet_count(P, n, k.to_int64());
    }
    case CaseId::B3P12_3: {
      const Rational j = g2(delta, "a1");
      if (!j.is_natural()) return 0;
      const std::int64_t n1 = so7(lambda, "e1-e2").to_int64();
      const std::int64_t n2 = so7(lambda, "e3").to_int64();
      for (std::int64_t i = std::abs(n1 - n2); i <= n1 + n2; i += 2) {
        if (cg_contains(i, Q, j.to_int64())) ++count;
      }
      return count;
    }
  }
  throw std::logic_error("unknown CaseId");
}

}  // namespace g2branch
