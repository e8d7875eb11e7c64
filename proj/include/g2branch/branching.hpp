#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "g2branch/compatibility.hpp"
#include "g2branch/condition.hpp"

namespace g2branch {

enum class CaseId { B3Borel, B3P23, B3P12_3, G2Borel, G2P1, G2P2 };

std::string_view case_name(CaseId id);  // "B3-borel", "B3-p23", "B3-p12-3", "G2-borel", "G2-p1", "G2-p2"
CaseId parse_case(std::string_view name);
std::span<const CaseId> all_cases();

// Offset p a1 + q a2 below Res λ on the shared g2 Cartan; its depth is p+q.
struct Offset {
  int p = 0;
  int q = 0;
  int depth() const { return p + q; }
  friend bool operator==(const Offset&, const Offset&) = default;
};

// Enumeration order: ascending depth, then ascending p.
inline std::strong_ordering offset_order(const Offset& x, const Offset& y) {
  if (auto c = x.depth() <=> y.depth(); c != 0) return c;
  return x.p <=> y.p;
}

struct BranchingCase {
  CaseId id;
  PairId pair;
  ParabolicSpec ambient_parabolic;
  ParabolicSpec sub_parabolic;
  // Weights of u_-/(u_- ∩ g') are the negatives of these offsets.
  std::vector<Offset> quotient_offsets;
  // [l,l]-dominant integrality of λ.
  std::vector<ConditionAtom> dominance;
};

const BranchingCase& branching_case(CaseId id);

// Case for an ambient parabolic; throws std::invalid_argument for incompatible
// parabolics and for the full parabolic (finite-dimensional, not a branching case here).
CaseId case_for(PairId pair, const ParabolicSpec& ambient);

struct BranchingTerm {
  Weight delta;  // subalgebra coordinates (g2 simple-root or sl3 η)
  Offset offset;
  std::int64_t multiplicity;
};

struct Decomposition {
  CaseId case_id;
  Weight lambda;
  int depth;
  std::vector<BranchingTerm> terms;
};

// Throws PreconditionError naming the failing coroot.
void check_dominance(CaseId id, const Weight& lambda);

// Res λ on the shared Cartan, in g2 simple-root coordinates (λ itself for the g2 cases).
Weight restricted_highest_weight(CaseId id, const Weight& lambda);

// δ = Res λ - (p a1 + q a2), in g2 simple-root coordinates.
Weight delta_at(CaseId id, const Weight& lambda, Offset o);

// Subalgebra coordinates of a shared-Cartan weight (η coordinates for the sl3 cases).
Weight to_sub_coords(CaseId id, const Weight& delta_g2);

// Closed-form m(δ; λ). δ may be given in g2 or sl3 coordinates for the sl3 cases.
std::int64_t multiplicity(CaseId id, const Weight& lambda, const Weight& delta);

// Offsets with p, q >= 0 and p+q <= depth, in enumeration order.
std::vector<Offset> offsets_up_to(int depth);

// Closed-form decomposition; offsets are evaluated in parallel.
Decomposition enumerate(CaseId id, const Weight& lambda, int depth);
// Sequential reference for enumerate.
Decomposition enumerate_serial(CaseId id, const Weight& lambda, int depth);

// Brute-force count of the integer tuples parametrising Hom(F'_δ, Res F_λ ⊗ S(quotient)).
std::int64_t lattice_point_oracle(CaseId id, const Weight& lambda, const Weight& delta);

}  // namespace g2branch
