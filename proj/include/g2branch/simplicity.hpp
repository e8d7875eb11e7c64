#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2branch/branching.hpp"
#include "g2branch/condition.hpp"

namespace g2branch {

struct HypothesisSet {
  std::string name;
  AlgebraId algebra;
  std::vector<ConditionAtom> atoms;
};

// "*-generic": regions where the branching decomposition is a direct sum of simple
// modules. "*-summand": conditions on λ making each summand simple and the summands
// unlinked. "*-simple": ambient simplicity conditions.
std::span<const HypothesisSet> hypothesis_sets();
const HypothesisSet& hypothesis_set(std::string_view name);  // throws std::invalid_argument

// The "*-generic" set guaranteeing a direct sum of simple modules for the case.
const HypothesisSet& generic_hypothesis(CaseId id);

struct HypothesisResult {
  bool holds;
  std::vector<ConditionAtom> failing;
};

HypothesisResult in_hypothesis(const HypothesisSet& set, const Weight& w);
HypothesisResult in_hypothesis(std::string_view name, const Weight& w);

// (w+ρ)(H_β) ∉ ℤ⁺ for β ∈ Φ⁺ outside the Levi of p.
std::vector<ConditionAtom> jantzen_atoms(const ParabolicSpec& p);

struct SimplicityVerdict {
  bool certified;  // "certified simple"; false means "not certified", never "not simple"
  std::vector<ConditionAtom> failing;
};

// Throws PreconditionError when w is not [l,l]-dominant integral for p. sl3 weights
// may be passed in η or shared-Cartan g2 coordinates.
SimplicityVerdict jantzen_simple(const ParabolicSpec& p, const Weight& w);

std::string_view verdict_label(const SimplicityVerdict& v);  // "certified simple" / "not certified"

// Deterministic rational weight in the named "*-generic" set. Coordinates are
// k/p with distinct primes 13 <= p <= 47, integer-valued pairings drawn from 0..6.
Weight sample_generic(std::string_view name, std::uint64_t seed);

// No two terms of a g2-target decomposition share a linkage class. Throws
// std::invalid_argument for sl3-target cases.
bool linkage_disjoint(const Decomposition& dec);

}  // namespace g2branch
