#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g2branch/weight.hpp"

namespace g2branch {

enum class NumberSet { Natural, Integer, PositiveInteger };

std::string_view number_set_symbol(NumberSet set);  // "ℕ", "ℤ", "ℤ⁺"

// One membership test  w(H) + shift ∈ S  (Required)  or  ∉ S  (Forbidden).
struct ConditionAtom {
  enum class Polarity { Required, Forbidden };

  Coroot coroot;
  Rational shift;
  NumberSet set;
  Polarity polarity;

  static ConditionAtom in(Coroot h, NumberSet s, Rational shift = Rational());
  static ConditionAtom not_in(Coroot h, NumberSet s, Rational shift = Rational());

  Rational value(const Weight& w) const { return pair(w, coroot) + shift; }
  bool holds(const Weight& w) const;

  // "λ(H_{e1})+4 ∉ ℕ"
  std::string label(std::string_view symbol = "λ") const;
};

bool in_set(const Rational& x, NumberSet set);

// Atoms of `atoms` that fail on w, in order.
std::vector<ConditionAtom> failing_atoms(const std::vector<ConditionAtom>& atoms, const Weight& w);

// Thrown when a weight violates a dominance gate; what() names the coroot.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws PreconditionError for the first failing atom.
void require_all(const std::vector<ConditionAtom>& atoms, const Weight& w, std::string_view context);

}  // namespace g2branch
