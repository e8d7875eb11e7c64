#include "g2branch/condition.hpp"

#include <stdexcept>

namespace g2branch {

std::string_view number_set_symbol(NumberSet set) {
  switch (set) {
    case NumberSet::Natural: return "ℕ";
    case NumberSet::Integer: return "ℤ";
    case NumberSet::PositiveInteger: return "ℤ⁺";
  }
  throw std::logic_error("unknown NumberSet");
}

bool in_set(const Rational& x, NumberSet set) {
  switch (set) {
    case NumberSet::Natural: return x.is_natural();
    case NumberSet::Integer: return x.is_integer();
    case NumberSet::PositiveInteger: return x.is_positive_integer();
  }
  throw std::logic_error("unknown NumberSet");
}

ConditionAtom ConditionAtom::in(Coroot h, NumberSet s, Rational shift) {
  return ConditionAtom{std::move(h), std::move(shift), s, Polarity::Required};
}

ConditionAtom ConditionAtom::not_in(Coroot h, NumberSet s, Rational shift) {
  return ConditionAtom{std::move(h), std::move(shift), s, Polarity::Forbidden};
}

bool ConditionAtom::holds(const Weight& w) const {
  const bool member = in_set(value(w), set);
  return polarity == Polarity::Required ? member : !member;
}

std::string ConditionAtom::label(std::string_view symbol) const {
  std::string out(symbol);
  out += '(' + coroot.label() + ')';
  if (shift.sign() > 0) out += "+" + shift.to_string();
  if (shift.sign() < 0) out += shift.to_string();
  out += polarity == Polarity::Required ? " ∈ " : " ∉ ";
  out += number_set_symbol(set);
  return out;
}

std::vector<ConditionAtom> failing_atoms(const std::vector<ConditionAtom>& atoms, const Weight& w) {
  std::vector<ConditionAtom> out;
  for (const auto& atom : atoms) {
    if (!atom.holds(w)) out.push_back(atom);
  }
  return out;
}

void require_all(const std::vector<ConditionAtom>& atoms, const Weight& w, std::string_view context) {
  for (const auto& atom : atoms) {
    if (!atom.holds(w)) {
      throw PreconditionError(std::string(context) + ": " + w.to_string() + " violates " + atom.label() +
                              " (value " + atom.value(w).to_string() + ")");
    }
  }
}

}  // namespace g2branch
