#pragma once

#include <string>

#include <json.hpp>

#include "g2branch/character.hpp"
#include "g2branch/simplicity.hpp"

namespace g2branch {

using nlohmann::json;

// Rationals are "num/den" strings ("3", "-5/2").
json json_of(const Rational& r);
Rational rational_from_json(const json& j);

// {"algebra": "so7"|"g2"|"sl3", "coords": [...]}
json json_of(const Weight& w);
Weight weight_from_json(const json& j);

// {case, lambda, depth, terms: [{delta, offset: [p,q], multiplicity}]}
json json_of(const Decomposition& dec);
Decomposition decomposition_from_json(const json& j);

// {case, lambda, offset, remainder_coefficient, reason}
json json_of(const OracleFailureReport& report);

json json_of(const HyperbolicWitness& h);  // [a, b]

std::string latex_of(const Rational& r);
// "\frac{1}{5}\varepsilon_{1}+..." in the algebra's own basis.
std::string latex_of(const Weight& w);
std::string latex_of(const ParabolicSpec& p);

// Standalone LaTeX document with the ⊕-sum and a table of terms. `module_level`
// selects between a direct sum of simple modules and a Grothendieck-group identity.
std::string latex_document(const Decomposition& dec, bool module_level);

// One header line plus one line per term.
std::string text_of(const Decomposition& dec);

}  // namespace g2branch
