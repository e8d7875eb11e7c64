#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "g2branch/root_data.hpp"

namespace g2branch {

enum class PairId { So7G2, G2Sl3 };

std::string_view pair_name(PairId pair);  // "so7-g2", "g2-sl3"
PairId parse_pair(std::string_view name);
AlgebraId ambient_algebra(PairId pair);
AlgebraId sub_algebra(PairId pair);

// H = a H_{a1} + b H_{a2} in the Cartan subalgebra of g2 (which is also that of sl3).
struct HyperbolicWitness {
  Rational a;
  Rational b;
  friend bool operator==(const HyperbolicWitness&, const HyperbolicWitness&) = default;
};

// Value of the ambient (resp. subalgebra) simple root with index s on H.
Rational ambient_simple_value(PairId pair, std::size_t s, const HyperbolicWitness& h);
Rational sub_simple_value(PairId pair, std::size_t s, const HyperbolicWitness& h);

// Ambient simple roots vanish on H exactly on Pi and are positive elsewhere.
bool is_witness(const ParabolicSpec& p, PairId pair, const HyperbolicWitness& h);

// Exact two-variable feasibility search; the returned witness is a primitive
// integer vector.
std::optional<HyperbolicWitness> is_compatible(const ParabolicSpec& p, PairId pair);

// p ∩ g' from the frozen intersection table. Throws std::invalid_argument when p
// is not compatible.
ParabolicSpec intersect_parabolic(const ParabolicSpec& p, PairId pair);

// p ∩ g' recomputed from the witness: the subalgebra simple roots vanishing on H.
ParabolicSpec intersect_parabolic_direct(const ParabolicSpec& p, PairId pair);

// Compatible standard parabolics of the ambient algebra, in subset-lattice order.
std::vector<ParabolicSpec> enumerate_compatible(PairId pair);

}  // namespace g2branch
