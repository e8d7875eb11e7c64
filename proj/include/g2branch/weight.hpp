#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "g2branch/rational.hpp"

namespace g2branch {

// Serialization order is the declaration order.
enum class AlgebraId { So7, G2, Sl3 };

std::string_view algebra_name(AlgebraId algebra);  // "so7", "g2", "sl3"
AlgebraId parse_algebra(std::string_view name);

// Length of the coordinate vector of a weight (and number of simple roots).
std::size_t rank(AlgebraId algebra);

// Coordinates of a weight:
//   So7  a e1 + b e2 + c e3            -> (a, b, c)
//   G2   u a1 + v a2 (simple roots)    -> (u, v)
//   Sl3  x n1 + y n2 with n3 = -n1-n2  -> (x, y)
class Weight {
 public:
  Weight(AlgebraId algebra, std::vector<Rational> coords);
  Weight(AlgebraId algebra, std::initializer_list<Rational> coords)
      : Weight(algebra, std::vector<Rational>(coords)) {}

  static Weight zero(AlgebraId algebra);

  AlgebraId algebra() const { return algebra_; }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  Weight& operator+=(const Weight& rhs);
  Weight& operator-=(const Weight& rhs);
  friend Weight operator+(Weight lhs, const Weight& rhs) { return lhs += rhs; }
  friend Weight operator-(Weight lhs, const Weight& rhs) { return lhs -= rhs; }
  friend Weight operator*(const Rational& k, Weight w);
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& lhs, const Weight& rhs) {
    if (auto c = lhs.algebra_ <=> rhs.algebra_; c != 0) return c;
    return lhs.coords_ <=> rhs.coords_;
  }

  // "(1/5, 1/7, 1/11)"
  std::string to_string() const;

 private:
  AlgebraId algebra_;
  std::vector<Rational> coords_;
};

// One positive root of a fixed algebra, frozen as literal data.
struct PositiveRootEntry {
  std::string_view label;          // "e1-e2", "3a1+2a2", "n1-n3"
  std::vector<int> simple_coeffs;  // over the simple roots, in simple-root order
  std::vector<int> weight_coords;  // the root as a weight, in the algebra's coordinates
  std::vector<int> coroot_form;    // pair(w, H_root) = sum_i coroot_form[i] * w[i]
};

// Positive roots, simple roots first (in simple-root order).
std::span<const PositiveRootEntry> positive_root_table(AlgebraId algebra);

// Index into positive_root_table; throws std::invalid_argument for unknown labels.
std::size_t root_index(AlgebraId algebra, std::string_view label);

// An integer combination of positive coroots, e.g. H_{e1-e2} + H_{e3}.
class Coroot {
 public:
  Coroot(AlgebraId algebra, std::string_view root_label);

  Coroot operator+(const Coroot& rhs) const;
  Coroot operator-(const Coroot& rhs) const;
  Coroot operator*(int k) const;

  AlgebraId algebra() const { return algebra_; }
  // (coefficient, index into positive_root_table(algebra()))
  const std::vector<std::pair<int, std::size_t>>& terms() const { return terms_; }

  // "H_{e1-e2}+H_{e3}"
  std::string label() const;

  friend bool operator==(const Coroot&, const Coroot&) = default;

 private:
  Coroot(AlgebraId algebra, std::vector<std::pair<int, std::size_t>> terms);

  AlgebraId algebra_;
  std::vector<std::pair<int, std::size_t>> terms_;
};

// Shorthand for Coroot(algebra, label).
inline Coroot coroot(AlgebraId algebra, std::string_view label) { return Coroot(algebra, label); }

// Exact value of w on h. G2 and Sl3 share a Cartan subalgebra, so a weight of
// either may be paired with a coroot of the other; any other algebra mismatch
// throws std::invalid_argument.
Rational pair(const Weight& w, const Coroot& h);

// (a, b, c) -> (2a+b+c) a1 + (a+b) a2.
Weight restrict_so7_to_g2(const Weight& lambda);

// p a1 + q a2 on the shared Cartan -> x n1 + y n2 with x = q, y = p - q.
Weight g2_coords_to_eta(const Weight& w);
// Inverse of g2_coords_to_eta: x n1 + y n2 -> (x+y) a1 + x a2.
Weight eta_to_g2_coords(const Weight& w);

// Half the sum of the positive roots.
Weight rho(AlgebraId algebra);

// A root, given by simple-root coefficients, as a weight in the algebra's coordinates.
Weight root_weight(AlgebraId algebra, std::span<const int> simple_coeffs);

}  // namespace g2branch
