#pragma once

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "g2branch/weight.hpp"

namespace g2branch {

// Roots are integer coefficient vectors over the simple roots.
using RootCoeffs = std::vector<int>;

struct RootSystemData {
  AlgebraId algebra;
  std::vector<RootCoeffs> simple_roots;
  std::vector<RootCoeffs> positive_roots;   // same order as positive_root_table()
  std::vector<std::string_view> labels;
};

const RootSystemData& root_system(AlgebraId algebra);

// Standard parabolic subalgebra p_Pi, Pi a subset of the simple roots (bit i = simple root i).
class ParabolicSpec {
 public:
  ParabolicSpec(AlgebraId algebra, std::initializer_list<std::string_view> simple_root_labels);
  static ParabolicSpec from_mask(AlgebraId algebra, unsigned mask);
  static ParabolicSpec borel(AlgebraId algebra) { return from_mask(algebra, 0); }
  static ParabolicSpec full(AlgebraId algebra);

  AlgebraId algebra() const { return algebra_; }
  unsigned mask() const { return mask_; }
  bool contains(std::size_t simple_index) const { return (mask_ >> simple_index) & 1u; }
  std::vector<std::size_t> simple_indices() const;
  std::vector<std::string_view> simple_labels() const;
  bool is_borel() const { return mask_ == 0; }
  bool is_full() const;

  // "{}", "{e2-e3}", "{e1-e2,e3}"
  std::string label() const;

  friend bool operator==(const ParabolicSpec&, const ParabolicSpec&) = default;

 private:
  ParabolicSpec(AlgebraId algebra, unsigned mask);

  AlgebraId algebra_;
  unsigned mask_;
};

// Positive roots in the N-span of Pi (indices into positive_root_table).
std::vector<std::size_t> levi_positive_roots(const ParabolicSpec& p);
// Positive roots outside the Levi factor; their negatives are the weights of u_-.
std::vector<std::size_t> nilradical_roots(const ParabolicSpec& p);

// All 2^rank standard parabolics, ordered by |Pi| and then by mask.
std::vector<ParabolicSpec> all_standard_parabolics(AlgebraId algebra);

// Element of the Weyl group of g2, acting on (u, v) simple-root coordinates.
class WeylElementG2 {
 public:
  using Matrix = std::array<std::array<int, 2>, 2>;

  // The twelve elements in the order 1, s1, s2, s2s1, s1s2, s1s2s1, then the negatives.
  static std::span<const WeylElementG2> all();
  static const WeylElementG2& identity();
  static const WeylElementG2& by_name(std::string_view name);

  std::string_view name() const { return name_; }
  const Matrix& matrix() const { return matrix_; }

  // Linear action w(x).
  Weight act(const Weight& w) const;

  // (a * b)(x) = a(b(x)).
  WeylElementG2 operator*(const WeylElementG2& rhs) const;

  friend bool operator==(const WeylElementG2& a, const WeylElementG2& b) { return a.matrix_ == b.matrix_; }

  WeylElementG2(std::string_view name, Matrix matrix) : name_(name), matrix_(matrix) {}

 private:
  std::string_view name_;
  Matrix matrix_;
};

// w . d = w(d + rho) - rho.
Weight dot_action(const WeylElementG2& w, const Weight& delta);

// The twelve images dot_action(w, delta), in WeylElementG2::all() order.
std::vector<Weight> dot_orbit(const Weight& delta);

// d1 = w . d2 for some w, i.e. equal infinitesimal characters. No root-lattice
// condition: (1/3)a1 and s2 . (1/3)a1 count as linked.
bool same_linkage_class(const Weight& delta1, const Weight& delta2);

}  // namespace g2branch
