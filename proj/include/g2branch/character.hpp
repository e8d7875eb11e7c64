#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2branch/branching.hpp"

namespace g2branch {

// Truncated formal character  Σ c(p,q) e^{anchor - p a1 - q a2}  over p, q >= 0,
// p+q <= depth, stored as a dense triangle in enumeration order. Coefficients may
// go negative while peeling.
class FormalCharacter {
 public:
  FormalCharacter(Weight anchor, int depth);

  const Weight& anchor() const { return anchor_; }
  int depth() const { return depth_; }

  bool in_range(Offset o) const { return o.p >= 0 && o.q >= 0 && o.depth() <= depth_; }
  // 0 outside the truncation.
  std::int64_t at(Offset o) const;
  // Contributions beyond the truncation are dropped. Overflow throws std::overflow_error.
  void add(Offset o, std::int64_t value);

  // this *= 1/(1 - e^{-root}), truncated.
  void multiply_geometric(Offset root);
  // this *= (1 + e^{-root} + ... + e^{-length*root}).
  void multiply_string(Offset root, std::int64_t length);
  // this += k e^{-shift} other; other's anchor must be anchor - shift.
  void add_shifted(const FormalCharacter& other, Offset shift, std::int64_t k);

  // Coefficient sums per depth 0..depth.
  std::vector<std::int64_t> depth_sums() const;
  // Nonzero entries, in enumeration order.
  std::vector<std::pair<Offset, std::int64_t>> nonzero() const;
  bool is_zero() const;

  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  static std::size_t index(Offset o) {
    const auto d = static_cast<std::size_t>(o.depth());
    return d * (d + 1) / 2 + static_cast<std::size_t>(o.p);
  }

  Weight anchor_;
  int depth_;
  std::vector<std::int64_t> coeffs_;
};

// {k : |n-i| <= k <= n+i, n+i-k even}, ascending.
std::vector<int> gl2_tensor_decompose(int i, int n);

// Shared-Cartan offsets of the restricted u_- roots of the ambient parabolic, with
// multiplicity, and the u'_- roots of the subalgebra parabolic.
std::vector<Offset> ambient_nilradical_offsets(CaseId id);
std::vector<Offset> sub_nilradical_offsets(CaseId id);

// Levi strings of Res F_λ: for each ambient Levi simple root s, the restricted root
// offset and the string length λ(H_s)+1.
std::vector<std::pair<Offset, std::int64_t>> ambient_levi_strings(CaseId id, const Weight& lambda);

enum class Side { Ambient, Sub };

// Ambient: ch Res M_p(λ). Sub: ch M_{p'}(δ), δ in g2 or sl3 coordinates.
FormalCharacter module_character(Side side, CaseId id, const Weight& weight, int depth);

// Character of Res F_λ ⊗ S(quotient), truncated at depth.
FormalCharacter hom_source_character(CaseId id, const Weight& lambda, int depth);

// dim Hom_{l'}(F'_δ, Res F_λ ⊗ S(u_-/u_- ∩ g')) for δ at offset o. Throws
// PreconditionError when δ is not dominant integral for the subalgebra Levi.
std::int64_t hom_multiplicity(CaseId id, const Weight& lambda, Offset o, int depth);

// Pointwise hom multiplicity on every offset up to depth; offsets where F'_δ does not
// exist are reported as nullopt. Builds the source character once.
std::vector<std::optional<std::int64_t>> hom_grid(CaseId id, const Weight& lambda, int depth);

// Whether δ (g2 coordinates) is dominant integral for the subalgebra Levi.
bool sub_levi_dominant(CaseId id, const Weight& delta_g2);

struct OracleFailureReport {
  CaseId case_id;
  Weight lambda;
  Offset offset;
  std::int64_t remainder_coefficient;
  std::string reason;
};

class OracleFailure : public std::runtime_error {
 public:
  explicit OracleFailure(OracleFailureReport report);
  const OracleFailureReport& report() const { return report_; }

 private:
  OracleFailureReport report_;
};

// Triangular peel of an ambient character by subalgebra Verma characters.
Decomposition peel(const FormalCharacter& ambient_char, CaseId id, const Weight& lambda);

}  // namespace g2branch
