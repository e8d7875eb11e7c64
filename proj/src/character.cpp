#include "g2branch/character.hpp"

#include <cstdlib>
#include <stdexcept>

namespace g2branch {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("character coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("character coefficient overflow");
  return out;
}

Offset offset_of(const Weight& w_g2) {
  if (w_g2.algebra() != AlgebraId::G2 || !w_g2[0].is_integer() || !w_g2[1].is_integer()) {
    throw std::logic_error("root offset is not integral on the shared Cartan: " + w_g2.to_string());
  }
  return {static_cast<int>(w_g2[0].to_int64()), static_cast<int>(w_g2[1].to_int64())};
}

// A root of the ambient or subalgebra, pushed onto the shared g2 Cartan.
Weight shared_cartan_root(AlgebraId algebra, std::size_t index) {
  const auto& coeffs = root_system(algebra).positive_roots.at(index);
  const Weight w = root_weight(algebra, coeffs);
  switch (algebra) {
    case AlgebraId::So7: return restrict_so7_to_g2(w);
    case AlgebraId::G2: return w;
    case AlgebraId::Sl3: return eta_to_g2_coords(w);
  }
  throw std::logic_error("unknown AlgebraId");
}

// Levi simple roots of p, checked to be pairwise orthogonal (A1 x ... x A1).
std::vector<std::size_t> rank_one_levi(const ParabolicSpec& p) {
  const auto simple = p.simple_indices();
  if (levi_positive_roots(p).size() != simple.size()) {
    throw std::invalid_argument("Levi factor of " + p.label() + " is not a product of sl2's");
  }
  return simple;
}

std::vector<std::pair<Offset, std::int64_t>> sub_levi_strings(CaseId id, const Weight& delta_g2) {
  const auto& p = branching_case(id).sub_parabolic;
  const auto table = positive_root_table(p.algebra());
  std::vector<std::pair<Offset, std::int64_t>> out;
  for (auto s : rank_one_levi(p)) {
    const Rational n = pair(delta_g2, coroot(p.algebra(), table[s].label));
    out.emplace_back(offset_of(shared_cartan_root(p.algebra(), s)), n.to_int64());
  }
  return out;
}

}  // namespace

FormalCharacter::FormalCharacter(Weight anchor, int depth) : anchor_(std::move(anchor)), depth_(depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  const auto d = static_cast<std::size_t>(depth);
  coeffs_.assign((d + 1) * (d + 2) / 2, 0);
}

std::int64_t FormalCharacter::at(Offset o) const { return in_range(o) ? coeffs_[index(o)] : 0; }

void FormalCharacter::add(Offset o, std::int64_t value) {
  if (!in_range(o)) return;
  auto& c = coeffs_[index(o)];
  c = checked_add(c, value);
}

void FormalCharacter::multiply_geometric(Offset root) {
  if (root.p < 0 || root.q < 0 || root.depth() == 0) throw std::invalid_argument("geometric factor needs a positive root");
  // Enumeration order is increasing depth, so o - root is already updated.
  for (int d = root.depth(); d <= depth_; ++d) {
    for (int p = 0; p <= d; ++p) {
      const Offset o{p, d - p};
      const Offset below{o.p - root.p, o.q - root.q};
      if (below.p < 0 || below.q < 0) continue;
      auto& c = coeffs_[index(o)];
      c = checked_add(c, coeffs_[index(below)]);
    }
  }
}

void FormalCharacter::multiply_string(Offset root, std::int64_t length) {
  if (length < 0) throw std::invalid_argument("string length must be nonnegative");
  if (length == 0) return;
  const std::vector<std::int64_t> old = coeffs_;
  for (int d = depth_; d >= 0; --d) {
    for (int p = 0; p <= d; ++p) {
      const Offset o{p, d - p};
      std::int64_t sum = old[index(o)];
      for (std::int64_t t = 1; t <= length; ++t) {
        const Offset from{static_cast<int>(o.p - t * root.p), static_cast<int>(o.q - t * root.q)};
        if (from.p < 0 || from.q < 0) break;
        sum = checked_add(sum, old[index(from)]);
      }
      coeffs_[index(o)] = sum;
    }
  }
}

void FormalCharacter::add_shifted(const FormalCharacter& other, Offset shift, std::int64_t k) {
  if (other.anchor_ != anchor_ - Weight(AlgebraId::G2, {Rational(shift.p), Rational(shift.q)})) {
    throw std::invalid_argument("add_shifted: anchors are not related by the shift");
  }
  for (int d = 0; d <= other.depth_; ++d) {
    for (int p = 0; p <= d; ++p) {
      const Offset e{p, d - p};
      const std::int64_t v = other.coeffs_[index(e)];
      if (v != 0) add({shift.p + e.p, shift.q + e.q}, checked_mul(k, v));
    }
  }
}

std::vector<std::int64_t> FormalCharacter::depth_sums() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(depth_) + 1, 0);
  for (int d = 0; d <= depth_; ++d) {
    for (int p = 0; p <= d; ++p) out[d] = checked_add(out[d], coeffs_[index({p, d - p})]);
  }
  return out;
}

std::vector<std::pair<Offset, std::int64_t>> FormalCharacter::nonzero() const {
  std::vector<std::pair<Offset, std::int64_t>> out;
  for (int d = 0; d <= depth_; ++d) {
    for (int p = 0; p <= d; ++p) {
      const Offset o{p, d - p};
      if (coeffs_[index(o)] != 0) out.emplace_back(o, coeffs_[index(o)]);
    }
  }
  return out;
}

bool FormalCharacter::is_zero() const {
  for (auto c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<int> gl2_tensor_decompose(int i, int n) {
  if (i < 0 || n < 0) throw std::invalid_argument("gl2_tensor_decompose expects nonnegative highest weights");
  std::vector<int> out;
  for (int k = std::abs(n - i); k <= n + i; k += 2) out.push_back(k);
  return out;
}

std::vector<Offset> ambient_nilradical_offsets(CaseId id) {
  const auto& p = branching_case(id).ambient_parabolic;
  std::vector<Offset> out;
  for (auto index : nilradical_roots(p)) out.push_back(offset_of(shared_cartan_root(p.algebra(), index)));
  return out;
}

std::vector<Offset> sub_nilradical_offsets(CaseId id) {
  const auto& p = branching_case(id).sub_parabolic;
  std::vector<Offset> out;
  for (auto index : nilradical_roots(p)) out.push_back(offset_of(shared_cartan_root(p.algebra(), index)));
  return out;
}

std::vector<std::pair<Offset, std::int64_t>> ambient_levi_strings(CaseId id, const Weight& lambda) {
  check_dominance(id, lambda);
  const auto& p = branching_case(id).ambient_parabolic;
  const auto table = positive_root_table(p.algebra());
  std::vector<std::pair<Offset, std::int64_t>> out;
  for (auto s : rank_one_levi(p)) {
    const Rational n = pair(lambda, coroot(p.algebra(), table[s].label));
    out.emplace_back(offset_of(shared_cartan_root(p.algebra(), s)), n.to_int64() + 1);
  }
  return out;
}

bool sub_levi_dominant(CaseId id, const Weight& delta_g2) {
  const auto& p = branching_case(id).sub_parabolic;
  const auto table = positive_root_table(p.algebra());
  for (auto s : p.simple_indices()) {
    if (!pair(delta_g2, coroot(p.algebra(), table[s].label)).is_natural()) return false;
  }
  return true;
}

FormalCharacter module_character(Side side, CaseId id, const Weight& weight, int depth) {
  if (side == Side::Ambient) {
    FormalCharacter ch(restricted_highest_weight(id, weight), depth);
    ch.add({0, 0}, 1);
    for (const auto& [root, length] : ambient_levi_strings(id, weight)) ch.multiply_string(root, length - 1);
    for (const auto& root : ambient_nilradical_offsets(id)) ch.multiply_geometric(root);
    return ch;
  }
  const Weight delta = weight.algebra() == AlgebraId::Sl3 ? eta_to_g2_coords(weight) : weight;
  if (!sub_levi_dominant(id, delta)) {
    throw PreconditionError(std::string(case_name(id)) + ": " + delta.to_string() +
                            " is not dominant integral for the subalgebra Levi factor");
  }
  FormalCharacter ch(delta, depth);
  ch.add({0, 0}, 1);
  for (const auto& [root, length] : sub_levi_strings(id, delta)) ch.multiply_string(root, length);
  for (const auto& root : sub_nilradical_offsets(id)) ch.multiply_geometric(root);
  return ch;
}

FormalCharacter hom_source_character(CaseId id, const Weight& lambda, int depth) {
  FormalCharacter ch(restricted_highest_weight(id, lambda), depth);
  ch.add({0, 0}, 1);
  for (const auto& [root, length] : ambient_levi_strings(id, lambda)) ch.multiply_string(root, length - 1);
  for (const auto& root : branching_case(id).quotient_offsets) ch.multiply_geometric(root);
  return ch;
}

namespace {

// Highest-weight multiplicity from weight multiplicities: for a torus Levi the weight
// count itself, for an sl2 Levi along r the count minus the count one step up.
std::int64_t strip(CaseId id, const FormalCharacter& source, Offset o) {
  const auto& p = branching_case(id).sub_parabolic;
  const auto simple = p.simple_indices();
  if (simple.empty()) return source.at(o);
  const Offset r = offset_of(shared_cartan_root(p.algebra(), simple.front()));
  return source.at(o) - source.at({o.p - r.p, o.q - r.q});
}

}  // namespace

std::int64_t hom_multiplicity(CaseId id, const Weight& lambda, Offset o, int depth) {
  if (o.p < 0 || o.q < 0 || o.depth() > depth) throw std::invalid_argument("offset outside the truncation depth");
  const Weight delta = delta_at(id, lambda, o);
  if (!sub_levi_dominant(id, delta)) {
    throw PreconditionError(std::string(case_name(id)) + ": F'_δ does not exist for δ = " + delta.to_string());
  }
  return strip(id, hom_source_character(id, lambda, depth), o);
}

std::vector<std::optional<std::int64_t>> hom_grid(CaseId id, const Weight& lambda, int depth) {
  const FormalCharacter source = hom_source_character(id, lambda, depth);
  std::vector<std::optional<std::int64_t>> out;
  for (const auto& o : offsets_up_to(depth)) {
    if (sub_levi_dominant(id, delta_at(id, lambda, o))) {
      out.emplace_back(strip(id, source, o));
    } else {
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

OracleFailure::OracleFailure(OracleFailureReport report)
    : std::runtime_error("peel failed for " + std::string(case_name(report.case_id)) + " at offset (" +
                         std::to_string(report.offset.p) + "," + std::to_string(report.offset.q) +
                         "): " + report.reason + " (remainder " + std::to_string(report.remainder_coefficient) + ")"),
      report_(std::move(report)) {}

Decomposition peel(const FormalCharacter& ambient_char, CaseId id, const Weight& lambda) {
  const int depth = ambient_char.depth();
  Decomposition dec{id, lambda, depth, {}};
  FormalCharacter rest = ambient_char;
  for (const auto& o : offsets_up_to(depth)) {
    const std::int64_t c = rest.at(o);
    if (c == 0) continue;
    if (c < 0) throw OracleFailure({id, lambda, o, c, "negative remainder coefficient"});
    const Weight delta = ambient_char.anchor() - Weight(AlgebraId::G2, {Rational(o.p), Rational(o.q)});
    if (!sub_levi_dominant(id, delta)) throw OracleFailure({id, lambda, o, c, "peeled weight is not dominant"});
    rest.add_shifted(module_character(Side::Sub, id, delta, depth - o.depth()), o, -c);
    dec.terms.push_back({to_sub_coords(id, delta), o, c});
  }
  return dec;
}

}  // namespace g2branch
