#include "g2branch/root_data.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace g2branch {

namespace {

RootSystemData build_root_system(AlgebraId algebra) {
  RootSystemData data{algebra, {}, {}, {}};
  const auto table = positive_root_table(algebra);
  for (const auto& entry : table) {
    data.positive_roots.push_back(entry.simple_coeffs);
    data.labels.push_back(entry.label);
  }
  for (std::size_t s = 0; s < rank(algebra); ++s) data.simple_roots.push_back(table[s].simple_coeffs);
  return data;
}

using M = WeylElementG2::Matrix;

const std::array<WeylElementG2, 12> kWeylG2 = {
    WeylElementG2{"1", M{{{1, 0}, {0, 1}}}},
    WeylElementG2{"s1", M{{{-1, 3}, {0, 1}}}},
    WeylElementG2{"s2", M{{{1, 0}, {1, -1}}}},
    WeylElementG2{"s2s1", M{{{-1, 3}, {-1, 2}}}},
    WeylElementG2{"s1s2", M{{{2, -3}, {1, -1}}}},
    WeylElementG2{"s1s2s1", M{{{-2, 3}, {-1, 2}}}},
    WeylElementG2{"-1", M{{{-1, 0}, {0, -1}}}},
    WeylElementG2{"-s1", M{{{1, -3}, {0, -1}}}},
    WeylElementG2{"-s2", M{{{-1, 0}, {-1, 1}}}},
    WeylElementG2{"-s2s1", M{{{1, -3}, {1, -2}}}},
    WeylElementG2{"-s1s2", M{{{-2, 3}, {-1, 1}}}},
    WeylElementG2{"-s1s2s1", M{{{2, -3}, {1, -2}}}},
};

}  // namespace

const RootSystemData& root_system(AlgebraId algebra) {
  static const RootSystemData so7 = build_root_system(AlgebraId::So7);
  static const RootSystemData g2 = build_root_system(AlgebraId::G2);
  static const RootSystemData sl3 = build_root_system(AlgebraId::Sl3);
  switch (algebra) {
    case AlgebraId::So7: return so7;
    case AlgebraId::G2: return g2;
    case AlgebraId::Sl3: return sl3;
  }
  throw std::logic_error("unknown AlgebraId");
}

ParabolicSpec::ParabolicSpec(AlgebraId algebra, unsigned mask) : algebra_(algebra), mask_(mask) {
  if (mask_ >> rank(algebra_)) throw std::invalid_argument("parabolic mask outside the simple roots");
}

ParabolicSpec::ParabolicSpec(AlgebraId algebra, std::initializer_list<std::string_view> simple_root_labels)
    : algebra_(algebra), mask_(0) {
  for (auto label : simple_root_labels) {
    const std::size_t index = root_index(algebra, label);
    if (index >= rank(algebra)) {
      throw std::invalid_argument("'" + std::string(label) + "' is not a simple root of " +
                                  std::string(algebra_name(algebra)));
    }
    mask_ |= 1u << index;
  }
}

ParabolicSpec ParabolicSpec::from_mask(AlgebraId algebra, unsigned mask) { return ParabolicSpec(algebra, mask); }

ParabolicSpec ParabolicSpec::full(AlgebraId algebra) {
  return ParabolicSpec(algebra, (1u << rank(algebra)) - 1u);
}

bool ParabolicSpec::is_full() const { return mask_ == (1u << rank(algebra_)) - 1u; }

std::vector<std::size_t> ParabolicSpec::simple_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < rank(algebra_); ++s) {
    if (contains(s)) out.push_back(s);
  }
  return out;
}

std::vector<std::string_view> ParabolicSpec::simple_labels() const {
  std::vector<std::string_view> out;
  const auto table = positive_root_table(algebra_);
  for (auto s : simple_indices()) out.push_back(table[s].label);
  return out;
}

std::string ParabolicSpec::label() const {
  std::string out = "{";
  bool first = true;
  for (auto l : simple_labels()) {
    if (!first) out += ',';
    out += l;
    first = false;
  }
  return out + "}";
}

std::vector<std::size_t> levi_positive_roots(const ParabolicSpec& p) {
  std::vector<std::size_t> out;
  const auto& data = root_system(p.algebra());
  for (std::size_t i = 0; i < data.positive_roots.size(); ++i) {
    const auto& coeffs = data.positive_roots[i];
    bool inside = true;
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
      if (coeffs[s] != 0 && !p.contains(s)) inside = false;
    }
    if (inside) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> nilradical_roots(const ParabolicSpec& p) {
  const auto levi = levi_positive_roots(p);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < root_system(p.algebra()).positive_roots.size(); ++i) {
    if (std::find(levi.begin(), levi.end(), i) == levi.end()) out.push_back(i);
  }
  return out;
}

std::vector<ParabolicSpec> all_standard_parabolics(AlgebraId algebra) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << rank(algebra)); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return std::popcount(a) < std::popcount(b); });
  std::vector<ParabolicSpec> out;
  for (auto m : masks) out.push_back(ParabolicSpec::from_mask(algebra, m));
  return out;
}

std::span<const WeylElementG2> WeylElementG2::all() { return kWeylG2; }

const WeylElementG2& WeylElementG2::identity() { return kWeylG2[0]; }

const WeylElementG2& WeylElementG2::by_name(std::string_view name) {
  for (const auto& w : kWeylG2) {
    if (w.name() == name) return w;
  }
  throw std::invalid_argument("unknown g2 Weyl element '" + std::string(name) + "'");
}

Weight WeylElementG2::act(const Weight& w) const {
  if (w.algebra() != AlgebraId::G2) throw std::invalid_argument("WeylElementG2 acts on g2 weights");
  const Rational u = Rational(matrix_[0][0]) * w[0] + Rational(matrix_[0][1]) * w[1];
  const Rational v = Rational(matrix_[1][0]) * w[0] + Rational(matrix_[1][1]) * w[1];
  return Weight(AlgebraId::G2, {u, v});
}

WeylElementG2 WeylElementG2::operator*(const WeylElementG2& rhs) const {
  Matrix product{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      product[i][j] = matrix_[i][0] * rhs.matrix_[0][j] + matrix_[i][1] * rhs.matrix_[1][j];
    }
  }
  for (const auto& w : kWeylG2) {
    if (w.matrix() == product) return w;
  }
  throw std::logic_error("g2 Weyl group not closed under multiplication");
}

Weight dot_action(const WeylElementG2& w, const Weight& delta) {
  const Weight r = rho(AlgebraId::G2);
  return w.act(delta + r) - r;
}

std::vector<Weight> dot_orbit(const Weight& delta) {
  std::vector<Weight> out;
  out.reserve(kWeylG2.size());
  for (const auto& w : kWeylG2) out.push_back(dot_action(w, delta));
  return out;
}

bool same_linkage_class(const Weight& delta1, const Weight& delta2) {
  return std::ranges::any_of(kWeylG2, [&](const WeylElementG2& w) { return dot_action(w, delta2) == delta1; });
}

}  // namespace g2branch
