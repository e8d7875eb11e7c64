#include "g2branch/compatibility.hpp"

#include <array>
#include <numeric>
#include <stdexcept>

namespace g2branch {

namespace {

// Root alpha evaluated on a H_{a1} + b H_{a2} is form[0]*a + form[1]*b.
using Form = std::array<long, 2>;
using Vec = std::array<long, 2>;

const std::vector<Form> kSo7SimpleForms = {{2, -1}, {-3, 2}, {2, -1}};  // e1-e2, e2-e3, e3
const std::vector<Form> kG2SimpleForms = {{2, -1}, {-3, 2}};            // a1, a2
const std::vector<Form> kSl3SimpleForms = {{-3, 2}, {3, -1}};           // n1-n2, n2-n3

const std::vector<Form>& ambient_forms(PairId pair) {
  return pair == PairId::So7G2 ? kSo7SimpleForms : kG2SimpleForms;
}
const std::vector<Form>& sub_forms(PairId pair) {
  return pair == PairId::So7G2 ? kG2SimpleForms : kSl3SimpleForms;
}

long eval(const Form& f, const Vec& v) { return f[0] * v[0] + f[1] * v[1]; }

Vec primitive(Vec v) {
  const long g = std::gcd(v[0], v[1]);
  if (g > 1) {
    v[0] /= g;
    v[1] /= g;
  }
  return v;
}

bool passes(const ParabolicSpec& p, const std::vector<Form>& forms, const Vec& v) {
  for (std::size_t s = 0; s < forms.size(); ++s) {
    const long value = eval(forms[s], v);
    if (p.contains(s) ? value != 0 : value <= 0) return false;
  }
  return true;
}

// Candidate points for the open cone {f_s > 0, s ∉ Π} restricted to {f_s = 0, s ∈ Π}.
// With no equalities the cone, if nonempty, contains a normal (half-plane case) or
// the sum of its two boundary rays, each of which lies on some line f_s = 0.
std::vector<Vec> candidates(const ParabolicSpec& p, const std::vector<Form>& forms) {
  std::vector<Form> equalities;
  for (std::size_t s = 0; s < forms.size(); ++s) {
    if (p.contains(s)) equalities.push_back(forms[s]);
  }
  if (!equalities.empty()) {
    const Form& f = equalities.front();
    for (const auto& g : equalities) {
      if (f[0] * g[1] - f[1] * g[0] != 0) return {Vec{0, 0}};
    }
    const Vec d = primitive({f[1], -f[0]});
    return {d, Vec{-d[0], -d[1]}};
  }
  std::vector<Vec> out;
  std::vector<Vec> rays;
  for (const auto& f : forms) {
    out.push_back(f);
    rays.push_back({f[1], -f[0]});
    rays.push_back({-f[1], f[0]});
  }
  out.insert(out.end(), rays.begin(), rays.end());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (std::size_t j = i + 1; j < rays.size(); ++j) {
      out.push_back({rays[i][0] + rays[j][0], rays[i][1] + rays[j][1]});
    }
  }
  return out;
}

void require_algebra(const ParabolicSpec& p, PairId pair) {
  if (p.algebra() != ambient_algebra(pair)) {
    throw std::invalid_argument("parabolic " + p.label() + " of " + std::string(algebra_name(p.algebra())) +
                                " is not a parabolic of the ambient algebra of " + std::string(pair_name(pair)));
  }
}

}  // namespace

std::string_view pair_name(PairId pair) { return pair == PairId::So7G2 ? "so7-g2" : "g2-sl3"; }

PairId parse_pair(std::string_view name) {
  if (name == "so7-g2") return PairId::So7G2;
  if (name == "g2-sl3") return PairId::G2Sl3;
  throw std::invalid_argument("unknown pair '" + std::string(name) + "' (expected so7-g2 or g2-sl3)");
}

AlgebraId ambient_algebra(PairId pair) { return pair == PairId::So7G2 ? AlgebraId::So7 : AlgebraId::G2; }
AlgebraId sub_algebra(PairId pair) { return pair == PairId::So7G2 ? AlgebraId::G2 : AlgebraId::Sl3; }

Rational ambient_simple_value(PairId pair, std::size_t s, const HyperbolicWitness& h) {
  const Form& f = ambient_forms(pair).at(s);
  return Rational(f[0]) * h.a + Rational(f[1]) * h.b;
}

Rational sub_simple_value(PairId pair, std::size_t s, const HyperbolicWitness& h) {
  const Form& f = sub_forms(pair).at(s);
  return Rational(f[0]) * h.a + Rational(f[1]) * h.b;
}

bool is_witness(const ParabolicSpec& p, PairId pair, const HyperbolicWitness& h) {
  require_algebra(p, pair);
  for (std::size_t s = 0; s < rank(p.algebra()); ++s) {
    const Rational value = ambient_simple_value(pair, s, h);
    if (p.contains(s) ? !value.is_zero() : value.sign() <= 0) return false;
  }
  return true;
}

std::optional<HyperbolicWitness> is_compatible(const ParabolicSpec& p, PairId pair) {
  require_algebra(p, pair);
  const auto& forms = ambient_forms(pair);
  for (const auto& v : candidates(p, forms)) {
    if (passes(p, forms, v)) {
      const Vec w = primitive(v);
      return HyperbolicWitness{Rational(w[0]), Rational(w[1])};
    }
  }
  return std::nullopt;
}

ParabolicSpec intersect_parabolic(const ParabolicSpec& p, PairId pair) {
  require_algebra(p, pair);
  struct Row {
    unsigned ambient;
    unsigned sub;
  };
  // so7: {} -> {}, {e2-e3} -> {a2}, {e1-e2,e3} -> {a1}, all -> all.
  // g2:  {} -> {}, {a1} -> {}, {a2} -> {n1-n2}, all -> all.
  static const std::array<Row, 4> so7 = {{{0b000, 0b00}, {0b010, 0b10}, {0b101, 0b01}, {0b111, 0b11}}};
  static const std::array<Row, 4> g2 = {{{0b00, 0b00}, {0b01, 0b00}, {0b10, 0b01}, {0b11, 0b11}}};
  for (const auto& row : pair == PairId::So7G2 ? so7 : g2) {
    if (row.ambient == p.mask()) return ParabolicSpec::from_mask(sub_algebra(pair), row.sub);
  }
  throw std::invalid_argument("parabolic " + p.label() + " is not compatible with " + std::string(pair_name(pair)));
}

ParabolicSpec intersect_parabolic_direct(const ParabolicSpec& p, PairId pair) {
  const auto h = is_compatible(p, pair);
  if (!h) {
    throw std::invalid_argument("parabolic " + p.label() + " is not compatible with " + std::string(pair_name(pair)));
  }
  unsigned mask = 0;
  for (std::size_t s = 0; s < rank(sub_algebra(pair)); ++s) {
    if (sub_simple_value(pair, s, *h).is_zero()) mask |= 1u << s;
  }
  return ParabolicSpec::from_mask(sub_algebra(pair), mask);
}

std::vector<ParabolicSpec> enumerate_compatible(PairId pair) {
  std::vector<ParabolicSpec> out;
  for (const auto& p : all_standard_parabolics(ambient_algebra(pair))) {
    if (is_compatible(p, pair)) out.push_back(p);
  }
  return out;
}

}  // namespace g2branch
