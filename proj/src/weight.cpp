#include "g2branch/weight.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2branch {

namespace {

// so(7): simple roots e1-e2, e2-e3, e3. Short roots e_i pair as 2*coord_i.
const std::vector<PositiveRootEntry> kSo7Roots = {
    {"e1-e2", {1, 0, 0}, {1, -1, 0}, {1, -1, 0}},
    {"e2-e3", {0, 1, 0}, {0, 1, -1}, {0, 1, -1}},
    {"e3", {0, 0, 1}, {0, 0, 1}, {0, 0, 2}},
    {"e1-e3", {1, 1, 0}, {1, 0, -1}, {1, 0, -1}},
    {"e2", {0, 1, 1}, {0, 1, 0}, {0, 2, 0}},
    {"e1", {1, 1, 1}, {1, 0, 0}, {2, 0, 0}},
    {"e2+e3", {0, 1, 2}, {0, 1, 1}, {0, 1, 1}},
    {"e1+e3", {1, 1, 2}, {1, 0, 1}, {1, 0, 1}},
    {"e1+e2", {1, 2, 2}, {1, 1, 0}, {1, 1, 0}},
};

// g2 with a1 short, a2 long; weights are in simple-root coordinates.
const std::vector<PositiveRootEntry> kG2Roots = {
    {"a1", {1, 0}, {1, 0}, {2, -3}},
    {"a2", {0, 1}, {0, 1}, {-1, 2}},
    {"a1+a2", {1, 1}, {1, 1}, {-1, 3}},
    {"2a1+a2", {2, 1}, {2, 1}, {1, 0}},
    {"3a1+a2", {3, 1}, {3, 1}, {1, -1}},
    {"3a1+2a2", {3, 2}, {3, 2}, {0, 1}},
};

// sl(3) with n3 eliminated: n2-n3 = n1+2n2, n1-n3 = 2n1+n2.
const std::vector<PositiveRootEntry> kSl3Roots = {
    {"n1-n2", {1, 0}, {1, -1}, {1, -1}},
    {"n2-n3", {0, 1}, {1, 2}, {0, 1}},
    {"n1-n3", {1, 1}, {2, 1}, {1, 0}},
};

Rational pair_same_algebra(const Weight& w, const Coroot& h) {
  const auto table = positive_root_table(h.algebra());
  Rational value;
  for (const auto& [k, index] : h.terms()) {
    const auto& form = table[index].coroot_form;
    Rational single;
    for (std::size_t i = 0; i < form.size(); ++i) {
      if (form[i] != 0) single += Rational(form[i]) * w[i];
    }
    value += Rational(k) * single;
  }
  return value;
}

}  // namespace

std::string_view algebra_name(AlgebraId algebra) {
  switch (algebra) {
    case AlgebraId::So7: return "so7";
    case AlgebraId::G2: return "g2";
    case AlgebraId::Sl3: return "sl3";
  }
  throw std::logic_error("unknown AlgebraId");
}

AlgebraId parse_algebra(std::string_view name) {
  if (name == "so7") return AlgebraId::So7;
  if (name == "g2") return AlgebraId::G2;
  if (name == "sl3") return AlgebraId::Sl3;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

std::size_t rank(AlgebraId algebra) { return algebra == AlgebraId::So7 ? 3 : 2; }

Weight::Weight(AlgebraId algebra, std::vector<Rational> coords)
    : algebra_(algebra), coords_(std::move(coords)) {
  if (coords_.size() != rank(algebra_)) {
    throw std::invalid_argument("weight of " + std::string(algebra_name(algebra_)) + " needs " +
                                std::to_string(rank(algebra_)) + " coordinates, got " +
                                std::to_string(coords_.size()));
  }
}

Weight Weight::zero(AlgebraId algebra) {
  return Weight(algebra, std::vector<Rational>(rank(algebra)));
}

Weight& Weight::operator+=(const Weight& rhs) {
  if (rhs.algebra_ != algebra_) throw std::invalid_argument("adding weights of different algebras");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& rhs) {
  if (rhs.algebra_ != algebra_) throw std::invalid_argument("subtracting weights of different algebras");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

Weight operator*(const Rational& k, Weight w) {
  for (auto& c : w.coords_) c *= k;
  return w;
}

Weight Weight::operator-() const { return Rational(-1) * *this; }

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

std::span<const PositiveRootEntry> positive_root_table(AlgebraId algebra) {
  switch (algebra) {
    case AlgebraId::So7: return kSo7Roots;
    case AlgebraId::G2: return kG2Roots;
    case AlgebraId::Sl3: return kSl3Roots;
  }
  throw std::logic_error("unknown AlgebraId");
}

std::size_t root_index(AlgebraId algebra, std::string_view label) {
  const auto table = positive_root_table(algebra);
  const auto it = std::find_if(table.begin(), table.end(),
                               [&](const PositiveRootEntry& e) { return e.label == label; });
  if (it == table.end()) {
    throw std::invalid_argument("'" + std::string(label) + "' is not a positive root of " +
                                std::string(algebra_name(algebra)));
  }
  return static_cast<std::size_t>(it - table.begin());
}

Coroot::Coroot(AlgebraId algebra, std::string_view root_label)
    : algebra_(algebra), terms_{{1, root_index(algebra, root_label)}} {}

Coroot::Coroot(AlgebraId algebra, std::vector<std::pair<int, std::size_t>> terms)
    : algebra_(algebra), terms_(std::move(terms)) {}

Coroot Coroot::operator+(const Coroot& rhs) const {
  if (rhs.algebra_ != algebra_) throw std::invalid_argument("adding coroots of different algebras");
  auto terms = terms_;
  for (const auto& [k, index] : rhs.terms_) {
    auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) { return t.second == index; });
    if (it == terms.end()) {
      terms.emplace_back(k, index);
    } else {
      it->first += k;
    }
  }
  std::erase_if(terms, [](const auto& t) { return t.first == 0; });
  return Coroot(algebra_, std::move(terms));
}

Coroot Coroot::operator-(const Coroot& rhs) const { return *this + rhs * -1; }

Coroot Coroot::operator*(int k) const {
  auto terms = terms_;
  for (auto& t : terms) t.first *= k;
  std::erase_if(terms, [](const auto& t) { return t.first == 0; });
  return Coroot(algebra_, std::move(terms));
}

std::string Coroot::label() const {
  const auto table = positive_root_table(algebra_);
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto [k, index] = terms_[i];
    if (k < 0) {
      out += '-';
    } else if (i > 0) {
      out += '+';
    }
    if (k != 1 && k != -1) out += std::to_string(k < 0 ? -k : k);
    out += "H_{";
    out += table[index].label;
    out += '}';
  }
  return out.empty() ? "0" : out;
}

Rational pair(const Weight& w, const Coroot& h) {
  if (w.algebra() == h.algebra()) return pair_same_algebra(w, h);
  if (w.algebra() == AlgebraId::G2 && h.algebra() == AlgebraId::Sl3) {
    return pair_same_algebra(g2_coords_to_eta(w), h);
  }
  if (w.algebra() == AlgebraId::Sl3 && h.algebra() == AlgebraId::G2) {
    return pair_same_algebra(eta_to_g2_coords(w), h);
  }
  throw std::invalid_argument("cannot pair a weight of " + std::string(algebra_name(w.algebra())) +
                              " with a coroot of " + std::string(algebra_name(h.algebra())));
}

Weight restrict_so7_to_g2(const Weight& lambda) {
  if (lambda.algebra() != AlgebraId::So7) throw std::invalid_argument("restrict_so7_to_g2 expects an so7 weight");
  const Rational& a = lambda[0];
  const Rational& b = lambda[1];
  const Rational& c = lambda[2];
  return Weight(AlgebraId::G2, {Rational(2) * a + b + c, a + b});
}

Weight g2_coords_to_eta(const Weight& w) {
  if (w.algebra() != AlgebraId::G2) throw std::invalid_argument("g2_coords_to_eta expects a g2 weight");
  return Weight(AlgebraId::Sl3, {w[1], w[0] - w[1]});
}

Weight eta_to_g2_coords(const Weight& w) {
  if (w.algebra() != AlgebraId::Sl3) throw std::invalid_argument("eta_to_g2_coords expects an sl3 weight");
  return Weight(AlgebraId::G2, {w[0] + w[1], w[0]});
}

Weight rho(AlgebraId algebra) {
  switch (algebra) {
    case AlgebraId::So7: return Weight(algebra, {Rational(5, 2), Rational(3, 2), Rational(1, 2)});
    case AlgebraId::G2: return Weight(algebra, {Rational(5), Rational(3)});
    case AlgebraId::Sl3: return Weight(algebra, {Rational(2), Rational(1)});
  }
  throw std::logic_error("unknown AlgebraId");
}

Weight root_weight(AlgebraId algebra, std::span<const int> simple_coeffs) {
  const auto table = positive_root_table(algebra);
  if (simple_coeffs.size() != rank(algebra)) throw std::invalid_argument("root_weight: wrong arity");
  std::vector<Rational> coords(rank(algebra));
  for (std::size_t s = 0; s < simple_coeffs.size(); ++s) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      coords[i] += Rational(simple_coeffs[s] * table[s].weight_coords[i]);
    }
  }
  return Weight(algebra, std::move(coords));
}

}  // namespace g2branch
