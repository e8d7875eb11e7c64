#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "g2branch/weight.hpp"

namespace g2branch::oracle {

using Vec3 = std::array<Rational, 3>;

inline Rational dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

inline Vec3 axpy(const Rational& k, const Vec3& x, const Vec3& y) {
  return {k * x[0] + y[0], k * x[1] + y[1], k * x[2] + y[2]};
}

// Euclidean realizations: so7 in the ε basis; g2 with a1 = e1-e2, a2 = -2e1+e2+e3;
// sl3 with η_i = e_i - (e1+e2+e3)/3.
inline Vec3 euclid(const Weight& w) {
  const Rational z(0);
  switch (w.algebra()) {
    case AlgebraId::So7: return {w[0], w[1], w[2]};
    case AlgebraId::G2: {
      const Vec3 a1{1, -1, 0};
      const Vec3 a2{-2, 1, 1};
      return axpy(w[0], a1, axpy(w[1], a2, {z, z, z}));
    }
    case AlgebraId::Sl3: {
      const Rational t(1, 3);
      const Vec3 n1{Rational(1) - t, -t, -t};
      const Vec3 n2{-t, Rational(1) - t, -t};
      return axpy(w[0], n1, axpy(w[1], n2, {z, z, z}));
    }
  }
  return {z, z, z};
}

// 2(w, β)/(β, β) from the Gram matrix; β is a root of w's algebra given as a weight.
inline Rational gram_pairing(const Weight& w, const Weight& beta) {
  const Vec3 x = euclid(w);
  const Vec3 b = euclid(beta);
  return Rational(2) * dot(x, b) / dot(b, b);
}

// The twelve dot-action formulas, w . (u a1 + v a2), written out literally.
struct DotFormula {
  std::string name;
  std::function<std::array<Rational, 2>(const Rational&, const Rational&)> image;
};

inline std::vector<DotFormula> literal_dot_formulas() {
  using R = Rational;
  using P = std::array<Rational, 2>;
  return {
      {"1", [](const R& u, const R& v) { return P{u, v}; }},
      {"s1", [](const R& u, const R& v) { return P{-u + R(3) * v - R(1), v}; }},
      {"s2", [](const R& u, const R& v) { return P{u, u - v - R(1)}; }},
      {"s2s1", [](const R& u, const R& v) { return P{-u + R(3) * v - R(1), -u + R(2) * v - R(2)}; }},
      {"s1s2", [](const R& u, const R& v) { return P{R(2) * u - R(3) * v - R(4), u - v - R(1)}; }},
      {"s1s2s1", [](const R& u, const R& v) { return P{R(-2) * u + R(3) * v - R(6), -u + R(2) * v - R(2)}; }},
      {"-1", [](const R& u, const R& v) { return P{-u - R(10), -v - R(6)}; }},
      {"-s1", [](const R& u, const R& v) { return P{u - R(3) * v - R(9), -v - R(6)}; }},
      {"-s2", [](const R& u, const R& v) { return P{-u - R(10), -u + v - R(5)}; }},
      {"-s2s1", [](const R& u, const R& v) { return P{u - R(3) * v - R(9), u - R(2) * v - R(4)}; }},
      {"-s1s2", [](const R& u, const R& v) { return P{R(-2) * u + R(3) * v - R(6), -u + v - R(5)}; }},
      {"-s1s2s1", [](const R& u, const R& v) { return P{R(2) * u - R(3) * v - R(4), u - R(2) * v - R(4)}; }},
  };
}

// Highest weights of F(i) ⊗ F(n) by stripping the weight multiset top-down.
inline std::vector<int> brute_force_gl2(int i, int n) {
  std::map<int, int> weights;
  for (int s = 0; s <= i; ++s) {
    for (int t = 0; t <= n; ++t) ++weights[(i - 2 * s) + (n - 2 * t)];
  }
  std::vector<int> out;
  while (!weights.empty()) {
    const int top = weights.rbegin()->first;
    out.push_back(top);
    for (int k = top; k >= -top; k -= 2) {
      if (--weights[k] == 0) weights.erase(k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Random rational with a small numerator and a denominator in 1..30.
inline Rational random_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 121) - 60;
  const long den = static_cast<long>(rng() % 30) + 1;
  return Rational(num, den);
}

}  // namespace g2branch::oracle
