#pragma once

#include "ibx/quasitriangular.hpp"

namespace ibx {

struct UnknownExample : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Algebra from a rule giving the product of basis elements as (index, coeff) pairs.
template <typename Rule>
Algebra make_algebra(const std::string& name, std::vector<std::string> labels, Rule rule,
                     std::vector<Rational> unit) {
  Space s(name, std::move(labels));
  LinearMap mu({s, s}, {s});
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      for (auto [k, c] : rule(i, j)) mu.add({i, j, k}, c);
  std::optional<LinearMap> u;
  if (!unit.empty()) {
    LinearMap e({}, {s});
    for (int i = 0; i < s.dim(); ++i) e.set({i}, unit[i]);
    u = e;
  }
  return Algebra(s, mu, u);
}

using Terms = std::vector<std::pair<int, Rational>>;

}  // namespace detail

inline std::vector<std::string> algebra_names() {
  return {"k", "dual-numbers", "k2", "upper2", "mat2", "truncated3", "null1", "null2"};
}

// Small algebras with fixed bases.
//   k            one-dimensional unital
//   dual-numbers 1, x with x^2 = 0
//   k2           orthogonal idempotents e1, e2
//   upper2       upper triangular 2x2 matrices
//   mat2         all 2x2 matrices, basis e11 e12 e21 e22
//   truncated3   1, x, x^2 with x^3 = 0
//   null1/null2  zero multiplication, no unit
inline Algebra named_algebra(const std::string& name, const std::string& space = "A") {
  using detail::Terms;
  if (name == "k")
    return detail::make_algebra(space, {"1"}, [](int, int) { return Terms{{0, 1}}; }, {1});
  if (name == "dual-numbers")
    return detail::make_algebra(
        space, {"1", "x"},
        [](int i, int j) { return i + j <= 1 ? Terms{{i + j, 1}} : Terms{}; }, {1, 0});
  if (name == "truncated3")
    return detail::make_algebra(
        space, {"1", "x", "x2"},
        [](int i, int j) { return i + j <= 2 ? Terms{{i + j, 1}} : Terms{}; }, {1, 0, 0});
  if (name == "k2")
    return detail::make_algebra(
        space, {"e1", "e2"}, [](int i, int j) { return i == j ? Terms{{i, 1}} : Terms{}; },
        {1, 1});
  if (name == "mat2" || name == "upper2") {
    // matrix units e_ab, index 2a+b; upper2 drops e21
    bool upper = name == "upper2";
    std::vector<std::pair<int, int>> units = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    if (upper) units.erase(units.begin() + 2);
    std::vector<std::string> labels;
    for (auto [a, b] : units) labels.push_back("e" + std::to_string(a + 1) + std::to_string(b + 1));
    auto rule = [units](int i, int j) {
      auto [a, b] = units[i];
      auto [c, d] = units[j];
      if (b != c) return Terms{};
      for (int k = 0; k < static_cast<int>(units.size()); ++k)
        if (units[k] == std::make_pair(a, d)) return Terms{{k, 1}};
      return Terms{};
    };
    std::vector<Rational> unit(units.size());
    for (std::size_t k = 0; k < units.size(); ++k)
      if (units[k].first == units[k].second) unit[k] = 1;
    return detail::make_algebra(space, labels, rule, unit);
  }
  if (name == "null1" || name == "null2") {
    int n = name == "null1" ? 1 : 2;
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("n" + std::to_string(i));
    return detail::make_algebra(space, labels, [](int, int) { return Terms{}; }, {});
  }
  throw UnknownExample("unknown algebra '" + name + "'");
}

inline Tensor unit_square(const Algebra& a) {
  Tensor u = a.unit->tensor();
  return tensor_product(u, u);
}

// A fixed solution of the weighted AYBE used by the principal examples.
inline Tensor catalog_r(const std::string& name, const Algebra& a, const Rational& lambda) {
  if (name == "mat2") {
    std::vector<Rational> coeffs = {0, lambda.is_zero() ? Rational(1) : lambda};
    // e11 (x) e11, e11 (x) e22, e12 (x) e12, e22 (x) e11, e22 (x) e22
    auto sols = solve_wayb_grid(a, lambda, coeffs, {{0, 0}, {0, 3}, {1, 1}, {3, 0}, {3, 3}});
    for (auto& s : sols)
      if (!s.is_zero()) return s;
    return Tensor({a.space, a.space});
  }
  if (lambda.is_zero() && name == "dual-numbers") {
    Tensor r({a.space, a.space});
    r.set({1, 1}, 1);
    return r;
  }
  return lambda * unit_square(a);
}

inline std::vector<std::string> example_names() {
  return {"zero-coproduct", "k-principal", "dual-numbers-principal", "k2-principal",
          "mat2-principal"};
}

//   zero-coproduct          dual numbers with delta = 0 (weight 0 only)
//   <algebra>-principal     delta = a r - r a - lambda a (x) 1 for a fixed WAYB solution r
inline WeightedInfBialgebra example_library(const std::string& name, const Rational& lambda) {
  if (name == "zero-coproduct") {
    if (!lambda.is_zero())
      throw std::invalid_argument("zero-coproduct is a bialgebra only at weight 0");
    Algebra a = named_algebra("dual-numbers");
    return WeightedInfBialgebra(a, Coalgebra(a.space, zero_map({a.space}, {a.space, a.space})),
                                lambda);
  }
  const std::string suffix = "-principal";
  if (name.size() > suffix.size() && name.ends_with(suffix)) {
    std::string base = name.substr(0, name.size() - suffix.size());
    if (base != "k" && base != "dual-numbers" && base != "k2" && base != "mat2")
      throw UnknownExample("unknown example '" + name + "'");
    Algebra a = named_algebra(base);
    return principal_bialgebra(RMatrix(a, catalog_r(base, a, lambda), lambda));
  }
  throw UnknownExample("unknown example '" + name + "'");
}

}  // namespace ibx
