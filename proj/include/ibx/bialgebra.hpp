#pragma once

#include <optional>

#include "ibx/check.hpp"

namespace ibx {

struct InvalidUnit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Algebra {
  Space space;
  LinearMap mu;                   // (S,S) -> S
  std::optional<LinearMap> unit;  // () -> S

  Algebra() = default;
  Algebra(Space s, LinearMap m, std::optional<LinearMap> u = std::nullopt)
      : space(std::move(s)), mu(std::move(m)), unit(std::move(u)) {
    require_shape(mu, {space, space}, {space}, "multiplication");
    if (unit) {
      require_shape(*unit, {}, {space}, "unit");
      LinearMap id = identity(space);
      if (!(mu * tp(*unit, id) == id) || !(mu * tp(id, *unit) == id))
        throw InvalidUnit("unit is not a two-sided identity for the multiplication");
    }
  }
  int dim() const { return space.dim(); }
};

struct Coalgebra {
  Space space;
  LinearMap delta;  // S -> (S,S)

  Coalgebra() = default;
  Coalgebra(Space s, LinearMap d) : space(std::move(s)), delta(std::move(d)) {
    require_shape(delta, {space}, {space, space}, "comultiplication");
  }
  int dim() const { return space.dim(); }
};

// Algebra + coalgebra on one space with
//   delta(ab) = a b1 (x) b2 + a1 (x) a2 b + lambda a (x) b.
struct WeightedInfBialgebra {
  Algebra alg;
  Coalgebra coalg;
  Rational lambda;

  WeightedInfBialgebra() = default;
  WeightedInfBialgebra(Algebra a, Coalgebra c, Rational l)
      : alg(std::move(a)), coalg(std::move(c)), lambda(std::move(l)) {
    if (!(alg.space == coalg.space))
      throw DimensionMismatch("algebra and coalgebra live on different spaces");
  }
  const Space& space() const { return alg.space; }
  const LinearMap& mu() const { return alg.mu; }
  const LinearMap& delta() const { return coalg.delta; }
};

// ---- residual recipes on raw maps ---------------------------------------

inline LinearMap assoc_residual(const LinearMap& mu) {
  const Space s = mu.outs()[0];
  LinearMap id = identity(s);
  return mu * tp(id, mu) - mu * tp(mu, id);
}

inline LinearMap coassoc_residual(const LinearMap& delta) {
  const Space s = delta.ins()[0];
  LinearMap id = identity(s);
  return tp(delta, id) * delta - tp(id, delta) * delta;
}

// Right side minus left side of the weighted compatibility.
inline LinearMap compat_residual(const LinearMap& mu, const LinearMap& delta,
                                 const Rational& lambda) {
  const Space s = mu.outs()[0];
  LinearMap id = identity(s);
  LinearMap rhs = tp(mu, id) * tp(id, delta) + tp(id, mu) * tp(delta, id) +
                  lambda * tp(id, id);
  return rhs - delta * mu;
}

inline CheckReport check_associativity(const Algebra& a) {
  return evaluate(Condition{"ASSOC", assoc_residual(a.mu)});
}
inline CheckReport check_coassociativity(const Coalgebra& c) {
  return evaluate(Condition{"COASSOC", coassoc_residual(c.delta)});
}
inline CheckReport check_weighted_compatibility(const WeightedInfBialgebra& b) {
  return evaluate(Condition{"COMPAT", compat_residual(b.mu(), b.delta(), b.lambda)});
}
inline CheckReport check_bialgebra(const WeightedInfBialgebra& b) {
  CheckReport r = check_associativity(b.alg);
  r += check_coassociativity(b.coalg);
  r += check_weighted_compatibility(b);
  return r;
}

// Delta(1) for a unital bialgebra. A valid one gives -lambda (1 (x) 1).
inline Tensor coproduct_of_unit(const WeightedInfBialgebra& b) {
  if (!b.alg.unit) throw std::invalid_argument("algebra has no unit");
  return (b.delta() * *b.alg.unit).tensor();
}

inline Algebra change_basis(const Algebra& a, const BasisChange& bc) {
  std::optional<LinearMap> u;
  if (a.unit) u = change_basis(*a.unit, bc);
  return Algebra(a.space, change_basis(a.mu, bc), u);
}
inline Coalgebra change_basis(const Coalgebra& c, const BasisChange& bc) {
  return Coalgebra(c.space, change_basis(c.delta, bc));
}
inline WeightedInfBialgebra change_basis(const WeightedInfBialgebra& b, const BasisChange& bc) {
  return WeightedInfBialgebra(change_basis(b.alg, bc), change_basis(b.coalg, bc), b.lambda);
}

}  // namespace ibx
