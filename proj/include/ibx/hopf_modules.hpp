#pragma once

#include "ibx/bialgebra.hpp"

namespace ibx {

// Left and right actions of an algebra H on a space V.
struct ActionData {
  Algebra base;
  Space carrier;
  LinearMap act_left;   // (H,V) -> V
  LinearMap act_right;  // (V,H) -> V

  ActionData() = default;
  ActionData(Algebra h, Space v, LinearMap l, LinearMap r)
      : base(std::move(h)), carrier(std::move(v)), act_left(std::move(l)), act_right(std::move(r)) {
    require_shape(act_left, {base.space, carrier}, {carrier}, "left action");
    require_shape(act_right, {carrier, base.space}, {carrier}, "right action");
  }
};

// Left and right coactions of a coalgebra H on a space V.
struct CoactionData {
  Coalgebra base;
  Space carrier;
  LinearMap phi;  // V -> (H,V)
  LinearMap psi;  // V -> (V,H)

  CoactionData() = default;
  CoactionData(Coalgebra h, Space v, LinearMap l, LinearMap r)
      : base(std::move(h)), carrier(std::move(v)), phi(std::move(l)), psi(std::move(r)) {
    require_shape(phi, {carrier}, {base.space, carrier}, "left coaction");
    require_shape(psi, {carrier}, {carrier, base.space}, "right coaction");
  }
};

struct HopfBimoduleData {
  WeightedInfBialgebra base;
  Space carrier;
  LinearMap act_left, act_right, phi, psi;

  HopfBimoduleData() = default;
  HopfBimoduleData(WeightedInfBialgebra h, Space v, LinearMap l, LinearMap r, LinearMap ph,
                   LinearMap ps)
      : base(std::move(h)), carrier(std::move(v)), act_left(std::move(l)), act_right(std::move(r)),
        phi(std::move(ph)), psi(std::move(ps)) {
    actions();
    coactions();
  }
  ActionData actions() const { return {base.alg, carrier, act_left, act_right}; }
  CoactionData coactions() const { return {base.coalg, carrier, phi, psi}; }
};

// Carrier with its own product and coproduct, sitting over the bialgebra H.
struct BraidedObject {
  WeightedInfBialgebra base;
  Space carrier;
  LinearMap mu, delta;  // on the carrier
  LinearMap act_left, act_right, phi, psi;

  BraidedObject() = default;
  BraidedObject(WeightedInfBialgebra h, Space a, LinearMap m, LinearMap d, LinearMap l,
                LinearMap r, LinearMap ph, LinearMap ps)
      : base(std::move(h)), carrier(std::move(a)), mu(std::move(m)), delta(std::move(d)),
        act_left(std::move(l)), act_right(std::move(r)), phi(std::move(ph)), psi(std::move(ps)) {
    require_shape(mu, {carrier, carrier}, {carrier}, "carrier multiplication");
    require_shape(delta, {carrier}, {carrier, carrier}, "carrier comultiplication");
    hopf();
  }
  const Rational& lambda() const { return base.lambda; }
  HopfBimoduleData hopf() const {
    return {base, carrier, act_left, act_right, phi, psi};
  }
  Algebra carrier_algebra() const { return {carrier, mu}; }
  Coalgebra carrier_coalgebra() const { return {carrier, delta}; }
};

// ---- condition recipes (right side minus left side) ----------------------

namespace recipe {

inline LinearMap bimodule_left(const LinearMap& muH, const LinearMap& l) {
  const Space v = l.outs()[0];
  return l * tp(identity(muH.outs()[0]), l) - l * tp(muH, identity(v));
}
inline LinearMap bimodule_right(const LinearMap& muH, const LinearMap& r) {
  const Space v = r.outs()[0];
  return r * tp(r, identity(muH.outs()[0])) - r * tp(identity(v), muH);
}
inline LinearMap bimodule_mixed(const LinearMap& l, const LinearMap& r) {
  const Space h = l.ins()[0], v = l.outs()[0];
  return l * tp(identity(h), r) - r * tp(l, identity(h));
}
inline LinearMap bicomodule_left(const LinearMap& dH, const LinearMap& phi) {
  const Space h = dH.ins()[0], v = phi.ins()[0];
  return tp(dH, identity(v)) * phi - tp(identity(h), phi) * phi;
}
inline LinearMap bicomodule_right(const LinearMap& dH, const LinearMap& psi) {
  const Space h = dH.ins()[0], v = psi.ins()[0];
  return tp(identity(v), dH) * psi - tp(psi, identity(h)) * psi;
}
inline LinearMap bicomodule_mixed(const LinearMap& phi, const LinearMap& psi) {
  const Space h = phi.outs()[0], v = phi.ins()[0];
  return tp(identity(h), psi) * phi - tp(phi, identity(h)) * psi;
}
// x > (ab) = (x > a) b
inline LinearMap module_algebra_left(const LinearMap& muA, const LinearMap& l) {
  const Space h = l.ins()[0], a = muA.outs()[0];
  return muA * tp(l, identity(a)) - l * tp(identity(h), muA);
}
// (ab) < x = a (b < x)
inline LinearMap module_algebra_right(const LinearMap& muA, const LinearMap& r) {
  const Space h = r.ins()[1], a = muA.outs()[0];
  return muA * tp(identity(a), r) - r * tp(muA, identity(h));
}
// (a < x) b = a (x > b)
inline LinearMap module_algebra_mixed(const LinearMap& muA, const LinearMap& l,
                                      const LinearMap& r) {
  const Space a = muA.outs()[0];
  return muA * tp(identity(a), l) - muA * tp(r, identity(a));
}
// a(-1) (x) D(a(0)) = phi(a1) (x) a2
inline LinearMap comodule_coalgebra_left(const LinearMap& dA, const LinearMap& phi) {
  const Space a = dA.ins()[0], h = phi.outs()[0];
  return tp(phi, identity(a)) * dA - tp(identity(h), dA) * phi;
}
// D(a(0)) (x) a(1) = a1 (x) psi(a2)
inline LinearMap comodule_coalgebra_right(const LinearMap& dA, const LinearMap& psi) {
  const Space a = dA.ins()[0], h = psi.outs()[1];
  return tp(identity(a), psi) * dA - tp(dA, identity(h)) * psi;
}
// a1 (x) phi(a2) = psi(a1) (x) a2
inline LinearMap comodule_coalgebra_mixed(const LinearMap& dA, const LinearMap& phi,
                                          const LinearMap& psi) {
  const Space a = dA.ins()[0];
  return tp(psi, identity(a)) * dA - tp(identity(a), phi) * dA;
}
// phi(x > v) = x1 (x) x2 > v + x v(-1) (x) v(0) + lambda x (x) v
inline LinearMap hopf_left(const LinearMap& muH, const LinearMap& dH, const LinearMap& l,
                           const LinearMap& phi, const Rational& lambda) {
  const Space h = muH.outs()[0], v = l.outs()[0];
  LinearMap rhs = tp(identity(h), l) * tp(dH, identity(v)) +
                  tp(muH, identity(v)) * tp(identity(h), phi) +
                  lambda * tp(identity(h), identity(v));
  return rhs - phi * l;
}
// psi(v < x) = v(0) (x) v(1) x + v < x1 (x) x2 + lambda v (x) x
inline LinearMap hopf_right(const LinearMap& muH, const LinearMap& dH, const LinearMap& r,
                            const LinearMap& psi, const Rational& lambda) {
  const Space h = muH.outs()[0], v = r.outs()[0];
  LinearMap rhs = tp(identity(v), muH) * tp(psi, identity(h)) +
                  tp(r, identity(h)) * tp(identity(v), dH) +
                  lambda * tp(identity(v), identity(h));
  return rhs - psi * r;
}
// psi(x > v) = x > v(0) (x) v(1)
inline LinearMap hopf_left_right(const LinearMap& l, const LinearMap& psi) {
  const Space h = l.ins()[0];
  return tp(l, identity(h)) * tp(identity(h), psi) - psi * l;
}
// phi(v < x) = v(-1) (x) v(0) < x
inline LinearMap hopf_right_left(const LinearMap& r, const LinearMap& phi) {
  const Space h = r.ins()[1];
  return tp(identity(h), r) * tp(phi, identity(h)) - phi * r;
}
// D(ab) = a1 (x) a2 b + a b1 (x) b2 + a(0) (x) a(1) > b + a < b(-1) (x) b(0) + lambda a (x) b
inline LinearMap braided_compat(const LinearMap& muA, const LinearMap& dA, const LinearMap& l,
                                const LinearMap& r, const LinearMap& phi, const LinearMap& psi,
                                const Rational& lambda) {
  const Space a = muA.outs()[0];
  LinearMap id = identity(a);
  LinearMap rhs = tp(id, muA) * tp(dA, id) + tp(muA, id) * tp(id, dA) +
                  tp(id, l) * tp(psi, id) + tp(r, id) * tp(id, phi) + lambda * tp(id, id);
  return rhs - dA * muA;
}
// phi(ab) = a(-1) (x) a(0) b
inline LinearMap comodule_algebra_left(const LinearMap& muA, const LinearMap& phi) {
  const Space a = muA.outs()[0], h = phi.outs()[0];
  return tp(identity(h), muA) * tp(phi, identity(a)) - phi * muA;
}
// psi(ab) = a b(0) (x) b(1)
inline LinearMap comodule_algebra_right(const LinearMap& muA, const LinearMap& psi) {
  const Space a = muA.outs()[0], h = psi.outs()[1];
  return tp(muA, identity(h)) * tp(identity(a), psi) - psi * muA;
}
// D(x > a) = x > a1 (x) a2
inline LinearMap module_coalgebra_left(const LinearMap& dA, const LinearMap& l) {
  const Space a = dA.ins()[0];
  return tp(l, identity(a)) * tp(identity(l.ins()[0]), dA) - dA * l;
}
// D(a < x) = a1 (x) a2 < x
inline LinearMap module_coalgebra_right(const LinearMap& dA, const LinearMap& r) {
  const Space a = dA.ins()[0];
  return tp(identity(a), r) * tp(dA, identity(r.ins()[1])) - dA * r;
}

}  // namespace recipe

inline CheckReport check_bimodule(const ActionData& d) {
  return evaluate({{"BIMOD-1", recipe::bimodule_left(d.base.mu, d.act_left)},
                   {"BIMOD-2", recipe::bimodule_right(d.base.mu, d.act_right)},
                   {"BIMOD-3", recipe::bimodule_mixed(d.act_left, d.act_right)}});
}

inline CheckReport check_bicomodule(const CoactionData& d) {
  return evaluate({{"BICOMOD-1", recipe::bicomodule_left(d.base.delta, d.phi)},
                   {"BICOMOD-2", recipe::bicomodule_right(d.base.delta, d.psi)},
                   {"BICOMOD-3", recipe::bicomodule_mixed(d.phi, d.psi)}});
}

inline CheckReport check_bimodule_algebra(const ActionData& d, const Algebra& carrier) {
  if (!(carrier.space == d.carrier)) throw DimensionMismatch("carrier algebra on another space");
  if (!check_bimodule(d).ok()) throw PreconditionFailed("actions do not form a bimodule");
  return evaluate(
      {{"MODALG-1", recipe::module_algebra_left(carrier.mu, d.act_left)},
       {"MODALG-2", recipe::module_algebra_right(carrier.mu, d.act_right)},
       {"MODALG-3", recipe::module_algebra_mixed(carrier.mu, d.act_left, d.act_right)}});
}

inline CheckReport check_bicomodule_coalgebra(const CoactionData& d, const Coalgebra& carrier) {
  if (!(carrier.space == d.carrier)) throw DimensionMismatch("carrier coalgebra on another space");
  if (!check_bicomodule(d).ok()) throw PreconditionFailed("coactions do not form a bicomodule");
  return evaluate(
      {{"COMODCOALG-1", recipe::comodule_coalgebra_left(carrier.delta, d.phi)},
       {"COMODCOALG-2", recipe::comodule_coalgebra_right(carrier.delta, d.psi)},
       {"COMODCOALG-3", recipe::comodule_coalgebra_mixed(carrier.delta, d.phi, d.psi)}});
}

inline CheckReport check_hopf_module_left(const HopfBimoduleData& d) {
  const auto& H = d.base;
  bool module = evaluate(Condition{"", recipe::bimodule_left(H.mu(), d.act_left)}).ok();
  bool comodule = evaluate(Condition{"", recipe::bicomodule_left(H.delta(), d.phi)}).ok();
  if (!module || !comodule)
    throw PreconditionFailed("left action/coaction are not a module and comodule");
  return evaluate(
      Condition{"HM1", recipe::hopf_left(H.mu(), H.delta(), d.act_left, d.phi, H.lambda)});
}

inline CheckReport check_hopf_module_right(const HopfBimoduleData& d) {
  const auto& H = d.base;
  bool module = evaluate(Condition{"", recipe::bimodule_right(H.mu(), d.act_right)}).ok();
  bool comodule = evaluate(Condition{"", recipe::bicomodule_right(H.delta(), d.psi)}).ok();
  if (!module || !comodule)
    throw PreconditionFailed("right action/coaction are not a module and comodule");
  return evaluate(
      Condition{"HM2", recipe::hopf_right(H.mu(), H.delta(), d.act_right, d.psi, H.lambda)});
}

inline std::vector<Condition> hopf_bimodule_conditions(const HopfBimoduleData& d) {
  const auto& H = d.base;
  return {{"BIMOD-1", recipe::bimodule_left(H.mu(), d.act_left)},
          {"BIMOD-2", recipe::bimodule_right(H.mu(), d.act_right)},
          {"BIMOD-3", recipe::bimodule_mixed(d.act_left, d.act_right)},
          {"BICOMOD-1", recipe::bicomodule_left(H.delta(), d.phi)},
          {"BICOMOD-2", recipe::bicomodule_right(H.delta(), d.psi)},
          {"BICOMOD-3", recipe::bicomodule_mixed(d.phi, d.psi)},
          {"HM1", recipe::hopf_left(H.mu(), H.delta(), d.act_left, d.phi, H.lambda)},
          {"HM2", recipe::hopf_right(H.mu(), H.delta(), d.act_right, d.psi, H.lambda)},
          {"HM3", recipe::hopf_left_right(d.act_left, d.psi)},
          {"HM4", recipe::hopf_right_left(d.act_right, d.phi)}};
}

inline CheckReport check_hopf_bimodule(const HopfBimoduleData& d) {
  return evaluate(hopf_bimodule_conditions(d));
}

// s(a (x) b) = a(0) (x) a(1) > b + a < b(-1) (x) b(0) + lambda a (x) b
inline LinearMap braiding_map(const BraidedObject& o) {
  LinearMap id = identity(o.carrier);
  return tp(id, o.act_left) * tp(o.psi, id) + tp(o.act_right, id) * tp(id, o.phi) +
         o.lambda() * tp(id, id);
}
inline Tensor braiding_map(const BraidedObject& o, const Tensor& a, const Tensor& b) {
  return braiding_map(o).apply(tensor_product(a, b));
}

// The nine components of the biproduct compatibility, ordered by label.
inline std::vector<Condition> bosonisation_conditions(const BraidedObject& o) {
  const auto& H = o.base;
  return {
      {"T3-1", recipe::braided_compat(o.mu, o.delta, o.act_left, o.act_right, o.phi, o.psi,
                                      o.lambda())},
      {"T3-2", recipe::hopf_left(H.mu(), H.delta(), o.act_left, o.phi, o.lambda())},
      {"T3-3", recipe::hopf_right(H.mu(), H.delta(), o.act_right, o.psi, o.lambda())},
      {"T3-4", recipe::hopf_left_right(o.act_left, o.psi)},
      {"T3-5", recipe::hopf_right_left(o.act_right, o.phi)},
      {"T3-6", recipe::comodule_algebra_left(o.mu, o.phi)},
      {"T3-7", recipe::comodule_algebra_right(o.mu, o.psi)},
      {"T3-8", recipe::module_coalgebra_left(o.delta, o.act_left)},
      {"T3-9", recipe::module_coalgebra_right(o.delta, o.act_right)}};
}

// Everything the biproduct needs from the carrier besides the nine
// compatibility components, plus H itself being a bialgebra.
inline std::vector<Condition> bosonisation_hypotheses(const BraidedObject& o) {
  const auto& H = o.base;
  return {{"H-ASSOC", assoc_residual(H.mu())},
          {"H-COASSOC", coassoc_residual(H.delta())},
          {"H-COMPAT", compat_residual(H.mu(), H.delta(), H.lambda)},
          {"ASSOC", assoc_residual(o.mu)},
          {"COASSOC", coassoc_residual(o.delta)},
          {"BIMOD-1", recipe::bimodule_left(H.mu(), o.act_left)},
          {"BIMOD-2", recipe::bimodule_right(H.mu(), o.act_right)},
          {"BIMOD-3", recipe::bimodule_mixed(o.act_left, o.act_right)},
          {"BICOMOD-1", recipe::bicomodule_left(H.delta(), o.phi)},
          {"BICOMOD-2", recipe::bicomodule_right(H.delta(), o.psi)},
          {"BICOMOD-3", recipe::bicomodule_mixed(o.phi, o.psi)},
          {"MODALG-1", recipe::module_algebra_left(o.mu, o.act_left)},
          {"MODALG-2", recipe::module_algebra_right(o.mu, o.act_right)},
          {"MODALG-3", recipe::module_algebra_mixed(o.mu, o.act_left, o.act_right)},
          {"COMODCOALG-1", recipe::comodule_coalgebra_left(o.delta, o.phi)},
          {"COMODCOALG-2", recipe::comodule_coalgebra_right(o.delta, o.psi)},
          {"COMODCOALG-3", recipe::comodule_coalgebra_mixed(o.delta, o.phi, o.psi)}};
}

// Carrier is an algebra and coalgebra among Hopf bimodules over H, plus the
// braided compatibility. The base bialgebra itself is not checked here.
inline CheckReport check_braided(const BraidedObject& o) {
  std::vector<Condition> cs = hopf_bimodule_conditions(o.hopf());
  auto hyp = bosonisation_hypotheses(o);
  for (auto& c : hyp)
    if (c.id.rfind("H-", 0) != 0 && c.id.rfind("BI", 0) != 0) cs.push_back(c);
  auto nine = bosonisation_conditions(o);
  cs.push_back({"COMODALG-1", nine[5].residual});
  cs.push_back({"COMODALG-2", nine[6].residual});
  cs.push_back({"MODCOALG-1", nine[7].residual});
  cs.push_back({"MODCOALG-2", nine[8].residual});
  cs.push_back({"BB1", nine[0].residual});
  return evaluate(cs);
}

inline WeightedInfBialgebra biproduct(const BraidedObject& o) {
  const Space& A = o.carrier;
  const Space& H = o.base.space();
  Space E = direct_sum(A, H, "E");
  LinearMap iA({A}, {E}), iH({H}, {E}), pA({E}, {A}), pH({E}, {H});
  for (int i = 0; i < A.dim(); ++i) {
    iA.set({i, i}, 1);
    pA.set({i, i}, 1);
  }
  for (int i = 0; i < H.dim(); ++i) {
    iH.set({i, A.dim() + i}, 1);
    pH.set({A.dim() + i, i}, 1);
  }
  LinearMap mu = iA * o.mu * tp(pA, pA) + iA * o.act_left * tp(pH, pA) +
                 iA * o.act_right * tp(pA, pH) + iH * o.base.mu() * tp(pH, pH);
  LinearMap delta = tp(iA, iA) * o.delta * pA + tp(iH, iA) * o.phi * pA +
                    tp(iA, iH) * o.psi * pA + tp(iH, iH) * o.base.delta() * pH;
  return WeightedInfBialgebra(Algebra(E, mu), Coalgebra(E, delta), o.lambda());
}

struct BosonisationReport {
  CheckReport forward;     // bialgebra checks on the biproduct
  CheckReport backward;    // T3-1 .. T3-9
  CheckReport hypotheses;  // H bialgebra, carrier algebra/coalgebra, (co)module axioms
  bool hypotheses_hold() const { return hypotheses.ok(); }
  // Biproduct valid iff hypotheses and the nine components all hold.
  bool consistent() const { return forward.ok() == (hypotheses.ok() && backward.ok()); }
};

inline BosonisationReport verify_bosonisation(const BraidedObject& o) {
  return {check_bialgebra(biproduct(o)), evaluate(bosonisation_conditions(o)),
          evaluate(bosonisation_hypotheses(o))};
}

inline BraidedObject change_basis(const BraidedObject& o, const BasisChange& bc) {
  return BraidedObject(change_basis(o.base, bc), o.carrier, change_basis(o.mu, bc),
                       change_basis(o.delta, bc), change_basis(o.act_left, bc),
                       change_basis(o.act_right, bc), change_basis(o.phi, bc),
                       change_basis(o.psi, bc));
}

}  // namespace ibx
