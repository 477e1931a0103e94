#pragma once

#include <numeric>

#include "ibx/polysolve.hpp"
#include "ibx/products.hpp"
#include "ibx/quasitriangular.hpp"

namespace ibx {

struct NotSplit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct TypeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Extending data of a fixed structure A by a space V. V sits in the H slot
// of Blocks; each kind allows a fixed subset of the block maps to be nonzero.
//   A1   a1-type product         |>, <|, theta, mu_V
//   A2   a2-type product         ->, <-, |>, <|, sigma, mu_V
//   C1   c1-type coproduct       phi, psi, rho, gamma, P, delta_V
//   C2   c2-type coproduct       rho, gamma, Q, delta_V
//   I    bialgebra, type I       |>, <|, theta, phi, psi, P, mu_V, delta_V
//   II   bialgebra, type II      ->, <-, |>, <|, sigma, rho, gamma, Q, mu_V, delta_V
//   Special  type II without harpoons
enum class ExtKind { A1, A2, C1, C2, I, II, Special };

inline const char* to_string(ExtKind k) {
  switch (k) {
    case ExtKind::A1: return "a1";
    case ExtKind::A2: return "a2";
    case ExtKind::C1: return "c1";
    case ExtKind::C2: return "c2";
    case ExtKind::I: return "I";
    case ExtKind::II: return "II";
    case ExtKind::Special: return "special";
  }
  return "?";
}
inline ExtKind parse_ext_kind(const std::string& s) {
  for (ExtKind k : {ExtKind::A1, ExtKind::A2, ExtKind::C1, ExtKind::C2, ExtKind::I, ExtKind::II,
                    ExtKind::Special})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown extending datum type '" + s + "'");
}

inline bool has_product(ExtKind k) { return k != ExtKind::C1 && k != ExtKind::C2; }
inline bool has_coproduct(ExtKind k) { return k != ExtKind::A1 && k != ExtKind::A2; }

inline std::vector<std::string> datum_roles(ExtKind k) {
  switch (k) {
    case ExtKind::A1: return {"tri_l", "tri_r", "theta", "mu_H"};
    case ExtKind::A2: return {"harpoon_l", "harpoon_r", "tri_l", "tri_r", "sigma", "mu_H"};
    case ExtKind::C1: return {"phi", "psi", "rho", "gamma", "P", "delta_H"};
    case ExtKind::C2: return {"rho", "gamma", "Q", "delta_H"};
    case ExtKind::I:
      return {"tri_l", "tri_r", "theta", "phi", "psi", "P", "mu_H", "delta_H"};
    case ExtKind::II:
      return {"harpoon_l", "harpoon_r", "tri_l", "tri_r", "sigma", "rho", "gamma", "Q", "mu_H",
              "delta_H"};
    case ExtKind::Special:
      return {"tri_l", "tri_r", "sigma", "rho", "gamma", "Q", "mu_H", "delta_H"};
  }
  return {};
}
inline std::vector<std::string> fixed_roles(ExtKind k) {
  std::vector<std::string> out;
  if (has_product(k)) out.push_back("mu_A");
  if (has_coproduct(k)) out.push_back("delta_A");
  return out;
}

struct ExtendingDatum {
  ExtKind kind = ExtKind::A1;
  Blocks b;

  const Space& A() const { return b.A; }
  const Space& V() const { return b.H; }

  // Throws if a block outside the kind's roles is nonzero.
  void validate() const {
    b.validate();
    auto allowed = datum_roles(kind), fixed = fixed_roles(kind);
    allowed.insert(allowed.end(), fixed.begin(), fixed.end());
    for (auto& [n, m] : b.roles())
      if (!m->is_zero() && std::find(allowed.begin(), allowed.end(), n) == allowed.end())
        throw std::invalid_argument(std::string("role ") + n + " is not part of a " +
                                    to_string(kind) + " extending datum");
    if (!(has_product(kind) && has_coproduct(kind)) && !b.lambda.is_zero())
      throw std::invalid_argument("only bialgebra extending data carry a weight");
  }
};

// Zero datum of the given kind over a fixed structure.
inline ExtendingDatum zero_datum(ExtKind k, const Space& A, const Space& V) {
  return {k, Blocks(A, V)};
}
inline ExtendingDatum zero_datum(ExtKind k, const Algebra& A, const Space& V) {
  if (has_coproduct(k)) throw TypeMismatch("datum type needs a coalgebra part");
  ExtendingDatum d = zero_datum(k, A.space, V);
  d.b.muA = A.mu;
  return d;
}
inline ExtendingDatum zero_datum(ExtKind k, const Coalgebra& A, const Space& V) {
  if (has_product(k)) throw TypeMismatch("datum type needs an algebra part");
  ExtendingDatum d = zero_datum(k, A.space, V);
  d.b.dA = A.delta;
  return d;
}
inline ExtendingDatum zero_datum(ExtKind k, const WeightedInfBialgebra& A, const Space& V) {
  if (!has_product(k) || !has_coproduct(k)) throw TypeMismatch("datum type is not a bialgebra type");
  ExtendingDatum d = zero_datum(k, A.space(), V);
  d.b.muA = A.mu();
  d.b.dA = A.delta();
  d.b.lambda = A.lambda;
  return d;
}

inline Algebra unified_product(const ExtendingDatum& d) {
  if (!has_product(d.kind)) throw TypeMismatch("coalgebra datum has no product");
  d.validate();
  return assemble_product(d.b);
}
inline Coalgebra unified_coproduct(const ExtendingDatum& d) {
  if (!has_coproduct(d.kind)) throw TypeMismatch("algebra datum has no coproduct");
  d.validate();
  return assemble_coproduct(d.b);
}
inline WeightedInfBialgebra unified_bialgebra(const ExtendingDatum& d) {
  if (!has_product(d.kind) || !has_coproduct(d.kind))
    throw TypeMismatch("datum is not of a bialgebra type");
  d.validate();
  return assemble_bialgebra(d.b);
}

// Axioms of the assembled structure, checked directly.
inline CheckReport check_unified_structure(const ExtendingDatum& d) {
  d.validate();
  CheckReport r;
  if (has_product(d.kind)) r += check_associativity(assemble_product(d.b));
  if (has_coproduct(d.kind)) r += check_coassociativity(assemble_coproduct(d.b));
  if (has_product(d.kind) && has_coproduct(d.kind))
    r += check_weighted_compatibility(assemble_bialgebra(d.b));
  return r;
}

// ---- condition lists ------------------------------------------------------

inline std::vector<Condition> conditions_a1(const Blocks& b) {
  return relabel(assoc_components(b), {{"A1", "CP1"},
                                       {"A2", "CP2"},
                                       {"A3", "CP3"},
                                       {"A4", "CP4"},
                                       {"A5", "CP5"},
                                       {"A6", "CP6"},
                                       {"A7", "CC2"},
                                       {"A8", "CC5"},
                                       {"A-ASSOC", "CC6"}});
}
inline std::vector<Condition> conditions_a2(const Blocks& b) {
  return relabel(assoc_components(b), {{"B1.1", "CP1"},
                                       {"B1.2", "CP2"},
                                       {"B1.3", "CP3"},
                                       {"B2", "CP4"},
                                       {"B3", "CP5"},
                                       {"B4", "CP6"},
                                       {"B5", "CP7"},
                                       {"B6", "CP8"},
                                       {"B7", "CP9"},
                                       {"B8", "CP10"},
                                       {"B9", "CP11"},
                                       {"B10", "CP12"},
                                       {"B11", "CC1"},
                                       {"B12", "CC5"},
                                       {"A-ASSOC", "CC6"}});
}
// Besides the mixed identities, c1 needs the two cycle identities on P
// (CC3 and CC7); without them the coproduct is not coassociative.
inline std::vector<Condition> conditions_c1(const Blocks& b) {
  return relabel(coassoc_components(b), {{"C1", "CCP1"},
                                         {"C2", "CCP2"},
                                         {"C3", "CCP3"},
                                         {"C4", "CCP4"},
                                         {"C5", "CCP5"},
                                         {"C6", "CCP6"},
                                         {"C7", "CCP7"},
                                         {"C8", "CCP8"},
                                         {"C9", "CCP9"},
                                         {"C10", "CCP10"},
                                         {"C11", "CCP11"},
                                         {"C12", "CCP12"},
                                         {"CC3", "CC3"},
                                         {"CC7", "CC7"},
                                         {"A-COASSOC", "CC8"}});
}
inline std::vector<Condition> conditions_c2(const Blocks& b) {
  return relabel(coassoc_components(b), {{"D1", "CCP3"},
                                         {"D2", "CCP4"},
                                         {"D3", "CCP6"},
                                         {"D4", "CCP10"},
                                         {"D5", "CCP11"},
                                         {"D6", "CCP12"},
                                         {"D7", "CC4"},
                                         {"D8", "CC7"},
                                         {"A-COASSOC", "CC8"}});
}
// E5, E6 and E10 vanish identically for type I data and are not listed.
inline std::vector<Condition> conditions_type_I(const Blocks& b) {
  return relabel(compat_components(b), {{"E1", "CDM1"},
                                        {"E2", "CDM2"},
                                        {"E3", "CDM3"},
                                        {"E4", "CDM4"},
                                        {"E7", "CDM7"},
                                        {"E8", "CDM8"},
                                        {"E9", "CDM9"},
                                        {"E11", "CDM11"},
                                        {"E12", "CDM12"},
                                        {"E13", "CDM13"},
                                        {"E14", "CDM14"},
                                        {"E15", "CBB2"},
                                        {"A-COMPAT", "CBB1"}});
}
inline std::vector<Condition> conditions_type_II(const Blocks& b) {
  return relabel(compat_components(b), {{"F1", "CDM3"},
                                        {"F2", "CDM4"},
                                        {"F3", "CDM5"},
                                        {"F4", "CDM6"},
                                        {"F5", "CDM7"},
                                        {"F6", "CDM8"},
                                        {"F7", "CDM10"},
                                        {"F8", "CDM11"},
                                        {"F9", "CDM12"},
                                        {"F10", "CDM13"},
                                        {"F11", "CDM14"},
                                        {"F12", "CBB2"},
                                        {"A-COMPAT", "CBB1"}});
}

// Special case, written out on its own rather than through the block table.
inline std::vector<Condition> conditions_special(const Blocks& b) {
  const LinearMap iA = identity(b.A), iV = identity(b.H);
  const auto &mA = b.muA, &mV = b.muH, &tl = b.tri_l, &tr = b.tri_r, &s = b.sigma;
  const auto &dA = b.dA, &dV = b.dH, &rho = b.rho, &gam = b.gamma, &Q = b.Q;
  const Rational& l = b.lambda;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      eq("G1", rho * mV, tp(iA, mV) * tp(rho, iV) + tp(iA, tl) * tp(Q, iV) + tp(s, iV) * tp(iV, dV)),
      eq("G2", gam * mV, tp(mV, iA) * tp(iV, gam) + tp(iV, s) * tp(dV, iV) + tp(tr, iA) * tp(iV, Q)),
      eq("G3", Q * tr, tp(iA, mA) * tp(Q, iA)),
      eq("G4", Q * tl, tp(mA, iA) * tp(iA, Q)),
      eq("G5", dV * tl, tp(tl, iV) * tp(iA, dV)),
      eq("G6", dV * tr, tp(iV, tr) * tp(dV, iA)),
      eq("G7", dA * s + Q * mV, tp(iA, s) * tp(rho, iV) + tp(s, iA) * tp(iV, gam)),
      eq("G8", gam * tr, tp(tr, iA) * tp(iV, dA) + tp(iV, mA) * tp(gam, iA) + l * tp(iV, iA)),
      eq("G9", rho * tl, tp(mA, iV) * tp(iA, rho) + tp(iA, tl) * tp(dA, iV) + l * tp(iA, iV)),
      eq("G10", rho * tr, tp(iA, tr) * tp(rho, iA)),
      eq("G11", gam * tl, tp(tl, iA) * tp(iA, gam)),
      eq("G12", dV * mV,
         tp(iV, mV) * tp(dV, iV) + tp(mV, iV) * tp(iV, dV) + tp(iV, tl) * tp(gam, iV) +
             tp(tr, iV) * tp(iV, rho) + l * tp(iV, iV)),
  };
}

// The labelled list characterising validity of the datum's unified structure.
inline CheckReport check_extending_datum(const ExtendingDatum& d) {
  d.validate();
  const Blocks& b = d.b;
  switch (d.kind) {
    case ExtKind::A1: return evaluate(conditions_a1(b));
    case ExtKind::A2: return evaluate(conditions_a2(b));
    case ExtKind::C1: return evaluate(conditions_c1(b));
    case ExtKind::C2: return evaluate(conditions_c2(b));
    case ExtKind::I: {
      CheckReport r = evaluate(conditions_a1(b));
      r += evaluate(conditions_c1(b));
      r += evaluate(conditions_type_I(b));
      return r;
    }
    case ExtKind::II: {
      CheckReport r = evaluate(conditions_a2(b));
      r += evaluate(conditions_c2(b));
      r += evaluate(conditions_type_II(b));
      return r;
    }
    case ExtKind::Special: {
      CheckReport r = evaluate(conditions_a2(b));
      r += evaluate(conditions_c2(b));
      r += evaluate(conditions_special(b));
      return r;
    }
  }
  return {};
}

// Same datum read as type II, for comparing the two lists.
inline ExtendingDatum as_type_II(const ExtendingDatum& d) {
  if (d.kind != ExtKind::Special) throw TypeMismatch("not a special-case datum");
  return {ExtKind::II, d.b};
}
inline ExtendingDatum as_special(const ExtendingDatum& d) {
  if (d.kind != ExtKind::II && d.kind != ExtKind::Special) throw TypeMismatch("not a type II datum");
  if (!d.b.harpoon_l.is_zero() || !d.b.harpoon_r.is_zero())
    throw PreconditionFailed("special case needs both harpoon actions zero");
  return {ExtKind::Special, d.b};
}

// ---- splitting an extension -------------------------------------------------

inline std::pair<Space, Space> split_space(const Space& E, int a_dim) {
  if (a_dim < 0 || a_dim > E.dim()) throw DimensionMismatch("subspace dimension out of range");
  const auto& l = E.labels();
  return {Space("A", {l.begin(), l.begin() + a_dim}), Space("V", {l.begin() + a_dim, l.end()})};
}

// E with the first a_dim basis vectors spanning A and the rest spanning V.
// a1 needs the projection onto A along V to be multiplicative, a2 needs A to be
// a subalgebra; a1 is tried first.
inline ExtendingDatum decompose_algebra_extension(const Algebra& E, int a_dim,
                                                  std::optional<ExtKind> want = std::nullopt) {
  auto [A, V] = split_space(E.space, a_dim);
  Blocks b = split_blocks(A, V, &E.mu, nullptr, Rational());
  bool a1 = b.harpoon_l.is_zero() && b.harpoon_r.is_zero() && b.sigma.is_zero();
  bool a2 = b.theta.is_zero();
  if (want && *want != ExtKind::A1 && *want != ExtKind::A2)
    throw TypeMismatch("not an algebra datum type");
  if ((!want || *want == ExtKind::A1) && a1) return {ExtKind::A1, b};
  if ((!want || *want == ExtKind::A2) && a2) return {ExtKind::A2, b};
  throw NotSplit("the complement is not compatible with a unified product of the requested type");
}

// c1 needs Q = 0 (V maps into the V-containing part), c2 needs A to be a subcoalgebra.
inline ExtendingDatum decompose_coalgebra_extension(const Coalgebra& E, int a_dim,
                                                    std::optional<ExtKind> want = std::nullopt) {
  auto [A, V] = split_space(E.space, a_dim);
  Blocks b = split_blocks(A, V, nullptr, &E.delta, Rational());
  bool c1 = b.Q.is_zero();
  bool c2 = b.phi.is_zero() && b.psi.is_zero() && b.P.is_zero();
  if (want && *want != ExtKind::C1 && *want != ExtKind::C2)
    throw TypeMismatch("not a coalgebra datum type");
  if ((!want || *want == ExtKind::C1) && c1) return {ExtKind::C1, b};
  if ((!want || *want == ExtKind::C2) && c2) return {ExtKind::C2, b};
  throw NotSplit("the complement is not compatible with a unified coproduct of the requested type");
}

// ---- morphism pairs -----------------------------------------------------------

// phi_{r,s}(a, x) = (a + r(x), s(x))
struct MorphismPair {
  LinearMap r;  // V -> A
  LinearMap s;  // V -> V
};

inline MorphismPair identity_pair(const Space& A, const Space& V) {
  return {zero_map({V}, {A}), identity(V)};
}

inline LinearMap morphism_map(const Space& A, const Space& V, const MorphismPair& m) {
  DirectSum d(A, V);
  require_shape(m.r, {V}, {A}, "r");
  require_shape(m.s, {V}, {V}, "s");
  return d.iA * d.pA + d.iA * m.r * d.pH + d.iH * m.s * d.pH;
}

inline bool s_invertible(const MorphismPair& m) {
  return rank(m.s) == static_cast<std::size_t>(m.s.ins()[0].dim());
}
inline bool is_bijective(const Space& A, const Space& V, const MorphismPair& m) {
  return rank(morphism_map(A, V, m)) == static_cast<std::size_t>(A.dim() + V.dim());
}

inline void require_same_frame(const ExtendingDatum& d, const ExtendingDatum& e) {
  if (d.kind != e.kind) throw TypeMismatch("extending data of different types");
  if (!(d.A() == e.A()) || !(d.V() == e.V())) throw DimensionMismatch("data over different spaces");
  if (!(d.b.muA == e.b.muA) || !(d.b.dA == e.b.dA) || !(d.b.lambda == e.b.lambda))
    throw TypeMismatch("data extend different structures");
}

// Homomorphism conditions, obtained by expanding phi(uv) = phi(u) phi(v)
// componentwise. d is the source, e the target.
inline std::vector<Condition> morphism_conditions_a1(const Blocks& d, const Blocks& e,
                                                     const MorphismPair& m) {
  const LinearMap iA = identity(d.A);
  const auto &r = m.r, &s = m.s;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      eq("MA1-ab-A", r * d.theta, zero_map({d.A, d.A}, {d.A})),
      eq("MA1-ab-V", s * d.theta, e.theta),
      eq("MA1-xb-A", r * d.tri_r, d.muA * tp(r, iA)),
      eq("MA1-xb-V", s * d.tri_r, e.tri_r * tp(s, iA) + e.theta * tp(r, iA)),
      eq("MA1-ay-A", r * d.tri_l, d.muA * tp(iA, r)),
      eq("MA1-ay-V", s * d.tri_l, e.tri_l * tp(iA, s) + e.theta * tp(iA, r)),
      eq("MA1-xy-A", r * d.muH, d.muA * tp(r, r)),
      eq("MA1-xy-V", s * d.muH,
         e.muH * tp(s, s) + e.tri_r * tp(s, r) + e.tri_l * tp(r, s) + e.theta * tp(r, r)),
  };
}

// Shorter a1 variant kept for auditing: six identities, no (a,y) pair, and
// s(xy) with the term -s(y) <| r(x) in place of r(x) |> s(y).
inline std::vector<Condition> morphism_conditions_a1_variant(const Blocks& d, const Blocks& e,
                                                             const MorphismPair& m) {
  const LinearMap iA = identity(d.A);
  const auto &r = m.r, &s = m.s;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  LinearMap swapped = permute_inputs(e.tri_r * tp(s, r), {1, 0});  // (x,y) -> s(y) <| r(x)
  return {
      eq("MA1P-1", r * d.tri_r, d.muA * tp(r, iA)),
      eq("MA1P-2", r * d.theta, zero_map({d.A, d.A}, {d.A})),
      eq("MA1P-3", r * d.muH, d.muA * tp(r, r)),
      eq("MA1P-4", s * d.tri_r, e.tri_r * tp(s, iA) + e.theta * tp(r, iA)),
      eq("MA1P-5", s * d.theta, e.theta),
      eq("MA1P-6", s * d.muH, e.muH * tp(s, s) + e.tri_r * tp(s, r) - swapped + e.theta * tp(r, r)),
  };
}

inline std::vector<Condition> morphism_conditions_a2(const Blocks& d, const Blocks& e,
                                                     const MorphismPair& m) {
  const LinearMap iA = identity(d.A);
  const auto &r = m.r, &s = m.s;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      eq("MA2-xb-A", d.harpoon_l + r * d.tri_r, d.muA * tp(r, iA) + e.harpoon_l * tp(s, iA)),
      eq("MA2-xb-V", s * d.tri_r, e.tri_r * tp(s, iA)),
      eq("MA2-ay-A", d.harpoon_r + r * d.tri_l, d.muA * tp(iA, r) + e.harpoon_r * tp(iA, s)),
      eq("MA2-ay-V", s * d.tri_l, e.tri_l * tp(iA, s)),
      eq("MA2-xy-A", d.sigma + r * d.muH,
         d.muA * tp(r, r) + e.harpoon_l * tp(s, r) + e.harpoon_r * tp(r, s) + e.sigma * tp(s, s)),
      eq("MA2-xy-V", s * d.muH, e.muH * tp(s, s) + e.tri_r * tp(s, r) + e.tri_l * tp(r, s)),
  };
}

// Comultiplicative counterparts, from (phi (x) phi) D = D' phi.
inline std::vector<Condition> morphism_conditions_c1(const Blocks& d, const Blocks& e,
                                                     const MorphismPair& m) {
  const LinearMap iA = identity(d.A);
  const auto &r = m.r, &s = m.s;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      eq("MC1-a-AA", zero_map({d.A}, {d.A, d.A}),
         tp(r, iA) * d.phi + tp(iA, r) * d.psi + tp(r, r) * d.P),
      eq("MC1-a-VA", e.phi, tp(s, iA) * d.phi + tp(s, r) * d.P),
      eq("MC1-a-AV", e.psi, tp(iA, s) * d.psi + tp(r, s) * d.P),
      eq("MC1-a-VV", e.P, tp(s, s) * d.P),
      eq("MC1-x-AA", d.dA * r, tp(r, r) * d.dH + tp(iA, r) * d.rho + tp(r, iA) * d.gamma),
      eq("MC1-x-AV", e.psi * r + e.rho * s, tp(r, s) * d.dH + tp(iA, s) * d.rho),
      eq("MC1-x-VA", e.phi * r + e.gamma * s, tp(s, r) * d.dH + tp(s, iA) * d.gamma),
      eq("MC1-x-VV", e.P * r + e.dH * s, tp(s, s) * d.dH),
  };
}

inline std::vector<Condition> morphism_conditions_c2(const Blocks& d, const Blocks& e,
                                                     const MorphismPair& m) {
  const LinearMap iA = identity(d.A);
  const auto &r = m.r, &s = m.s;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      eq("MC2-x-AA", d.dA * r + e.Q * s,
         tp(r, r) * d.dH + tp(iA, r) * d.rho + tp(r, iA) * d.gamma + d.Q),
      eq("MC2-x-AV", e.rho * s, tp(r, s) * d.dH + tp(iA, s) * d.rho),
      eq("MC2-x-VA", e.gamma * s, tp(s, r) * d.dH + tp(s, iA) * d.gamma),
      eq("MC2-x-VV", e.dH * s, tp(s, s) * d.dH),
  };
}

inline std::vector<Condition> morphism_conditions(const ExtendingDatum& d, const ExtendingDatum& e,
                                                  const MorphismPair& m) {
  require_same_frame(d, e);
  require_shape(m.r, {d.V()}, {d.A()}, "r");
  require_shape(m.s, {d.V()}, {d.V()}, "s");
  std::vector<Condition> out;
  auto add = [&](std::vector<Condition> c) { out.insert(out.end(), c.begin(), c.end()); };
  switch (d.kind) {
    case ExtKind::A1: add(morphism_conditions_a1(d.b, e.b, m)); break;
    case ExtKind::A2: add(morphism_conditions_a2(d.b, e.b, m)); break;
    case ExtKind::C1: add(morphism_conditions_c1(d.b, e.b, m)); break;
    case ExtKind::C2: add(morphism_conditions_c2(d.b, e.b, m)); break;
    case ExtKind::I:
      add(morphism_conditions_a1(d.b, e.b, m));
      add(morphism_conditions_c1(d.b, e.b, m));
      break;
    case ExtKind::II:
    case ExtKind::Special:
      add(morphism_conditions_a2(d.b, e.b, m));
      add(morphism_conditions_c2(d.b, e.b, m));
      break;
  }
  return out;
}

inline CheckReport check_morphism_pair(const ExtendingDatum& d, const ExtendingDatum& e,
                                       const MorphismPair& m) {
  return evaluate(morphism_conditions(d, e, m));
}
inline CheckReport check_morphism_pair_alg(const ExtendingDatum& d, const ExtendingDatum& e,
                                           const MorphismPair& m) {
  if (d.kind != ExtKind::A1 && d.kind != ExtKind::A2) throw TypeMismatch("not an algebra datum");
  return check_morphism_pair(d, e, m);
}
inline CheckReport check_morphism_pair_coalg(const ExtendingDatum& d, const ExtendingDatum& e,
                                             const MorphismPair& m) {
  if (d.kind != ExtKind::C1 && d.kind != ExtKind::C2) throw TypeMismatch("not a coalgebra datum");
  return check_morphism_pair(d, e, m);
}

// Homomorphism test on the assembled tables, for any pair of data over the
// same A and V (types may differ).
inline std::vector<Condition> direct_morphism_conditions(const ExtendingDatum& d,
                                                         const ExtendingDatum& e,
                                                         const MorphismPair& m) {
  if (!(d.A() == e.A()) || !(d.V() == e.V())) throw DimensionMismatch("data over different spaces");
  const bool prod = has_product(d.kind), coprod = has_coproduct(d.kind);
  if (prod != has_product(e.kind) || coprod != has_coproduct(e.kind))
    throw TypeMismatch("data of different structure types");
  LinearMap f = morphism_map(d.A(), d.V(), m);
  std::vector<Condition> out;
  if (prod)
    out.push_back({"HOM-MUL", assemble_product(e.b).mu * tp(f, f) - f * assemble_product(d.b).mu});
  if (coprod)
    out.push_back(
        {"HOM-COMUL", assemble_coproduct(e.b).delta * f - tp(f, f) * assemble_coproduct(d.b).delta});
  return out;
}

inline CheckReport check_direct_morphism(const ExtendingDatum& d, const ExtendingDatum& e,
                                         const MorphismPair& m) {
  return evaluate(direct_morphism_conditions(d, e, m));
}

// ---- equivalence ----------------------------------------------------------------

// Unknowns: the entries of r (row-major, V index first) then those of s.
inline MorphismPair pair_from_vector(const Space& A, const Space& V, const std::vector<Rational>& u) {
  MorphismPair m{LinearMap({V}, {A}), LinearMap({V}, {V})};
  std::size_t k = 0;
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) m.r.set({i, j}, u[k++]);
  for (int i = 0; i < V.dim(); ++i)
    for (int j = 0; j < V.dim(); ++j) m.s.set({i, j}, u[k++]);
  return m;
}

// det(s) as a polynomial in the s unknowns.
inline Poly det_poly(int nvars, int offset, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Poly det(nvars);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Poly term = Poly::constant(nvars, inversions % 2 ? -1 : 1);
    for (int i = 0; i < n; ++i) term = term * Poly::var(nvars, offset + i * n + perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Flattened residual of a condition list, as sparse (slot, value) pairs.
inline std::vector<std::pair<std::size_t, Rational>> flatten(const std::vector<Condition>& cs) {
  std::vector<std::pair<std::size_t, Rational>> out;
  std::size_t offset = 0;
  for (auto& c : cs) {
    for (auto& [f, v] : c.residual.tensor().entries()) out.emplace_back(offset + f, v);
    offset += c.residual.tensor().size();
  }
  return out;
}

struct EquivalenceResult {
  Tri verdict = Tri::Unknown;
  std::optional<MorphismPair> witness;
  bool by_search = false;  // witness came from the grid fallback
};

// Is there (r,s) with s invertible making phi_{r,s} a homomorphism d -> e?
// Same-type pairs use the derived condition lists, mixed-type pairs the
// assembled tables. The system is exact; a grid search over `fallback`
// entries backs up an inconclusive exact solve.
inline EquivalenceResult decide_equivalence(const ExtendingDatum& d, const ExtendingDatum& e,
                                            const std::vector<Rational>& fallback = {-1, 0, 1}) {
  const Space &A = d.A(), &V = d.V();
  const int nr = A.dim() * V.dim(), ns = V.dim() * V.dim(), n = nr + ns;
  const bool same = d.kind == e.kind;
  if (same) require_same_frame(d, e);
  auto F = [&](const std::vector<Rational>& u) {
    MorphismPair m = pair_from_vector(A, V, u);
    return flatten(same ? morphism_conditions(d, e, m) : direct_morphism_conditions(d, e, m));
  };
  auto polys = extract_quadratic(n, F);
  std::vector<Poly> eqs;
  for (auto& [_, p] : polys) eqs.push_back(p);
  PolySolver solver;
  SolveResult res = solver.solve(eqs, det_poly(n, nr, V.dim()), n);
  EquivalenceResult out;
  out.verdict = res.verdict;
  if (res.verdict == Tri::Yes) out.witness = pair_from_vector(A, V, res.witness);
  if (res.verdict != Tri::Unknown) return out;

  std::vector<std::size_t> digit(n, 0);
  std::vector<Rational> u(n);
  const std::size_t C = fallback.size();
  if (C == 0) return out;
  for (;;) {
    for (int i = 0; i < n; ++i) u[i] = fallback[digit[i]];
    MorphismPair m = pair_from_vector(A, V, u);
    if (s_invertible(m) && F(u).empty()) {
      out.verdict = Tri::Yes;
      out.witness = m;
      out.by_search = true;
      return out;
    }
    int k = 0;
    while (k < n && ++digit[k] == C) digit[k++] = 0;
    if (k == n) return out;
  }
}

// ---- classification -----------------------------------------------------------

enum class StructureKind { Algebra, Coalgebra, Bialgebra };

inline const char* to_string(StructureKind k) {
  return k == StructureKind::Algebra ? "algebra"
         : k == StructureKind::Coalgebra ? "coalgebra"
                                         : "bialgebra";
}
inline StructureKind parse_structure_kind(const std::string& s) {
  if (s == "algebra") return StructureKind::Algebra;
  if (s == "coalgebra") return StructureKind::Coalgebra;
  if (s == "bialgebra") return StructureKind::Bialgebra;
  throw std::invalid_argument("unknown structure kind '" + s + "'");
}
inline std::vector<ExtKind> applicable_kinds(StructureKind k) {
  switch (k) {
    case StructureKind::Algebra: return {ExtKind::A1, ExtKind::A2};
    case StructureKind::Coalgebra: return {ExtKind::C1, ExtKind::C2};
    case StructureKind::Bialgebra: return {ExtKind::I, ExtKind::II};
  }
  return {};
}

struct ExtensionClass {
  std::size_t representative;        // index into Classification::data
  std::vector<std::size_t> members;  // indices into Classification::data
};

struct Classification {
  StructureKind kind;
  std::vector<ExtendingDatum> data;  // every valid datum over the grid, enumeration order
  std::vector<ExtensionClass> classes;
  std::size_t candidates = 0;        // data enumerated before the validity filter
  std::size_t unresolved_pairs = 0;  // pairs left apart because the solver could not decide
};

// Number of grid points the enumeration would visit.
inline long double enumeration_size(const Blocks& base, ExtKind k, std::size_t grid) {
  long double total = 1;
  for (auto& role : datum_roles(k))
    total *= std::pow(static_cast<long double>(grid),
                      static_cast<long double>(base.role(role).tensor().size()));
  return total;
}

// All valid data of type k over A and V with entries from the grid, in
// lexicographic order of the entry vector (roles in datum_roles order).
template <typename Visit>
void enumerate_data(const ExtendingDatum& zero, const std::vector<Rational>& grid, Visit visit) {
  std::vector<std::pair<std::string, std::size_t>> slots;
  for (auto& role : datum_roles(zero.kind))
    for (std::size_t f = 0; f < zero.b.role(role).tensor().size(); ++f) slots.emplace_back(role, f);
  std::vector<std::size_t> digit(slots.size(), 0);
  for (;;) {
    ExtendingDatum d = zero;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      LinearMap& m = d.b.role(slots[i].first);
      Tensor t = m.tensor();
      t.set_flat(slots[i].second, grid[digit[i]]);
      m = LinearMap(t, m.n_in());
    }
    visit(d);
    std::size_t k = slots.size();
    while (k > 0) {
      --k;
      if (++digit[k] < grid.size()) break;
      digit[k] = 0;
      if (k == 0) return;
    }
    if (slots.empty()) return;
  }
}

// fixed: a zero datum of any applicable kind carrying the structure of A.
inline Classification classify_extensions(const Blocks& fixed, StructureKind kind,
                                          std::vector<Rational> grid,
                                          std::size_t budget = default_budget()) {
  std::set<Rational> uniq(grid.begin(), grid.end());
  grid.assign(uniq.begin(), uniq.end());
  if (grid.empty()) throw std::invalid_argument("empty grid");
  Classification out{kind, {}, {}, 0, 0};
  long double total = 0;
  for (ExtKind k : applicable_kinds(kind)) total += enumeration_size(fixed, k, grid.size());
  if (total > static_cast<long double>(budget))
    throw BudgetExceeded("enumeration", total, budget);

  for (ExtKind k : applicable_kinds(kind)) {
    ExtendingDatum zero{k, Blocks(fixed.A, fixed.H)};
    for (auto& r : fixed_roles(k)) zero.b.role(r) = fixed.role(r);
    if (has_coproduct(k) && has_product(k)) zero.b.lambda = fixed.lambda;
    enumerate_data(zero, grid, [&](const ExtendingDatum& d) {
      ++out.candidates;
      if (check_unified_structure(d).ok()) out.data.push_back(d);
    });
  }

  const std::size_t N = out.data.size();
  std::vector<std::size_t> parent(N);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      if (find(i) == find(j)) continue;
      EquivalenceResult r = decide_equivalence(out.data[i], out.data[j], grid);
      if (r.verdict == Tri::Yes) {
        std::size_t a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      } else if (r.verdict == Tri::Unknown) {
        ++out.unresolved_pairs;
      }
    }
  std::map<std::size_t, std::size_t> cls;
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t root = find(i);
    auto [it, fresh] = cls.try_emplace(root, out.classes.size());
    if (fresh) out.classes.push_back({i, {}});
    out.classes[it->second].members.push_back(i);
  }
  return out;
}

inline Classification classify_extensions(const Algebra& A, int v_dim, std::vector<Rational> grid,
                                          std::size_t budget = default_budget()) {
  return classify_extensions(zero_datum(ExtKind::A1, A, Space::numbered("V", v_dim)).b,
                             StructureKind::Algebra, std::move(grid), budget);
}
inline Classification classify_extensions(const Coalgebra& A, int v_dim,
                                          std::vector<Rational> grid,
                                          std::size_t budget = default_budget()) {
  return classify_extensions(zero_datum(ExtKind::C1, A, Space::numbered("V", v_dim)).b,
                             StructureKind::Coalgebra, std::move(grid), budget);
}
inline Classification classify_extensions(const WeightedInfBialgebra& A, int v_dim,
                                          std::vector<Rational> grid,
                                          std::size_t budget = default_budget()) {
  return classify_extensions(zero_datum(ExtKind::I, A, Space::numbered("V", v_dim)).b,
                             StructureKind::Bialgebra, std::move(grid), budget);
}

inline ExtendingDatum change_basis(const ExtendingDatum& d, const BasisChange& bc) {
  return {d.kind, change_basis(d.b, bc)};
}

}  // namespace ibx
