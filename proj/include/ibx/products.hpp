#pragma once

#include <map>
#include <utility>

#include "ibx/hopf_modules.hpp"

namespace ibx {

struct KindMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// All structure maps between two spaces A and H that can enter a product on
// A (+) H. Unused blocks are zero. Notation in comments:
//   x -> a  harpoon_l (H,A)->A     a <- x  harpoon_r (A,H)->A
//   a |> x  tri_l     (A,H)->H     x <| a  tri_r     (H,A)->H
//   sigma (H,H)->A, theta (A,A)->H
//   phi A->(H,A), psi A->(A,H), rho H->(A,H), gamma H->(H,A), P A->(H,H), Q H->(A,A)
struct Blocks {
  Space A, H;
  LinearMap muA, muH, harpoon_l, harpoon_r, tri_l, tri_r, sigma, theta;
  LinearMap dA, dH, phi, psi, rho, gamma, P, Q;
  Rational lambda;

  Blocks() = default;
  Blocks(Space a, Space h) : A(std::move(a)), H(std::move(h)) {
    muA = zero_map({A, A}, {A});
    muH = zero_map({H, H}, {H});
    harpoon_l = zero_map({H, A}, {A});
    harpoon_r = zero_map({A, H}, {A});
    tri_l = zero_map({A, H}, {H});
    tri_r = zero_map({H, A}, {H});
    sigma = zero_map({H, H}, {A});
    theta = zero_map({A, A}, {H});
    dA = zero_map({A}, {A, A});
    dH = zero_map({H}, {H, H});
    phi = zero_map({A}, {H, A});
    psi = zero_map({A}, {A, H});
    rho = zero_map({H}, {A, H});
    gamma = zero_map({H}, {H, A});
    P = zero_map({A}, {H, H});
    Q = zero_map({H}, {A, A});
  }

  // Role name -> (map, expected inputs, expected outputs).
  std::vector<std::pair<std::string, LinearMap*>> roles() {
    return {{"mu_A", &muA},       {"mu_H", &muH},       {"harpoon_l", &harpoon_l},
            {"harpoon_r", &harpoon_r}, {"tri_l", &tri_l}, {"tri_r", &tri_r},
            {"sigma", &sigma},    {"theta", &theta},    {"delta_A", &dA},
            {"delta_H", &dH},     {"phi", &phi},        {"psi", &psi},
            {"rho", &rho},        {"gamma", &gamma},    {"P", &P},
            {"Q", &Q}};
  }
  std::vector<std::pair<std::string, const LinearMap*>> roles() const {
    auto r = const_cast<Blocks*>(this)->roles();
    return {r.begin(), r.end()};
  }
  const LinearMap& role(const std::string& name) const {
    for (auto& [n, m] : roles())
      if (n == name) return *m;
    throw std::out_of_range("no role " + name);
  }
  LinearMap& role(const std::string& name) {
    for (auto& [n, m] : roles())
      if (n == name) return *m;
    throw std::out_of_range("no role " + name);
  }
  void validate() const {
    Blocks shape(A, H);
    for (auto& [n, m] : roles()) {
      const LinearMap& z = shape.role(n);
      require_shape(*m, z.ins(), z.outs(), n);
    }
  }
};

// ---- assembly on E = A (+) H, A basis first ------------------------------

struct DirectSum {
  Space E;
  LinearMap iA, iH, pA, pH;
  DirectSum(const Space& A, const Space& H) : DirectSum(A, H, direct_sum(A, H, "E")) {}
  // Use an existing space of the right dimension as the sum.
  DirectSum(const Space& A, const Space& H, Space sum) : E(std::move(sum)) {
    if (E.dim() != A.dim() + H.dim()) throw DimensionMismatch("direct sum has the wrong dimension");
    iA = LinearMap({A}, {E});
    pA = LinearMap({E}, {A});
    iH = LinearMap({H}, {E});
    pH = LinearMap({E}, {H});
    for (int i = 0; i < A.dim(); ++i) {
      iA.set({i, i}, 1);
      pA.set({i, i}, 1);
    }
    for (int i = 0; i < H.dim(); ++i) {
      iH.set({i, A.dim() + i}, 1);
      pH.set({A.dim() + i, i}, 1);
    }
  }
};

// (a,x)(b,y) = (ab + x->b + a<-y + sigma(x,y), xy + x<|b + a|>y + theta(a,b))
inline Algebra assemble_product(const Blocks& b) {
  DirectSum d(b.A, b.H);
  LinearMap mu = d.iA * b.muA * tp(d.pA, d.pA) + d.iH * b.theta * tp(d.pA, d.pA) +
                 d.iA * b.harpoon_l * tp(d.pH, d.pA) + d.iH * b.tri_r * tp(d.pH, d.pA) +
                 d.iA * b.harpoon_r * tp(d.pA, d.pH) + d.iH * b.tri_l * tp(d.pA, d.pH) +
                 d.iA * b.sigma * tp(d.pH, d.pH) + d.iH * b.muH * tp(d.pH, d.pH);
  return Algebra(d.E, mu);
}

// D(a) = D_A(a) + phi(a) + psi(a) + P(a),  D(x) = D_H(x) + rho(x) + gamma(x) + Q(x)
inline Coalgebra assemble_coproduct(const Blocks& b) {
  DirectSum d(b.A, b.H);
  LinearMap delta = tp(d.iA, d.iA) * b.dA * d.pA + tp(d.iH, d.iA) * b.phi * d.pA +
                    tp(d.iA, d.iH) * b.psi * d.pA + tp(d.iH, d.iH) * b.P * d.pA +
                    tp(d.iH, d.iH) * b.dH * d.pH + tp(d.iA, d.iH) * b.rho * d.pH +
                    tp(d.iH, d.iA) * b.gamma * d.pH + tp(d.iA, d.iA) * b.Q * d.pH;
  return Coalgebra(d.E, delta);
}

inline WeightedInfBialgebra assemble_bialgebra(const Blocks& b) {
  return WeightedInfBialgebra(assemble_product(b), assemble_coproduct(b), b.lambda);
}

// Split a structure on E = A (+) H (A first) back into blocks.
inline Blocks split_blocks(const Space& A, const Space& H, const LinearMap* mu,
                           const LinearMap* delta, const Rational& lambda) {
  const LinearMap* any = mu ? mu : delta;
  DirectSum d = any ? DirectSum(A, H, any->outs()[0]) : DirectSum(A, H);
  if (mu && delta && !(mu->outs()[0] == delta->ins()[0]))
    throw DimensionMismatch("product and coproduct live on different spaces");
  Blocks b(A, H);
  b.lambda = lambda;
  if (mu) {
    require_shape(*mu, {d.E, d.E}, {d.E}, "product on the direct sum");
    b.muA = d.pA * *mu * tp(d.iA, d.iA);
    b.theta = d.pH * *mu * tp(d.iA, d.iA);
    b.harpoon_l = d.pA * *mu * tp(d.iH, d.iA);
    b.tri_r = d.pH * *mu * tp(d.iH, d.iA);
    b.harpoon_r = d.pA * *mu * tp(d.iA, d.iH);
    b.tri_l = d.pH * *mu * tp(d.iA, d.iH);
    b.sigma = d.pA * *mu * tp(d.iH, d.iH);
    b.muH = d.pH * *mu * tp(d.iH, d.iH);
  }
  if (delta) {
    require_shape(*delta, {d.E}, {d.E, d.E}, "coproduct on the direct sum");
    b.dA = tp(d.pA, d.pA) * *delta * d.iA;
    b.phi = tp(d.pH, d.pA) * *delta * d.iA;
    b.psi = tp(d.pA, d.pH) * *delta * d.iA;
    b.P = tp(d.pH, d.pH) * *delta * d.iA;
    b.dH = tp(d.pH, d.pH) * *delta * d.iH;
    b.rho = tp(d.pA, d.pH) * *delta * d.iH;
    b.gamma = tp(d.pH, d.pA) * *delta * d.iH;
    b.Q = tp(d.pA, d.pA) * *delta * d.iH;
  }
  return b;
}

// ---- component identities ------------------------------------------------
// Each entry is one component of associativity, coassociativity or the
// weighted compatibility of the assembled structure, as right minus left.

inline std::vector<Condition> assoc_components(const Blocks& b) {
  const LinearMap iA = identity(b.A), iH = identity(b.H);
  const auto &mA = b.muA, &mH = b.muH, &hl = b.harpoon_l, &hr = b.harpoon_r, &tl = b.tri_l,
             &tr = b.tri_r, &s = b.sigma, &t = b.theta;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      // sigma(x,y) <- z + sigma(xy,z) = x -> sigma(y,z) + sigma(x,yz)
      eq("CC1", hr * tp(s, iH) + s * tp(mH, iH), hl * tp(iH, s) + s * tp(iH, mH)),
      // theta(ab,c) + theta(a,b) <| c = a |> theta(b,c) + theta(a,bc)
      eq("CC2", t * tp(mA, iA) + tr * tp(t, iA), tl * tp(iA, t) + t * tp(iA, mA)),
      // sigma(x,y) |> z + (xy)z = x <| sigma(y,z) + x(yz)
      eq("CC5", tl * tp(s, iH) + mH * tp(mH, iH), tr * tp(iH, s) + mH * tp(iH, mH)),
      // (ab)c + theta(a,b) -> c = a(bc) + a <- theta(b,c)
      eq("CC6", mA * tp(mA, iA) + hl * tp(t, iA), mA * tp(iA, mA) + hr * tp(iA, t)),
      // (ab) |> x + theta(a,b) x = a |> (b |> x) + theta(a, b <- x)
      eq("CP1", tl * tp(mA, iH) + mH * tp(t, iH), tl * tp(iA, tl) + t * tp(iA, hr)),
      // x <| (ab) + x theta(a,b) = (x <| a) <| b + theta(x -> a, b)
      eq("CP2", tr * tp(iH, mA) + mH * tp(iH, t), tr * tp(tr, iA) + t * tp(hl, iA)),
      // (a |> x) <| b + theta(a <- x, b) = a |> (x <| b) + theta(a, x -> b)
      eq("CP3", tr * tp(tl, iA) + t * tp(hr, iA), tl * tp(iA, tr) + t * tp(iA, hl)),
      // a |> (xy) + theta(a, sigma(x,y)) = (a <- x) |> y + (a |> x) y
      eq("CP4", tl * tp(iA, mH) + t * tp(iA, s), tl * tp(hr, iH) + mH * tp(tl, iH)),
      // (xy) <| a + theta(sigma(x,y), a) = x <| (y -> a) + x (y <| a)
      eq("CP5", tr * tp(mH, iA) + t * tp(s, iA), tr * tp(iH, hl) + mH * tp(iH, tr)),
      // (x <| a) y + (x -> a) |> y = x (a |> y) + x <| (a <- y)
      eq("CP6", mH * tp(tr, iH) + tl * tp(hl, iH), mH * tp(iH, tl) + tr * tp(iH, hr)),
      // (xy) -> a + sigma(x,y) a = x -> (y -> a) + sigma(x, y <| a)
      eq("CP7", hl * tp(mH, iA) + mA * tp(s, iA), hl * tp(iH, hl) + s * tp(iH, tr)),
      // a <- (xy) + a sigma(x,y) = (a <- x) <- y + sigma(a |> x, y)
      eq("CP8", hr * tp(iA, mH) + mA * tp(iA, s), hr * tp(hr, iH) + s * tp(tl, iH)),
      // (x -> a) <- y + sigma(x <| a, y) = x -> (a <- y) + sigma(x, a |> y)
      eq("CP9", hr * tp(hl, iH) + s * tp(tr, iH), hl * tp(iH, hr) + s * tp(iH, tl)),
      // x -> (ab) + sigma(x, theta(a,b)) = (x -> a) b + (x <| a) -> b
      eq("CP10", hl * tp(iH, mA) + s * tp(iH, t), mA * tp(hl, iA) + hl * tp(tr, iA)),
      // (ab) <- x + sigma(theta(a,b), x) = a (b <- x) + a <- (b |> x)
      eq("CP11", hr * tp(mA, iH) + s * tp(t, iH), mA * tp(iA, hr) + hr * tp(iA, tl)),
      // a (x -> b) + a <- (x <| b) = (a <- x) b + (a |> x) -> b
      eq("CP12", mA * tp(iA, hl) + hr * tp(iA, tr), mA * tp(hr, iA) + hl * tp(tl, iA)),
  };
}

inline std::vector<Condition> coassoc_components(const Blocks& b) {
  const LinearMap iA = identity(b.A), iH = identity(b.H);
  const auto &dA = b.dA, &dH = b.dH, &phi = b.phi, &psi = b.psi, &rho = b.rho, &gam = b.gamma,
             &P = b.P, &Q = b.Q;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      // a(-1) (x) P(a(0)) + a<1> (x) D_H(a<2>) = P(a(0)) (x) a(1) + D_H(a<1>) (x) a<2>
      eq("CC3", tp(iH, P) * phi + tp(iH, dH) * P, tp(P, iH) * psi + tp(dH, iH) * P),
      // x[-1] (x) Q(x[0]) + x{1} (x) D_A(x{2}) = Q(x[0]) (x) x[1] + D_A(x{1}) (x) x{2}
      eq("CC4", tp(iA, Q) * rho + tp(iA, dA) * Q, tp(Q, iA) * gam + tp(dA, iA) * Q),
      // x1 (x) D_H(x2) + x[0] (x) P(x[1]) = D_H(x1) (x) x2 + P(x[-1]) (x) x[0]
      eq("CC7", tp(iH, dH) * dH + tp(iH, P) * gam, tp(dH, iH) * dH + tp(P, iH) * rho),
      // a1 (x) D_A(a2) + a(0) (x) Q(a(1)) = D_A(a1) (x) a2 + Q(a(-1)) (x) a(0)
      eq("CC8", tp(iA, dA) * dA + tp(iA, Q) * psi, tp(dA, iA) * dA + tp(Q, iA) * phi),
      // a(-1) (x) D_A(a(0)) + a<1> (x) Q(a<2>) = phi(a1) (x) a2 + gamma(a(-1)) (x) a(0)
      eq("CCP1", tp(iH, dA) * phi + tp(iH, Q) * P, tp(phi, iA) * dA + tp(gam, iA) * phi),
      // a1 (x) psi(a2) + a(0) (x) rho(a(1)) = D_A(a(0)) (x) a(1) + Q(a<1>) (x) a<2>
      eq("CCP2", tp(iA, psi) * dA + tp(iA, rho) * psi, tp(dA, iH) * psi + tp(Q, iH) * P),
      // x[-1] (x) D_H(x[0]) + x{1} (x) P(x{2}) = rho(x1) (x) x2 + psi(x[-1]) (x) x[0]
      eq("CCP3", tp(iA, dH) * rho + tp(iA, P) * Q, tp(rho, iH) * dH + tp(psi, iH) * rho),
      // x1 (x) gamma(x2) + x[0] (x) phi(x[1]) = D_H(x[0]) (x) x[1] + P(x{1}) (x) x{2}
      eq("CCP4", tp(iH, gam) * dH + tp(iH, phi) * gam, tp(dH, iA) * gam + tp(P, iA) * Q),
      // a1 (x) phi(a2) + a(0) (x) gamma(a(1)) = psi(a1) (x) a2 + rho(a(-1)) (x) a(0)
      eq("CCP5", tp(iA, phi) * dA + tp(iA, gam) * psi, tp(psi, iA) * dA + tp(rho, iA) * phi),
      // x1 (x) rho(x2) + x[0] (x) psi(x[1]) = gamma(x1) (x) x2 + phi(x[-1]) (x) x[0]
      eq("CCP6", tp(iH, rho) * dH + tp(iH, psi) * gam, tp(gam, iH) * dH + tp(phi, iH) * rho),
      // a(-1) (x) phi(a(0)) + a<1> (x) gamma(a<2>) = P(a1) (x) a2 + D_H(a(-1)) (x) a(0)
      eq("CCP7", tp(iH, phi) * phi + tp(iH, gam) * P, tp(P, iA) * dA + tp(dH, iA) * phi),
      // a1 (x) P(a2) + a(0) (x) D_H(a(1)) = psi(a(0)) (x) a(1) + rho(a<1>) (x) a<2>
      eq("CCP8", tp(iA, P) * dA + tp(iA, dH) * psi, tp(psi, iH) * psi + tp(rho, iH) * P),
      // a(-1) (x) psi(a(0)) + a<1> (x) rho(a<2>) = phi(a(0)) (x) a(1) + gamma(a<1>) (x) a<2>
      eq("CCP9", tp(iH, psi) * phi + tp(iH, rho) * P, tp(phi, iH) * psi + tp(gam, iH) * P),
      // x[-1] (x) rho(x[0]) + x{1} (x) psi(x{2}) = Q(x1) (x) x2 + D_A(x[-1]) (x) x[0]
      eq("CCP10", tp(iA, rho) * rho + tp(iA, psi) * Q, tp(Q, iH) * dH + tp(dA, iH) * rho),
      // x1 (x) Q(x2) + x[0] (x) D_A(x[1]) = gamma(x[0]) (x) x[1] + phi(x{1}) (x) x{2}
      eq("CCP11", tp(iH, Q) * dH + tp(iH, dA) * gam, tp(gam, iA) * gam + tp(phi, iA) * Q),
      // x[-1] (x) gamma(x[0]) + x{1} (x) phi(x{2}) = rho(x[0]) (x) x[1] + psi(x{1}) (x) x{2}
      eq("CCP12", tp(iA, gam) * rho + tp(iA, phi) * Q, tp(rho, iA) * gam + tp(psi, iA) * Q),
  };
}

inline std::vector<Condition> compat_components(const Blocks& b) {
  const LinearMap iA = identity(b.A), iH = identity(b.H);
  const auto &mA = b.muA, &mH = b.muH, &hl = b.harpoon_l, &hr = b.harpoon_r, &tl = b.tri_l,
             &tr = b.tri_r, &s = b.sigma, &t = b.theta;
  const auto &dA = b.dA, &dH = b.dH, &phi = b.phi, &psi = b.psi, &rho = b.rho, &gam = b.gamma,
             &P = b.P, &Q = b.Q;
  const Rational& l = b.lambda;
  auto eq = [](const char* id, const LinearMap& lhs, const LinearMap& rhs) {
    return Condition{id, rhs - lhs};
  };
  return {
      // inputs (a,b)
      eq("CBB1", dA * mA + Q * t,
         tp(mA, iA) * tp(iA, dA) + tp(hr, iA) * tp(iA, phi) + tp(iA, mA) * tp(dA, iA) +
             tp(iA, hl) * tp(psi, iA) + l * tp(iA, iA)),
      eq("CDM1", phi * mA + gam * t,
         tp(t, iA) * tp(iA, dA) + tp(tl, iA) * tp(iA, phi) + tp(iH, mA) * tp(phi, iA) +
             tp(iH, hl) * tp(P, iA)),
      eq("CDM2", psi * mA + rho * t,
         tp(mA, iH) * tp(iA, psi) + tp(hr, iH) * tp(iA, P) + tp(iA, t) * tp(dA, iA) +
             tp(iA, tr) * tp(psi, iA)),
      eq("CDM9", P * mA + dH * t,
         tp(t, iH) * tp(iA, psi) + tp(tl, iH) * tp(iA, P) + tp(iH, t) * tp(phi, iA) +
             tp(iH, tr) * tp(P, iA)),
      // inputs (x,y)
      eq("CBB2", dH * mH + P * s,
         tp(mH, iH) * tp(iH, dH) + tp(tr, iH) * tp(iH, rho) + tp(iH, mH) * tp(dH, iH) +
             tp(iH, tl) * tp(gam, iH) + l * tp(iH, iH)),
      eq("CDM3", rho * mH + psi * s,
         tp(s, iH) * tp(iH, dH) + tp(hl, iH) * tp(iH, rho) + tp(iA, mH) * tp(rho, iH) +
             tp(iA, tl) * tp(Q, iH)),
      eq("CDM4", gam * mH + phi * s,
         tp(mH, iA) * tp(iH, gam) + tp(tr, iA) * tp(iH, Q) + tp(iH, s) * tp(dH, iH) +
             tp(iH, hr) * tp(gam, iH)),
      eq("CDM10", dA * s + Q * mH,
         tp(s, iA) * tp(iH, gam) + tp(hl, iA) * tp(iH, Q) + tp(iA, s) * tp(rho, iH) +
             tp(iA, hr) * tp(Q, iH)),
      // inputs (x,b)
      eq("CDM5", dA * hl + Q * tr,
         tp(hl, iA) * tp(iH, dA) + tp(s, iA) * tp(iH, phi) + tp(iA, hl) * tp(rho, iA) +
             tp(iA, mA) * tp(Q, iA)),
      eq("CDM11", phi * hl + gam * tr,
         tp(tr, iA) * tp(iH, dA) + tp(mH, iA) * tp(iH, phi) + tp(iH, hl) * tp(dH, iA) +
             tp(iH, mA) * tp(gam, iA) + l * tp(iH, iA)),
      eq("CDM13", psi * hl + rho * tr,
         tp(hl, iH) * tp(iH, psi) + tp(s, iH) * tp(iH, P) + tp(iA, tr) * tp(rho, iA) +
             tp(iA, t) * tp(Q, iA)),
      eq("CDM8", dH * tr + P * hl,
         tp(tr, iH) * tp(iH, psi) + tp(mH, iH) * tp(iH, P) + tp(iH, tr) * tp(dH, iA) +
             tp(iH, t) * tp(gam, iA)),
      // inputs (a,y)
      eq("CDM6", dA * hr + Q * tl,
         tp(hr, iA) * tp(iA, gam) + tp(mA, iA) * tp(iA, Q) + tp(iA, hr) * tp(dA, iH) +
             tp(iA, s) * tp(psi, iH)),
      eq("CDM7", dH * tl + P * hr,
         tp(tl, iH) * tp(iA, dH) + tp(t, iH) * tp(iA, rho) + tp(iH, tl) * tp(phi, iH) +
             tp(iH, mH) * tp(P, iH)),
      eq("CDM12", psi * hr + rho * tl,
         tp(hr, iH) * tp(iA, dH) + tp(mA, iH) * tp(iA, rho) + tp(iA, tl) * tp(dA, iH) +
             tp(iA, mH) * tp(psi, iH) + l * tp(iA, iH)),
      eq("CDM14", phi * hr + gam * tl,
         tp(tl, iA) * tp(iA, gam) + tp(t, iA) * tp(iA, Q) + tp(iH, hr) * tp(phi, iH) +
             tp(iH, s) * tp(P, iH)),
  };
}

// Pick components by id and rename them: pairs of (new id, component id).
inline std::vector<Condition> relabel(const std::vector<Condition>& all,
                                      const std::vector<std::pair<std::string, std::string>>& ids) {
  std::vector<Condition> out;
  for (auto& [name, src] : ids) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Condition& c) { return c.id == src; });
    if (it == all.end()) throw std::out_of_range("no component " + src);
    out.push_back({name, it->residual});
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> identity_labels(
    std::initializer_list<const char*> ids) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto* s : ids) out.emplace_back(s, s);
  return out;
}

// ---- matched pairs ---------------------------------------------------------

struct MatchedPairAlgData {
  Algebra A, H;
  LinearMap harpoon_l, harpoon_r, tri_l, tri_r;

  Blocks blocks() const {
    Blocks b(A.space, H.space);
    b.muA = A.mu;
    b.muH = H.mu;
    b.harpoon_l = harpoon_l;
    b.harpoon_r = harpoon_r;
    b.tri_l = tri_l;
    b.tri_r = tri_r;
    b.validate();
    return b;
  }
};

struct MatchedPairCoalgData {
  Coalgebra A, H;
  LinearMap phi, psi, rho, gamma;

  Blocks blocks() const {
    Blocks b(A.space, H.space);
    b.dA = A.delta;
    b.dH = H.delta;
    b.phi = phi;
    b.psi = psi;
    b.rho = rho;
    b.gamma = gamma;
    b.validate();
    return b;
  }
};

struct CocycleSystemData {
  MatchedPairAlgData base;
  LinearMap sigma, theta;

  Blocks blocks() const {
    Blocks b = base.blocks();
    b.sigma = sigma;
    b.theta = theta;
    b.validate();
    return b;
  }
};

struct CycleCosystemData {
  MatchedPairCoalgData base;
  LinearMap P, Q;

  Blocks blocks() const {
    Blocks b = base.blocks();
    b.P = P;
    b.Q = Q;
    b.validate();
    return b;
  }
};

struct CocycleBraidedPair {
  CocycleSystemData alg;
  CycleCosystemData coalg;
  Rational lambda;

  Blocks blocks() const {
    Blocks b = alg.blocks(), c = coalg.blocks();
    if (!(b.A == c.A) || !(b.H == c.H)) throw DimensionMismatch("algebra and coalgebra sides differ");
    for (auto& r : {"delta_A", "delta_H", "phi", "psi", "rho", "gamma", "P", "Q"})
      b.role(r) = c.role(r);
    b.lambda = lambda;
    return b;
  }
};

inline MatchedPairAlgData matched_pair_alg_of(const Blocks& b) {
  return {Algebra(b.A, b.muA), Algebra(b.H, b.muH), b.harpoon_l, b.harpoon_r, b.tri_l, b.tri_r};
}
inline MatchedPairCoalgData matched_pair_coalg_of(const Blocks& b) {
  return {Coalgebra(b.A, b.dA), Coalgebra(b.H, b.dH), b.phi, b.psi, b.rho, b.gamma};
}
inline CocycleBraidedPair cocycle_pair_of(const Blocks& b) {
  return {{matched_pair_alg_of(b), b.sigma, b.theta},
          {matched_pair_coalg_of(b), b.P, b.Q},
          b.lambda};
}

inline CheckReport check_matched_pair_alg(const MatchedPairAlgData& d) {
  auto c = assoc_components(d.blocks());
  return evaluate(relabel(c, {{"ASSOC-A", "CC6"},
                              {"ASSOC-H", "CC5"},
                              {"BIMOD-H-1", "CP1"},
                              {"BIMOD-H-2", "CP2"},
                              {"BIMOD-H-3", "CP3"},
                              {"BIMOD-A-1", "CP7"},
                              {"BIMOD-A-2", "CP8"},
                              {"BIMOD-A-3", "CP9"},
                              {"AM1", "CP10"},
                              {"AM2", "CP11"},
                              {"AM3", "CP4"},
                              {"AM4", "CP5"},
                              {"AM5", "CP12"},
                              {"AM6", "CP6"}}));
}

inline CheckReport check_matched_pair_coalg(const MatchedPairCoalgData& d) {
  auto c = coassoc_components(d.blocks());
  return evaluate(relabel(c, {{"COASSOC-A", "CC8"},
                              {"COASSOC-H", "CC7"},
                              {"BICOMOD-A-1", "CCP7"},
                              {"BICOMOD-A-2", "CCP8"},
                              {"BICOMOD-A-3", "CCP9"},
                              {"BICOMOD-H-1", "CCP10"},
                              {"BICOMOD-H-2", "CCP11"},
                              {"BICOMOD-H-3", "CCP12"},
                              {"CM1", "CCP1"},
                              {"CM2", "CCP2"},
                              {"CM3", "CCP3"},
                              {"CM4", "CCP4"},
                              {"CM5", "CCP5"},
                              {"CM6", "CCP6"}}));
}

inline Blocks matched_blocks(const MatchedPairAlgData& a, const MatchedPairCoalgData& c,
                             const Rational& lambda) {
  return CocycleBraidedPair{{a, zero_map({c.H.space, c.H.space}, {a.A.space}),
                             zero_map({a.A.space, a.A.space}, {a.H.space})},
                            {c, zero_map({c.A.space}, {c.H.space, c.H.space}),
                             zero_map({c.H.space}, {c.A.space, c.A.space})},
                            lambda}
      .blocks();
}

inline CheckReport check_double_matched_pair(const MatchedPairAlgData& a,
                                             const MatchedPairCoalgData& c,
                                             const Rational& lambda) {
  auto comp = compat_components(matched_blocks(a, c, lambda));
  return evaluate(relabel(comp, {{"DM1", "CDM1"},
                                 {"DM2", "CDM2"},
                                 {"DM3", "CDM3"},
                                 {"DM4", "CDM4"},
                                 {"DM5", "CDM5"},
                                 {"DM6", "CDM6"},
                                 {"DM7", "CDM7"},
                                 {"DM8", "CDM8"},
                                 {"DM9", "CDM11"},
                                 {"DM10", "CDM12"},
                                 {"DM11", "CDM13"},
                                 {"DM12", "CDM14"}}));
}

// BB1 for A over H and its mirror for H over A.
inline CheckReport check_braided_pair(const MatchedPairAlgData& a, const MatchedPairCoalgData& c,
                                      const Rational& lambda) {
  auto comp = compat_components(matched_blocks(a, c, lambda));
  return evaluate(relabel(comp, {{"BB1", "CBB1"}, {"BB2", "CBB2"}}));
}

inline Algebra bicrossed_product(const MatchedPairAlgData& d) {
  return assemble_product(d.blocks());
}
inline Coalgebra bicrossed_coproduct(const MatchedPairCoalgData& d) {
  return assemble_coproduct(d.blocks());
}
inline WeightedInfBialgebra double_cross_biproduct(const MatchedPairAlgData& a,
                                                   const MatchedPairCoalgData& c,
                                                   const Rational& lambda) {
  return assemble_bialgebra(matched_blocks(a, c, lambda));
}

// ---- cocycle / cycle systems ---------------------------------------------

inline CheckReport check_cocycles(const CocycleSystemData& d) {
  return evaluate(relabel(assoc_components(d.blocks()), identity_labels({"CC1", "CC2", "CC5", "CC6"})));
}
inline CheckReport check_cocycle_cross_system(const CocycleSystemData& d) {
  return evaluate(relabel(
      assoc_components(d.blocks()),
      identity_labels({"CC1", "CC2", "CC5", "CC6", "CP1", "CP2", "CP3", "CP4", "CP5", "CP6",
                       "CP7", "CP8", "CP9", "CP10", "CP11", "CP12"})));
}
inline CheckReport check_cycles(const CycleCosystemData& d) {
  return evaluate(
      relabel(coassoc_components(d.blocks()), identity_labels({"CC3", "CC4", "CC7", "CC8"})));
}
inline CheckReport check_cycle_cross_cosystem(const CycleCosystemData& d) {
  return evaluate(relabel(
      coassoc_components(d.blocks()),
      identity_labels({"CC3", "CC4", "CC7", "CC8", "CCP1", "CCP2", "CCP3", "CCP4", "CCP5",
                       "CCP6", "CCP7", "CCP8", "CCP9", "CCP10", "CCP11", "CCP12"})));
}
inline CheckReport check_cocycle_braided(const CocycleBraidedPair& p) {
  return evaluate(relabel(compat_components(p.blocks()), identity_labels({"CBB1", "CBB2"})));
}
inline CheckReport check_cocycle_double_matched_pair(const CocycleBraidedPair& p) {
  return evaluate(relabel(
      compat_components(p.blocks()),
      identity_labels({"CDM1", "CDM2", "CDM3", "CDM4", "CDM5", "CDM6", "CDM7", "CDM8", "CDM9",
                       "CDM10", "CDM11", "CDM12", "CDM13", "CDM14"})));
}

inline Algebra cocycle_cross_product(const CocycleSystemData& d) {
  return assemble_product(d.blocks());
}
inline Coalgebra cycle_cross_coproduct(const CycleCosystemData& d) {
  return assemble_coproduct(d.blocks());
}
inline WeightedInfBialgebra cocycle_bicrossproduct(const CocycleBraidedPair& p) {
  return assemble_bialgebra(p.blocks());
}

// Each construction is checked both ways: the assembled bialgebra is valid iff
// the hypotheses and the listed conditions hold.
struct ConstructionReport {
  CheckReport forward;     // bialgebra checks on the assembled structure
  CheckReport conditions;  // labelled conditions on the blocks
  CheckReport hypotheses;  // remaining assumptions (systems and braided conditions)
  bool consistent() const { return forward.ok() == (hypotheses.ok() && conditions.ok()); }
};

inline ConstructionReport verify_double_cross(const MatchedPairAlgData& a,
                                              const MatchedPairCoalgData& c,
                                              const Rational& lambda) {
  CheckReport hyp = check_matched_pair_alg(a);
  hyp += check_matched_pair_coalg(c);
  hyp += check_braided_pair(a, c, lambda);
  return {check_bialgebra(double_cross_biproduct(a, c, lambda)),
          check_double_matched_pair(a, c, lambda), hyp};
}

inline ConstructionReport verify_cocycle_bicrossproduct(const CocycleBraidedPair& p) {
  CheckReport hyp = check_cocycle_cross_system(p.alg);
  hyp += check_cycle_cross_cosystem(p.coalg);
  hyp += check_cocycle_braided(p);
  return {check_bialgebra(cocycle_bicrossproduct(p)), check_cocycle_double_matched_pair(p), hyp};
}

inline Blocks change_basis(const Blocks& b, const BasisChange& bc) {
  Blocks out = b;
  for (auto& [n, m] : out.roles()) *m = change_basis(*m, bc);
  return out;
}

// A biproduct is the special case with only H acting and coacting on A.
inline Blocks blocks_of(const BraidedObject& o) {
  Blocks b(o.carrier, o.base.space());
  b.muA = o.mu;
  b.muH = o.base.mu();
  b.dA = o.delta;
  b.dH = o.base.delta();
  b.harpoon_l = o.act_left;
  b.harpoon_r = o.act_right;
  b.phi = o.phi;
  b.psi = o.psi;
  b.lambda = o.lambda();
  return b;
}

}  // namespace ibx
