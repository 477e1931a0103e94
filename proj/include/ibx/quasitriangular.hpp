#pragma once

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>

#include "ibx/hopf_modules.hpp"

namespace ibx {

struct MissingUnit : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NotQuasitriangular : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BadBimodule : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
  BudgetExceeded(const std::string& what, long double total, std::size_t budget)
      : std::runtime_error(what + " has " + count_text(total) + " candidates, budget is " +
                           std::to_string(budget)) {}

 private:
  static std::string count_text(long double total) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(0) << total;
    return os.str();
  }
};

// Candidate r in A (x) A over a unital algebra, with the weight it is tested at.
struct RMatrix {
  Algebra alg;
  Tensor r;
  Rational lambda;

  RMatrix() = default;
  RMatrix(Algebra a, Tensor t, Rational l) : alg(std::move(a)), r(std::move(t)), lambda(std::move(l)) {
    if (!alg.unit) throw MissingUnit("r-matrix needs a unital algebra");
    if (!(r.legs() == std::vector<Space>{alg.space, alg.space}))
      throw DimensionMismatch("r must live in A (x) A");
  }
  const Space& space() const { return alg.space; }
  Tensor unit() const { return alg.unit->tensor(); }
};

// Product in A (x) A (x) A, legwise.
inline Tensor product3(const LinearMap& mu, const Tensor& w1, const Tensor& w2) {
  Tensor both = permute(tensor_product(w1, w2), {0, 3, 1, 4, 2, 5});
  return (tp(mu, mu, mu) * element(both)).tensor();
}

inline Tensor r12(const RMatrix& m) { return tensor_product(m.r, m.unit()); }
inline Tensor r23(const RMatrix& m) { return tensor_product(m.unit(), m.r); }
inline Tensor r13(const RMatrix& m) { return permute(tensor_product(m.r, m.unit()), {0, 2, 1}); }

// r13 r12 - r12 r23 + r23 r13 - lambda r13
inline Tensor wayb_residual(const RMatrix& m) {
  const auto& mu = m.alg.mu;
  Tensor a = r12(m), b = r13(m), c = r23(m);
  return product3(mu, b, a) - product3(mu, a, c) + product3(mu, c, b) - m.lambda * b;
}

// delta_r(a) = a r - r a - lambda a (x) 1
inline LinearMap principal_derivation(const RMatrix& m) {
  const LinearMap& mu = m.alg.mu;
  LinearMap id = identity(m.space()), r = element(m.r);
  return tp(mu, id) * tp(id, r) - tp(id, mu) * tp(r, id) - m.lambda * tp(id, *m.alg.unit);
}

inline WeightedInfBialgebra principal_bialgebra(const RMatrix& m) {
  return WeightedInfBialgebra(m.alg, Coalgebra(m.space(), principal_derivation(m)), m.lambda);
}

// a . w == w . a for w in A (x) A (x) A, multiplying on the outer legs.
inline CheckReport check_a_invariance(const Algebra& alg, const Tensor& w) {
  LinearMap id = identity(alg.space), e = element(w);
  LinearMap left = tp(alg.mu, id, id) * tp(id, e);
  LinearMap right = tp(id, id, alg.mu) * tp(e, id);
  return evaluate(Condition{"A-INV", right - left});
}

struct CriterionReport {
  CheckReport coassociativity;  // of delta_r
  CheckReport invariance;       // of the WAYB residual
  bool agree() const { return coassociativity.ok() == invariance.ok(); }
};

inline CriterionReport check_coassociativity_criterion(const RMatrix& m) {
  return {check_coassociativity(Coalgebra(m.space(), principal_derivation(m))),
          check_a_invariance(m.alg, wayb_residual(m))};
}

// Two candidate closed forms for (id (x) delta_r)(r) are audited separately.
struct QtIdentityReport {
  CheckReport left;         // (delta (x) id)(r) = -r23 r13
  CheckReport right;        // (id (x) delta)(r) = r13 r12 - lambda (r13 + r12)
  CheckReport right_alt;    // (id (x) delta)(r) = r13 r12 + lambda (r13 - r12)
  bool ok() const { return left.ok() && right.ok(); }
};

inline QtIdentityReport check_qt_identities(const RMatrix& m) {
  const auto& mu = m.alg.mu;
  LinearMap d = principal_derivation(m), id = identity(m.space()), r = element(m.r);
  Tensor a = r12(m), b = r13(m), c = r23(m);
  Tensor dl = (tp(d, id) * r).tensor();
  Tensor dr = (tp(id, d) * r).tensor();
  Tensor ba = product3(mu, b, a);
  auto cond = [](const char* id, const Tensor& t) { return Condition{id, element(t)}; };
  return {evaluate(cond("QT-LEFT", -product3(mu, c, b) - dl)),
          evaluate(cond("QT-RIGHT", ba - m.lambda * (b + a) - dr)),
          evaluate(cond("QT-RIGHT-ALT", ba + m.lambda * (b - a) - dr))};
}

// Identity map between two spaces with the same dimension.
inline LinearMap transport(const Space& from, const Space& to) {
  if (from.dim() != to.dim()) throw DimensionMismatch("transport between unequal dimensions");
  LinearMap t({from}, {to});
  for (int i = 0; i < from.dim(); ++i) t.set({i, i}, 1);
  return t;
}

// phi(m) = -u_i (x) v_i > m,  psi(m) = m < u_i (x) v_i - lambda m (x) 1
inline HopfBimoduleData induced_hopf_bimodule(const RMatrix& m, const ActionData& d) {
  if (!wayb_residual(m).is_zero()) throw NotQuasitriangular("r does not solve the weighted AYBE");
  if (!(d.base.space == m.space())) throw DimensionMismatch("bimodule over another algebra");
  if (!check_bimodule(d).ok()) throw BadBimodule("actions do not form a bimodule");
  const Space& V = d.carrier;
  LinearMap idA = identity(m.space()), idV = identity(V), r = element(m.r);
  LinearMap phi = -(tp(idA, d.act_left) * tp(r, idV));
  LinearMap psi = tp(d.act_right, idA) * tp(idV, r) - m.lambda * tp(idV, *m.alg.unit);
  return HopfBimoduleData(principal_bialgebra(m), V, d.act_left, d.act_right, phi, psi);
}

// The algebra as a braided object over its principal bialgebra: regular
// actions, induced coactions, zero carrier coproduct. The carrier product is
// the algebra's own or zero.
inline BraidedObject induced_braided_object(const RMatrix& m, bool carrier_product = true) {
  const Space& A = m.space();
  std::vector<std::string> labels = A.labels();
  Space M(A.name() + "'", labels);
  LinearMap j = transport(A, M), ji = transport(M, A), idA = identity(A);
  LinearMap mu = m.alg.mu;
  ActionData act(m.alg, M, j * mu * tp(idA, ji), j * mu * tp(ji, idA));
  HopfBimoduleData h = induced_hopf_bimodule(m, act);
  LinearMap muM = carrier_product ? j * mu * tp(ji, ji) : zero_map({M, M}, {M});
  return BraidedObject(h.base, M, muM, zero_map({M}, {M, M}), h.act_left, h.act_right, h.phi,
                       h.psi);
}

inline CheckReport check_zero_braiding(const RMatrix& m) {
  return evaluate(Condition{"ZERO-BRAID", braiding_map(induced_braided_object(m))});
}

inline std::size_t default_budget() {
  if (const char* s = std::getenv("IBX_BUDGET")) {
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end != s && v >= 1) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

// All r with entries from `coeffs` on the masked positions (zero elsewhere)
// solving the weighted AYBE, in lexicographic order of the entry vector.
// Positions are (i,j) basis pairs; an empty mask means every position.
inline std::vector<Tensor> solve_wayb_grid(const Algebra& alg, const Rational& lambda,
                                           std::vector<Rational> coeffs,
                                           std::vector<std::pair<int, int>> mask = {},
                                           std::size_t budget = default_budget()) {
  if (!alg.unit) throw MissingUnit("solver needs a unital algebra");
  const Space& A = alg.space;
  const int n = A.dim();
  std::set<Rational> uniq(coeffs.begin(), coeffs.end());
  coeffs.assign(uniq.begin(), uniq.end());
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient grid");
  if (mask.empty())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mask.emplace_back(i, j);
  std::sort(mask.begin(), mask.end());
  mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
  for (auto [i, j] : mask)
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("support mask out of range");
  const std::size_t P = mask.size(), C = coeffs.size();
  long double total = std::pow(static_cast<long double>(C), static_cast<long double>(P));
  if (total > static_cast<long double>(budget))
    throw BudgetExceeded("grid", total, budget);

  // residual(r) = sum_pq r_p r_q Q(e_p, e_q) - lambda sum_p r_p (e_p)_13,
  // stored per output component for early exit.
  auto unit_r = [&](std::size_t p) {
    Tensor t({A, A});
    t.set({mask[p].first, mask[p].second}, 1);
    return RMatrix(alg, t, lambda);
  };
  std::vector<RMatrix> basis;
  for (std::size_t p = 0; p < P; ++p) basis.push_back(unit_r(p));
  struct Term {
    std::size_t p, q;
    Rational c;
  };
  std::map<std::size_t, std::vector<Term>> quad;
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> lin;
  for (std::size_t p = 0; p < P; ++p) {
    Tensor b13 = r13(basis[p]), b12 = r12(basis[p]), b23 = r23(basis[p]);
    for (std::size_t q = 0; q < P; ++q) {
      Tensor t = product3(alg.mu, b13, r12(basis[q])) - product3(alg.mu, b12, r23(basis[q])) +
                 product3(alg.mu, b23, r13(basis[q]));
      for (auto& [f, v] : t.entries()) quad[f].push_back({p, q, v});
    }
    for (auto& [f, v] : b13.entries()) lin[f].emplace_back(p, -lambda * v);
  }
  std::set<std::size_t> comps;
  for (auto& [f, _] : quad) comps.insert(f);
  for (auto& [f, _] : lin) comps.insert(f);

  std::vector<Tensor> out;
  std::vector<std::size_t> digit(P, 0);
  std::vector<Rational> x(P);
  for (;;) {
    for (std::size_t p = 0; p < P; ++p) x[p] = coeffs[digit[p]];
    bool ok = true;
    for (std::size_t f : comps) {
      Rational s;
      if (auto it = quad.find(f); it != quad.end())
        for (auto& t : it->second)
          if (!x[t.p].is_zero() && !x[t.q].is_zero()) s += x[t.p] * x[t.q] * t.c;
      if (auto it = lin.find(f); it != lin.end())
        for (auto& [p, c] : it->second)
          if (!x[p].is_zero()) s += x[p] * c;
      if (!s.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Tensor r({A, A});
      for (std::size_t p = 0; p < P; ++p) r.set({mask[p].first, mask[p].second}, x[p]);
      out.push_back(std::move(r));
    }
    std::size_t k = P;
    while (k > 0) {
      --k;
      if (++digit[k] < C) break;
      digit[k] = 0;
      if (k == 0) return out;
    }
    if (P == 0) return out;
  }
}

inline RMatrix change_basis(const RMatrix& m, const BasisChange& bc) {
  return RMatrix(change_basis(m.alg, bc), change_basis(element(m.r), bc).tensor(), m.lambda);
}

}  // namespace ibx
