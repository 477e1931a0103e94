#pragma once

// Small exact solver for systems of polynomial equations over Q with one
// inequation. It is complete for the shapes that show up in morphism-pair
// systems (variables that can be isolated linearly, univariate factors with
// rational roots) and answers Unknown otherwise.

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "ibx/rational.hpp"

namespace ibx {

class Poly {
 public:
  using Monomial = std::vector<int>;

  Poly() = default;
  explicit Poly(int nvars) : n_(nvars) {}
  static Poly constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Poly var(int nvars, int i) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
  }

  int nvars() const { return n_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                              terms_.begin()->first.end(),
                                              [](int e) { return e == 0; }));
  }
  Rational constant_term() const {
    auto it = terms_.find(Monomial(n_, 0));
    return it == terms_.end() ? Rational() : it->second;
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out(a.n_);
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Monomial m(a.n_);
        for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
        out.add_term(m, ca * cb);
      }
    return out;
  }
  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  int degree_in(int v) const {
    int d = 0;
    for (auto& [m, _] : terms_) d = std::max(d, m[v]);
    return d;
  }
  std::set<int> variables() const {
    std::set<int> out;
    for (auto& [m, _] : terms_)
      for (int i = 0; i < n_; ++i)
        if (m[i] > 0) out.insert(i);
    return out;
  }
  // Coefficient of v^k as a polynomial in the remaining variables.
  Poly coeff_in(int v, int k) const {
    Poly out(n_);
    for (auto& [m, c] : terms_)
      if (m[v] == k) {
        Monomial r = m;
        r[v] = 0;
        out.add_term(r, c);
      }
    return out;
  }
  // Replace v by a polynomial.
  Poly substitute(int v, const Poly& value) const {
    int d = degree_in(v);
    std::vector<Poly> powers{constant(n_, 1)};
    for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * value);
    Poly out(n_);
    for (int k = 0; k <= d; ++k) out += coeff_in(v, k) * powers[k];
    return out;
  }
  Rational eval(const std::vector<Rational>& x) const {
    Rational s;
    for (auto& [m, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < n_; ++i)
        for (int e = 0; e < m[i]; ++e) t *= x[i];
      s += t;
    }
    return s;
  }
  // Same polynomial over more variables.
  Poly widen(int nvars) const {
    Poly out(nvars);
    for (auto& [m, c] : terms_) {
      Monomial w = m;
      w.resize(nvars, 0);
      out.terms_[w] = c;
    }
    return out;
  }
  // Divide by the leading coefficient so equal ideals compare equal.
  Poly monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / terms_.rbegin()->second);
  }

 private:
  int n_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Rational roots of a univariate polynomial given by coefficients a_0..a_d.
// Empty optional when the coefficients are too large to factor by trial division.
inline std::optional<std::vector<Rational>> rational_roots(std::vector<Rational> a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
  if (a.size() <= 1) return std::vector<Rational>{};
  std::set<Rational> roots;
  if (a.front().is_zero()) {
    roots.insert(Rational(0));
    while (!a.empty() && a.front().is_zero()) a.erase(a.begin());
    if (a.size() <= 1) return std::vector<Rational>(roots.begin(), roots.end());
  }
  mpz_class l = 1;
  for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> z;
  for (auto& c : a) z.push_back(c.num() * (l / c.den()));
  auto divisors = [](mpz_class v) -> std::optional<std::vector<mpz_class>> {
    v = abs(v);
    if (v > mpz_class("1000000000000")) return std::nullopt;
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= v; ++d)
      if (v % d == 0) {
        out.push_back(d);
        if (d * d != v) out.push_back(v / d);
      }
    return out;
  };
  auto ps = divisors(z.front()), qs = divisors(z.back());
  if (!ps || !qs) return std::nullopt;
  for (auto& p : *ps)
    for (auto& q : *qs)
      for (int sgn : {1, -1}) {
        Rational x(mpq_class(p * sgn, q));
        Rational v;
        for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
        if (v.is_zero()) roots.insert(x);
      }
  return std::vector<Rational>(roots.begin(), roots.end());
}

enum class Tri { No, Yes, Unknown };

inline const char* to_string(Tri t) {
  return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "unknown";
}

struct SolveResult {
  Tri verdict = Tri::Unknown;
  std::vector<Rational> witness;  // original variables only, when verdict is Yes
};

// ---- Groebner bases, lex order with variable 0 highest ---------------------

namespace detail {

inline bool divides(const Poly::Monomial& a, const Poly::Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Poly::Monomial mono_lcm(const Poly::Monomial& a, const Poly::Monomial& b) {
  Poly::Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}
inline Poly monomial_times(const Poly& p, const Poly::Monomial& m, const Rational& c) {
  Poly out(p.nvars());
  for (auto& [pm, pc] : p.terms()) {
    Poly::Monomial x = pm;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += m[i];
    out.add_term(x, pc * c);
  }
  return out;
}
inline const Poly::Monomial& lead(const Poly& p) { return p.terms().rbegin()->first; }
inline const Rational& lead_coeff(const Poly& p) { return p.terms().rbegin()->second; }

// Full reduction of p by g.
inline Poly reduce(Poly p, const std::vector<Poly>& g) {
  Poly rem(p.nvars());
  while (!p.is_zero()) {
    const auto lm = lead(p);
    const Rational lc = lead_coeff(p);
    bool hit = false;
    for (auto& q : g) {
      if (!divides(lead(q), lm)) continue;
      Poly::Monomial d(lm.size());
      for (std::size_t i = 0; i < lm.size(); ++i) d[i] = lm[i] - lead(q)[i];
      p -= monomial_times(q, d, lc / lead_coeff(q));
      hit = true;
      break;
    }
    if (!hit) {
      rem.add_term(lm, lc);
      p.add_term(lm, -lc);
    }
  }
  return rem;
}

}  // namespace detail

// Reduced monic Groebner basis, or nullopt once more than `budget`
// S-polynomial reductions have been spent.
inline std::optional<std::vector<Poly>> groebner(std::vector<Poly> f, std::size_t budget) {
  using namespace detail;
  std::vector<Poly> g;
  for (auto& p : f)
    if (!p.is_zero()) g.push_back(p.monic());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);
  std::size_t spent = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.back();
    pairs.pop_back();
    const auto &li = lead(g[i]), &lj = lead(g[j]);
    bool coprime = true;
    for (std::size_t k = 0; k < li.size(); ++k) coprime = coprime && (li[k] == 0 || lj[k] == 0);
    if (coprime) continue;
    if (++spent > budget) return std::nullopt;
    auto l = mono_lcm(li, lj);
    Poly::Monomial di(l.size()), dj(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) {
      di[k] = l[k] - li[k];
      dj[k] = l[k] - lj[k];
    }
    Poly sp = monomial_times(g[i], di, Rational(1)) - monomial_times(g[j], dj, Rational(1));
    Poly r = reduce(sp, g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant()) return std::vector<Poly>{Poly::constant(r.nvars(), 1)};
    g.push_back(r);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // Minimise, then inter-reduce.
  std::vector<Poly> min;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(lead(g[j]), lead(g[i])) && (lead(g[j]) != lead(g[i]) || j < i)) redundant = true;
    }
    if (!redundant) min.push_back(g[i]);
  }
  std::vector<Poly> out;
  for (std::size_t i = 0; i < min.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    out.push_back(reduce(min[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) { return lead(a) < lead(b); });
  return out;
}

// Generators of (eqs + <t f - 1>) intersected with the original ring, where t
// is a fresh variable ordered above all others. {1} when there is no common
// complex zero with f != 0.
inline std::optional<std::vector<Poly>> saturate(const std::vector<Poly>& eqs, const Poly& f,
                                                 std::size_t budget) {
  const int n = f.nvars();
  auto shift = [&](const Poly& p) {
    Poly out(n + 1);
    for (auto& [m, c] : p.terms()) {
      Poly::Monomial w(n + 1, 0);
      std::copy(m.begin(), m.end(), w.begin() + 1);
      out.add_term(w, c);
    }
    return out;
  };
  std::vector<Poly> gens;
  for (auto& e : eqs) gens.push_back(shift(e));
  gens.push_back(Poly::var(n + 1, 0) * shift(f) - Poly::constant(n + 1, 1));
  auto g = groebner(gens, budget);
  if (!g) return std::nullopt;
  std::vector<Poly> out;
  for (auto& p : *g) {
    if (p.degree_in(0) > 0) continue;
    Poly q(n);
    for (auto& [m, c] : p.terms()) q.add_term(Poly::Monomial(m.begin() + 1, m.end()), c);
    out.push_back(q);
  }
  if (out.empty() && g->size() == 1 && (*g)[0].is_constant())
    out.push_back(Poly::constant(n, 1));
  return out;
}

// Decide whether eqs = 0 and ineq != 0 have a common rational solution.
class PolySolver {
 public:
  explicit PolySolver(std::size_t node_budget = 2000, std::size_t gb_budget = 20000)
      : budget_(node_budget), gb_budget_(gb_budget) {}

  SolveResult solve(const std::vector<Poly>& eqs, const Poly& ineq, int nvars) {
    n_orig_ = nvars;
    nodes_ = 0;
    State s;
    s.n = nvars;
    s.eqs = eqs;
    s.ineq = ineq;
    return rec(std::move(s));
  }

 private:
  struct State {
    int n = 0;
    std::vector<Poly> eqs;
    Poly ineq;
    // v = poly, applied in reverse order to recover a witness
    std::vector<std::pair<int, Poly>> subs;
  };

  std::size_t budget_, gb_budget_, nodes_ = 0;
  int n_orig_ = 0;

  static bool normalize(State& s) {
    std::set<std::vector<std::pair<Poly::Monomial, Rational>>> seen;
    std::vector<Poly> out;
    for (auto& e : s.eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return false;
      Poly m = e.monic();
      std::vector<std::pair<Poly::Monomial, Rational>> key(m.terms().begin(), m.terms().end());
      if (seen.insert(key).second) out.push_back(m);
    }
    s.eqs = std::move(out);
    return !s.ineq.is_zero();
  }

  static void apply(State& s, int v, const Poly& value) {
    for (auto& e : s.eqs) e = e.substitute(v, value);
    s.ineq = s.ineq.substitute(v, value);
    s.subs.emplace_back(v, value);
  }

  SolveResult finish(const State& s) const {
    // Free variables: choose values making the inequation nonzero. A nonzero
    // polynomial of degree d in each variable has a nonvanishing point on any
    // grid of d+1 values per variable.
    const std::set<int> fv = s.ineq.variables();
    std::vector<int> free(fv.begin(), fv.end());
    std::vector<Rational> x(s.n);
    std::vector<std::vector<Rational>> vals;
    for (int v : free) {
      std::vector<Rational> c;
      int d = s.ineq.degree_in(v);
      for (int k = 0; c.size() <= static_cast<std::size_t>(d); ++k) {
        c.push_back(Rational((k + 1) / 2 * (k % 2 ? 1 : -1)));
      }
      vals.push_back(c);
    }
    std::vector<std::size_t> digit(free.size(), 0);
    for (;;) {
      for (std::size_t i = 0; i < free.size(); ++i) x[free[i]] = vals[i][digit[i]];
      if (!s.ineq.eval(x).is_zero()) break;
      std::size_t k = 0;
      while (k < free.size() && ++digit[k] == vals[k].size()) digit[k++] = 0;
      if (k == free.size()) return {Tri::Unknown, {}};  // unreachable for nonzero ineq
    }
    for (auto it = s.subs.rbegin(); it != s.subs.rend(); ++it) {
      Poly val = it->second.widen(s.n);
      x[it->first] = val.eval(x);
    }
    x.resize(n_orig_);
    return {Tri::Yes, x};
  }

  // Equations with a variable that can be isolated or a single variable.
  static bool easy(const std::vector<Poly>& eqs) {
    for (auto& e : eqs) {
      if (e.variables().size() == 1) return true;
      for (int v : e.variables())
        if (e.degree_in(v) == 1 && e.coeff_in(v, 1).is_constant()) return true;
    }
    return false;
  }

  SolveResult rec(State s, bool reduced = false) {
    if (++nodes_ > budget_) return {Tri::Unknown, {}};
    if (!normalize(s)) return {Tri::No, {}};
    if (s.eqs.empty()) return finish(s);

    // Linear isolation with a constant coefficient.
    for (auto& e : s.eqs)
      for (int v : e.variables())
        if (e.degree_in(v) == 1) {
          Poly c = e.coeff_in(v, 1);
          if (!c.is_constant()) continue;
          Poly value = -(e.coeff_in(v, 0) * (Rational(1) / c.constant_term()));
          apply(s, v, value);
          return rec(std::move(s));
        }

    // Univariate equation: branch on its rational roots.
    for (auto& e : s.eqs) {
      auto vars = e.variables();
      if (vars.size() != 1) continue;
      int v = *vars.begin();
      std::vector<Rational> coeffs;
      for (int k = 0; k <= e.degree_in(v); ++k) coeffs.push_back(e.coeff_in(v, k).constant_term());
      auto roots = rational_roots(coeffs);
      if (!roots) return {Tri::Unknown, {}};
      return branch(s, [&](State& b, std::size_t i) {
        if (i >= roots->size()) return false;
        apply(b, v, Poly::constant(b.n, (*roots)[i]));
        return true;
      });
    }

    // Saturate by the inequation: eqs together with t * ineq = 1 have no
    // common complex zero iff the basis is {1}. Otherwise keep the part of
    // the lex basis free of t, which has the same rational solutions with
    // ineq != 0 and is triangular.
    if (!reduced) {
      auto elim = saturate(s.eqs, s.ineq, gb_budget_);
      if (!elim) return {Tri::Unknown, {}};
      if (elim->size() == 1 && (*elim)[0].is_constant()) return {Tri::No, {}};
      s.eqs = *elim;
      const bool stuck = !easy(s.eqs);
      return rec(std::move(s), stuck);
    }

    // Positive-dimensional remainder: the lowest variable is free on the
    // closure of the solution set. Sample it; a miss proves nothing.
    int v = -1;
    for (auto& e : s.eqs)
      for (int x : e.variables()) v = std::max(v, x);
    SolveResult r = branch(s, [&](State& b, std::size_t i) {
      static const int samples[] = {0, 1, -1, 2, -2, 3};
      if (i >= std::size(samples)) return false;
      apply(b, v, Poly::constant(b.n, samples[i]));
      return true;
    });
    if (r.verdict == Tri::Yes) return r;
    return {Tri::Unknown, {}};
  }

  // Explore branches produced by make(state, i) until it returns false.
  template <typename Make>
  SolveResult branch(const State& s, Make make) {
    bool unknown = false;
    for (std::size_t i = 0;; ++i) {
      State b = s;
      if (!make(b, i)) break;
      SolveResult r = rec(std::move(b));
      if (r.verdict == Tri::Yes) return r;
      if (r.verdict == Tri::Unknown) unknown = true;
    }
    return {unknown ? Tri::Unknown : Tri::No, {}};
  }
};

// Recover the coefficients of a map u -> F(u) known to be polynomial of degree
// at most 2 in u, one polynomial per nonzero output component, from
// 1 + 2n + n(n-1)/2 evaluations.
template <typename Eval>
std::map<std::size_t, Poly> extract_quadratic(int n, Eval F) {
  std::vector<Rational> u(n);
  auto at = [&](std::initializer_list<std::pair<int, int>> sets) {
    std::fill(u.begin(), u.end(), Rational());
    for (auto [i, v] : sets) u[i] += Rational(v);
    std::map<std::size_t, Rational> out;
    for (auto& [k, c] : F(u)) out[k] = c;
    return out;
  };
  auto get = [](const std::map<std::size_t, Rational>& m, std::size_t k) {
    auto it = m.find(k);
    return it == m.end() ? Rational() : it->second;
  };
  std::map<std::size_t, Poly> polys;
  auto add = [&](std::size_t k, const Poly::Monomial& m, const Rational& c) {
    auto it = polys.try_emplace(k, Poly(n)).first;
    it->second.add_term(m, c);
  };
  auto F0 = at({});
  std::vector<std::map<std::size_t, Rational>> plus(n), minus(n);
  std::set<std::size_t> keys;
  for (auto& [k, _] : F0) keys.insert(k);
  for (int i = 0; i < n; ++i) {
    plus[i] = at({{i, 1}});
    minus[i] = at({{i, -1}});
    for (auto& [k, _] : plus[i]) keys.insert(k);
    for (auto& [k, _] : minus[i]) keys.insert(k);
  }
  Poly::Monomial zero(n, 0);
  std::vector<std::map<std::size_t, Rational>> lin(n), sq(n);
  for (std::size_t k : keys) {
    add(k, zero, get(F0, k));
    for (int i = 0; i < n; ++i) {
      Rational l = (get(plus[i], k) - get(minus[i], k)) / Rational(2);
      Rational q = (get(plus[i], k) + get(minus[i], k)) / Rational(2) - get(F0, k);
      lin[i][k] = l;
      sq[i][k] = q;
      Poly::Monomial m = zero;
      m[i] = 1;
      add(k, m, l);
      m[i] = 2;
      add(k, m, q);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto Fij = at({{i, 1}, {j, 1}});
      std::set<std::size_t> ks = keys;
      for (auto& [k, _] : Fij) ks.insert(k);
      for (std::size_t k : ks) {
        Rational c = get(Fij, k) - get(F0, k) - get(lin[i], k) - get(lin[j], k) -
                     get(sq[i], k) - get(sq[j], k);
        Poly::Monomial m = zero;
        m[i] = 1;
        m[j] = 1;
        add(k, m, c);
      }
    }
  for (auto it = polys.begin(); it != polys.end();)
    it = it->second.is_zero() ? polys.erase(it) : std::next(it);
  return polys;
}

}  // namespace ibx
