#pragma once
// Test corpora shared by the unit tests and the acceptance run.

#include <random>
#include <string>
#include <vector>

#include "ibx/catalog.hpp"
#include "ibx/extending.hpp"

namespace corpus {

using namespace ibx;

// Invertible matrix with small integer and half-integer entries.
inline LinearMap random_invertible(const Space& s, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-2, 2), den(1, 2);
  for (;;) {
    Matrix m(s.dim(), std::vector<Rational>(s.dim()));
    for (auto& row : m)
      for (auto& v : row) v = Rational(mpq_class(num(rng), den(rng)));
    if (rank(m) == static_cast<std::size_t>(s.dim())) return from_matrix(s, s, m);
  }
}

inline BasisChange random_change(const std::vector<Space>& spaces, std::mt19937& rng) {
  BasisChange bc;
  for (auto& s : spaces) bc.emplace(s.name(), random_invertible(s, rng));
  return bc;
}

// ---- single-entry perturbations on A (+) H with A = a0 a1, H = x0 x1 -------------

struct Slot {
  int type;  // 0 = A, 1 = H
  int index;
};
inline const Slot kSlots[4] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

// Block holding the product component of types (i, j) -> k.
inline std::string product_role(int ti, int tj, int tk) {
  if (ti == 0 && tj == 0) return tk == 0 ? "mu_A" : "theta";
  if (ti == 1 && tj == 1) return tk == 1 ? "mu_H" : "sigma";
  if (ti == 1 && tj == 0) return tk == 0 ? "harpoon_l" : "tri_r";
  return tk == 0 ? "harpoon_r" : "tri_l";
}
// Block holding the coproduct component of types k -> (p, q).
inline std::string coproduct_role(int tk, int tp, int tq) {
  if (tk == 0) {
    if (tp == 0 && tq == 0) return "delta_A";
    if (tp == 1 && tq == 0) return "phi";
    if (tp == 0 && tq == 1) return "psi";
    return "P";
  }
  if (tp == 1 && tq == 1) return "delta_H";
  if (tp == 0 && tq == 1) return "rho";
  if (tp == 1 && tq == 0) return "gamma";
  return "Q";
}

struct Perturbation {
  std::string label;     // the one identity the perturbation should break
  std::string detail;    // product role / coproduct role
  Blocks base, perturbed;
};

// The base carries one coproduct entry e_k -> e_p (x) e_q with p, q != k, so
// it is coassociative and, with every product zero, a valid cocycle
// bicrossproduct. The perturbation adds one product entry e_i e_j = e_k with
// i, j != k, which keeps the product associative. Each pair breaks a small set
// of compatibility components; the first pair isolating each label is kept.
inline std::vector<Perturbation> cocycle_perturbations() {
  Space A = Space::numbered("a", 2), H = Space::numbered("x", 2);
  std::map<std::string, Perturbation> found;
  for (int k = 0; k < 4; ++k)
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            if (p == k || q == k || i == k || j == k) continue;
            Blocks b(A, H);
            std::string rd = coproduct_role(kSlots[k].type, kSlots[p].type, kSlots[q].type);
            b.role(rd).set({kSlots[k].index, kSlots[p].index, kSlots[q].index}, 1);
            Blocks base = b;
            std::string rm = product_role(kSlots[i].type, kSlots[j].type, kSlots[k].type);
            b.role(rm).set({kSlots[i].index, kSlots[j].index, kSlots[k].index}, 1);
            auto rep = verify_cocycle_bicrossproduct(cocycle_pair_of(b));
            auto failed = rep.conditions.failed();
            if (failed.size() != 1 || !rep.hypotheses.ok()) continue;
            found.try_emplace(failed[0], Perturbation{failed[0], rm + "/" + rd, base, b});
          }
  std::vector<Perturbation> out;
  for (auto& [_, p] : found) out.push_back(p);
  return out;
}

// ---- braided objects --------------------------------------------------------------

struct BraidedRoles {
  LinearMap muA, muH, l, r, dA, dH, phi, psi;
};

inline BraidedObject make_braided(const Space& A, const Space& H, const BraidedRoles& m,
                                  const Rational& lambda = 0) {
  return BraidedObject(WeightedInfBialgebra(Algebra(H, m.muH), Coalgebra(H, m.dH), lambda), A,
                       m.muA, m.dA, m.l, m.r, m.phi, m.psi);
}

struct BraidedPerturbation {
  std::string label;
  std::string detail;
  BraidedObject base, perturbed;
};

// Same scheme restricted to the roles a biproduct uses.
inline std::vector<BraidedPerturbation> braided_perturbations() {
  Space A = Space::numbered("a", 2), H = Space::numbered("x", 2);
  auto prod = [](int ti, int tj, int tk) -> std::string {
    if (ti == 0 && tj == 0 && tk == 0) return "muA";
    if (ti == 1 && tj == 1 && tk == 1) return "muH";
    if (ti == 1 && tj == 0 && tk == 0) return "l";
    if (ti == 0 && tj == 1 && tk == 0) return "r";
    return "";
  };
  auto coprod = [](int tk, int tp, int tq) -> std::string {
    if (tk == 0 && tp == 0 && tq == 0) return "dA";
    if (tk == 1 && tp == 1 && tq == 1) return "dH";
    if (tk == 0 && tp == 1 && tq == 0) return "phi";
    if (tk == 0 && tp == 0 && tq == 1) return "psi";
    return "";
  };
  std::map<std::string, BraidedPerturbation> found;
  for (int k = 0; k < 4; ++k)
    for (int p = 0; p < 4; ++p)
      for (int q = 0; q < 4; ++q)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) {
            if (p == k || q == k || i == k || j == k) continue;
            std::string rd = coprod(kSlots[k].type, kSlots[p].type, kSlots[q].type);
            std::string rm = prod(kSlots[i].type, kSlots[j].type, kSlots[k].type);
            if (rd.empty() || rm.empty()) continue;
            std::map<std::string, LinearMap> M = {
                {"muA", zero_map({A, A}, {A})}, {"muH", zero_map({H, H}, {H})},
                {"l", zero_map({H, A}, {A})},   {"r", zero_map({A, H}, {A})},
                {"dA", zero_map({A}, {A, A})},  {"dH", zero_map({H}, {H, H})},
                {"phi", zero_map({A}, {H, A})}, {"psi", zero_map({A}, {A, H})}};
            auto make = [&] {
              return make_braided(A, H, {M["muA"], M["muH"], M["l"], M["r"], M["dA"], M["dH"],
                                         M["phi"], M["psi"]});
            };
            M[rd].set({kSlots[k].index, kSlots[p].index, kSlots[q].index}, 1);
            BraidedObject base = make();
            M[rm].set({kSlots[i].index, kSlots[j].index, kSlots[k].index}, 1);
            BraidedObject bad = make();
            auto rep = verify_bosonisation(bad);
            auto failed = rep.backward.failed();
            if (failed.size() != 1 || !rep.hypotheses.ok()) continue;
            found.try_emplace(failed[0], BraidedPerturbation{failed[0], rm + "/" + rd, base, bad});
          }
  std::vector<BraidedPerturbation> out;
  for (auto& [_, p] : found) out.push_back(p);
  return out;
}

// Valid braided objects: each algebra over its principal bialgebra, with and
// without its own product, and pairs of catalog bialgebras with no coupling.
inline std::vector<BraidedObject> valid_braided_objects() {
  std::vector<BraidedObject> out;
  for (const char* name : {"dual-numbers", "k2"})
    for (int l : {0, 1}) {
      Algebra a = named_algebra(name);
      auto sols = solve_wayb_grid(a, l, {-1, 0, 1});
      for (std::size_t n = 0; n < sols.size() && n < 2; ++n)
        for (bool cp : {true, false}) out.push_back(induced_braided_object(RMatrix(a, sols[n], l), cp));
    }
  auto rename = [](const WeightedInfBialgebra& b, const std::string& name) {
    Space s(name, b.space().labels());
    LinearMap t = transport(b.space(), s), ti = transport(s, b.space());
    Algebra alg(s, t * b.mu() * tp(ti, ti));
    return WeightedInfBialgebra(alg, Coalgebra(s, tp(t, t) * b.delta() * ti), b.lambda);
  };
  std::vector<std::pair<const char*, const char*>> pairs = {
      {"zero-coproduct", "k-principal"},
      {"dual-numbers-principal", "k2-principal"},
      {"k-principal", "dual-numbers-principal"}};
  for (auto [c, h] : pairs) {
    WeightedInfBialgebra carrier = rename(example_library(c, 0), "C");
    WeightedInfBialgebra base = example_library(h, 0);
    const Space &C = carrier.space(), &H = base.space();
    out.emplace_back(base, C, carrier.mu(), carrier.delta(), zero_map({H, C}, {C}),
                     zero_map({C, H}, {C}), zero_map({C}, {H, C}), zero_map({C}, {C, H}));
  }
  return out;
}

// ---- R-matrices ---------------------------------------------------------------------

// Every r on a dim-2 algebra with at most two nonzero entries, each in {-1, 1}.
inline std::vector<Tensor> small_support(const Algebra& a) {
  const Space& A = a.space;
  std::vector<std::pair<int, int>> pos;
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j) pos.emplace_back(i, j);
  std::vector<Tensor> out{Tensor({A, A})};
  for (std::size_t p = 0; p < pos.size(); ++p)
    for (int u : {-1, 1}) {
      Tensor t({A, A});
      t.set({pos[p].first, pos[p].second}, u);
      out.push_back(t);
      for (std::size_t q = p + 1; q < pos.size(); ++q)
        for (int v : {-1, 1}) {
          Tensor w = t;
          w.set({pos[q].first, pos[q].second}, v);
          out.push_back(w);
        }
    }
  return out;
}

struct SweepEntry {
  std::string algebra;
  RMatrix m;
};

inline std::vector<SweepEntry> rmatrix_sweep() {
  std::vector<SweepEntry> out;
  for (const char* name : {"dual-numbers", "k2"})
    for (int l : {0, 1}) {
      Algebra a = named_algebra(name);
      for (auto& t : small_support(a)) out.push_back({name, RMatrix(a, t, l)});
    }
  return out;
}

// Unital algebras and their regular bimodule for the Hopf-bimodule checks.
inline ActionData regular_bimodule(const Algebra& a) {
  Space M(a.space.name() + "'", a.space.labels());
  LinearMap j = transport(a.space, M), ji = transport(M, a.space), id = identity(a.space);
  return ActionData(a, M, j * a.mu * tp(id, ji), j * a.mu * tp(ji, id));
}

// ---- random blocks --------------------------------------------------------------------

inline LinearMap random_map(const LinearMap& shape, std::mt19937& rng, int density_pct = 50) {
  std::uniform_int_distribution<int> v(-2, 2), pct(0, 99);
  Tensor t = shape.tensor();
  for (std::size_t f = 0; f < t.size(); ++f)
    if (pct(rng) < density_pct) t.set_flat(f, v(rng));
  return LinearMap(t, shape.n_in());
}

inline Blocks random_blocks(const Space& A, const Space& H, std::mt19937& rng) {
  Blocks b(A, H);
  for (auto& [_, m] : b.roles()) *m = random_map(*m, rng);
  b.lambda = std::uniform_int_distribution<int>(-1, 1)(rng);
  return b;
}

}  // namespace corpus
