#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "dense_oracle.hpp"

using namespace ibx;

TEST_CASE("grid solver returns exactly the WAYB solutions on the grid", "[wayb]") {
  for (const char* name : {"dual-numbers", "k2"})
    for (int l : {0, 1}) {
      Algebra a = named_algebra(name);
      auto sols = solve_wayb_grid(a, l, {-1, 0, 1});
      std::size_t brute = 0;
      // All 81 candidates by the dense loop.
      oracle::Table3 mu(2);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) mu(i, j, k) = a.mu.at({i, j, k});
      oracle::Vec u = {a.unit->at({0}), a.unit->at({1})};
      for (int c = 0; c < 81; ++c) {
        oracle::Vec r(4);
        int x = c;
        for (int p = 0; p < 4; ++p, x /= 3) r[p] = x % 3 - 1;
        brute += oracle::is_zero(oracle::wayb(mu, u, r, l));
      }
      INFO(name << " lambda " << l);
      CHECK(sols.size() == brute);
      for (auto& r : sols) CHECK(wayb_residual(RMatrix(a, r, l)).is_zero());
    }
}

TEST_CASE("solver respects the support mask and the budget", "[wayb]") {
  Algebra a = named_algebra("mat2");
  auto sols = solve_wayb_grid(a, 0, {0, 1}, {{1, 1}});
  CHECK(sols.size() == 2);  // e12 (x) e12 squares to zero, so 0 and 1 both solve
  CHECK_THROWS_AS(solve_wayb_grid(a, 0, {-1, 0, 1}, {}, 1000), BudgetExceeded);
  CHECK_THROWS_AS(solve_wayb_grid(named_algebra("null1"), 0, {0}), MissingUnit);
  CHECK_THROWS(solve_wayb_grid(a, 0, {0, 1}, {{0, 4}}));
}

TEST_CASE("principal coproduct is coassociative exactly when the residual is invariant", "[criterion]") {
  for (auto& e : corpus::rmatrix_sweep()) {
    auto rep = check_coassociativity_criterion(e.m);
    CHECK(rep.agree());
  }
}

TEST_CASE("solutions give principal bialgebras with zero braiding", "[pipeline]") {
  for (auto& e : corpus::rmatrix_sweep()) {
    if (!wayb_residual(e.m).is_zero()) continue;
    CHECK(check_bialgebra(principal_bialgebra(e.m)).ok());
    CHECK(check_zero_braiding(e.m).ok());
  }
}

TEST_CASE("a non-solution cannot induce a Hopf bimodule", "[pipeline]") {
  Algebra a = named_algebra("dual-numbers");
  Tensor r({a.space, a.space});
  r.set({0, 0}, 1);  // 1 (x) 1 only solves at weight 1
  CHECK(wayb_residual(RMatrix(a, r, 1)).is_zero());
  CHECK_FALSE(wayb_residual(RMatrix(a, r, 0)).is_zero());
  CHECK_THROWS_AS(induced_hopf_bimodule(RMatrix(a, r, 0), corpus::regular_bimodule(a)), NotQuasitriangular);
}

TEST_CASE("identity variants on (id x D)(r) at nonzero weight", "[qt]") {
  Algebra a = named_algebra("k2");
  for (auto& r : solve_wayb_grid(a, 1, {-1, 0, 1})) {
    auto q = check_qt_identities(RMatrix(a, r, 1));
    CHECK(q.left.ok());
    CHECK(q.right.ok());
  }
  // With r = e1 (x) e2 the alternative sign fails while the first form holds.
  Tensor r({a.space, a.space});
  r.set({0, 1}, 1);
  auto q = check_qt_identities(RMatrix(a, r, 1));
  CHECK(q.right.ok());
  CHECK_FALSE(q.right_alt.ok());
}

TEST_CASE("an algebra without unit is refused", "[qt]") {
  Algebra n = named_algebra("null2");
  CHECK_THROWS_AS(RMatrix(n, Tensor({n.space, n.space}), 0), MissingUnit);
}
