#include <catch_amalgamated.hpp>

#include "ibx/check.hpp"

using namespace ibx;

TEST_CASE("rationals parse and normalise exactly", "[rational]") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse(" -2/3 ").str() == "-2/3");
  CHECK(Rational::parse("+5").str() == "5");
  CHECK(Rational::parse("0/7").is_zero());
  CHECK(Rational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
  for (const char* bad : {"", "1/0", "1.5", "a", "1/-2", "--1", "1/"})
    CHECK_THROWS_AS(Rational::parse(bad), ParseError);
}

TEST_CASE("rational arithmetic has no rounding", "[rational]") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK((Rational(2, 3) * Rational(3, 2)).is_integer());
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(abs(Rational(-7, 3)) == Rational(7, 3));
}

TEST_CASE("tensors store only nonzero entries in row-major order", "[tensor]") {
  Space A = Space::numbered("a", 2), B = Space::numbered("b", 3);
  Tensor t({A, B});
  CHECK(t.size() == 6);
  CHECK(t.flat({1, 2}) == 5);
  CHECK(t.unflat(4) == Index{1, 1});
  t.set({1, 2}, 4);
  t.add({1, 2}, -4);
  CHECK(t.is_zero());
  t.set({0, 1}, Rational(1, 2));
  CHECK(t.nnz() == 1);
  CHECK_THROWS(t.at({2, 0}));
  CHECK_THROWS(t.at({0}));
}

TEST_CASE("tensor product, permutation and contraction", "[tensor]") {
  Space A = Space::numbered("a", 2);
  Tensor u = basis_vector(A, 0), v = basis_vector(A, 1);
  Tensor uv = tensor_product(u, v);
  CHECK(uv.at({0, 1}) == 1);
  Tensor vu = permute(uv, {1, 0});
  CHECK(vu == tensor_product(v, u));
  CHECK_THROWS_AS(permute(uv, {0, 0}), BadPermutation);
  Tensor m({A, A});
  m.set({0, 0}, 2);
  m.set({1, 1}, 3);
  m.set({0, 1}, 5);
  Tensor tr = contract(m, 0, 1);
  CHECK(tr.arity() == 0);
  CHECK(tr.at_flat(0) == 5);
}

TEST_CASE("linear maps compose, tensor and check shapes", "[linear]") {
  Space A = Space::numbered("a", 2), B = Space::numbered("b", 2);
  LinearMap f({A}, {B});
  f.set({0, 1}, 1);
  f.set({1, 0}, 2);
  LinearMap g({B}, {A});
  g.set({1, 1}, 1);
  g.set({0, 0}, 1);
  LinearMap gf = g * f;
  CHECK(gf.at({0, 1}) == 1);
  CHECK(gf.at({1, 0}) == 2);
  CHECK_THROWS_AS(f * f, DimensionMismatch);
  LinearMap ff = tp(f, f);
  CHECK(ff.n_in() == 2);
  CHECK(ff.at({1, 0, 0, 1}) == 2);
  CHECK(identity(A) * g == g);
  CHECK(flip(A, B) * flip(B, A) == tp(identity(B), identity(A)));
  LinearMap sw = flip(A, A);
  CHECK(sw * sw == tp(identity(A), identity(A)));
  CHECK(element(basis_vector(A, 1)).n_in() == 0);
}

TEST_CASE("rank and inverse over the rationals", "[linear]") {
  Matrix m = {{1, 2}, {2, 4}};
  CHECK(rank(m) == 1);
  CHECK_FALSE(inverse(m).has_value());
  Matrix n = {{1, 2}, {3, 4}};
  auto inv = inverse(n);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(-2));
  CHECK((*inv)[1][0] == Rational(3, 2));
}

TEST_CASE("change of basis is invertible and functorial", "[linear]") {
  Space A = Space::numbered("a", 2);
  LinearMap mu({A, A}, {A});
  mu.set({0, 0, 0}, 1);
  mu.set({0, 1, 1}, 1);
  mu.set({1, 0, 1}, 1);
  LinearMap T = from_matrix(A, A, {{1, 1}, {0, 2}});
  LinearMap Tinv = from_matrix(A, A, *inverse(to_matrix(T)));
  LinearMap there = change_basis(mu, {{"a", T}});
  CHECK_FALSE(there == mu);
  CHECK(change_basis(there, {{"a", Tinv}}) == mu);
  CHECK_THROWS(change_basis(mu, {{"a", from_matrix(A, A, {{1, 1}, {1, 1}})}}));
}

TEST_CASE("check reports name the failing identity and basis tuple", "[check]") {
  Space A = Space::numbered("a", 2);
  LinearMap r({A, A}, {A});
  r.set({1, 0, 1}, 3);
  CheckReport rep = evaluate(std::vector<Condition>{{"GOOD", zero_map({A}, {A})}, {"BAD", r}});
  CHECK_FALSE(rep.ok());
  CHECK(rep.checked == std::vector<std::string>{"GOOD", "BAD"});
  CHECK(rep.holds("GOOD"));
  CHECK_FALSE(rep.holds("BAD"));
  CHECK(rep.failed() == std::vector<std::string>{"BAD"});
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].inputs == Index{1, 0});
  CHECK(rep.violations[0].residual.at({1}) == 3);
  CHECK(rep.restricted({"GOOD"}).ok());
}
