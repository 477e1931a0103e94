#include <catch_amalgamated.hpp>

#include "dense_oracle.hpp"
#include "ibx/catalog.hpp"

using namespace ibx;

namespace {
oracle::Table3 table(const LinearMap& m, int n) {
  oracle::Table3 t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t(i, j, k) = m.at({i, j, k});
  return t;
}
}  // namespace

TEST_CASE("catalog algebras are associative and unital", "[algebra]") {
  for (auto& name : algebra_names()) {
    Algebra a = named_algebra(name);
    INFO(name);
    CHECK(check_associativity(a).ok());
    CHECK(oracle::associative(table(a.mu, a.dim())));
    CHECK(a.unit.has_value() == !name.starts_with("null"));
  }
  CHECK_THROWS_AS(named_algebra("octonions"), UnknownExample);
}

TEST_CASE("a non-associative product is caught at the offending triple", "[algebra]") {
  Space S = Space::numbered("s", 2);
  LinearMap mu({S, S}, {S});
  mu.set({0, 0, 1}, 1);  // s0 s0 = s1
  mu.set({1, 0, 0}, 1);  // s1 s0 = s0
  auto rep = check_associativity(Algebra(S, mu));
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(oracle::associative(table(mu, 2)));
  REQUIRE(!rep.violations.empty());
  CHECK(rep.violations[0].inputs.size() == 3);
}

TEST_CASE("a bad unit is rejected at construction", "[algebra]") {
  Algebra a = named_algebra("dual-numbers");
  LinearMap u({}, {a.space});
  u.set({1}, 1);
  CHECK_THROWS_AS(Algebra(a.space, a.mu, u), InvalidUnit);
}

TEST_CASE("catalog bialgebras pass every check at several weights", "[bialgebra]") {
  for (auto& name : example_names())
    for (const Rational& l : {Rational(-1), Rational(0), Rational(1), Rational(2, 3)}) {
      if (name == "zero-coproduct" && !l.is_zero()) {
        CHECK_THROWS(example_library(name, l));
        continue;
      }
      auto b = example_library(name, l);
      INFO(name << " lambda " << l);
      CHECK(check_bialgebra(b).ok());
      const int n = b.space().dim();
      CHECK(oracle::bialgebra(table(b.mu(), n), table(b.delta(), n), l));
    }
}

TEST_CASE("the compatibility residual matches the dense loop", "[bialgebra]") {
  Algebra a = named_algebra("dual-numbers");
  LinearMap d({a.space}, {a.space, a.space});
  d.set({1, 1, 1}, 1);
  for (int l : {0, 1}) {
    WeightedInfBialgebra b(a, Coalgebra(a.space, d), l);
    CHECK(check_weighted_compatibility(b).ok() == oracle::compatible(table(a.mu, 2), table(d, 2), l));
  }
}

TEST_CASE("weight is visible in the unit's coproduct", "[bialgebra]") {
  Algebra k = named_algebra("k");
  for (const Rational& l : {Rational(-1), Rational(0), Rational(3, 4)}) {
    LinearMap d({k.space}, {k.space, k.space});
    d.set({0, 0, 0}, -l);
    WeightedInfBialgebra b(k, Coalgebra(k.space, d), l);
    CHECK(check_weighted_compatibility(b).ok());
    CHECK(coproduct_of_unit(b) == -l * unit_square(k));
    d.set({0, 0, 0}, -l + 1);
    CHECK_FALSE(check_weighted_compatibility(WeightedInfBialgebra(k, Coalgebra(k.space, d), l)).ok());
  }
}

TEST_CASE("algebra and coalgebra on different spaces do not combine", "[bialgebra]") {
  Algebra a = named_algebra("k", "A"), b = named_algebra("k", "B");
  CHECK_THROWS_AS(WeightedInfBialgebra(a, Coalgebra(b.space, zero_map({b.space}, {b.space, b.space})), 0),
                  DimensionMismatch);
}
