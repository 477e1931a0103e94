#include <catch_amalgamated.hpp>

#include "corpus.hpp"

using namespace ibx;

namespace {
Coalgebra group_like_k() {
  Algebra k = named_algebra("k");
  LinearMap d({k.space}, {k.space, k.space});
  d.set({0, 0, 0}, 1);
  return Coalgebra(k.space, d);
}
}  // namespace

TEST_CASE("condition lists agree with the assembled axioms", "[datum]") {
  Space V = Space::numbered("V", 1);
  std::vector<ExtendingDatum> zeros = {
      zero_datum(ExtKind::A1, named_algebra("k"), V), zero_datum(ExtKind::A2, named_algebra("k"), V),
      zero_datum(ExtKind::A1, named_algebra("dual-numbers"), V),
      zero_datum(ExtKind::C1, group_like_k(), V), zero_datum(ExtKind::C2, group_like_k(), V)};
  for (auto& z : zeros) {
    std::size_t valid = 0, total = 0;
    enumerate_data(z, {0, 1}, [&](const ExtendingDatum& d) {
      bool direct = check_unified_structure(d).ok();
      bool listed = check_extending_datum(d).ok();
      INFO(to_string(d.kind));
      CHECK(direct == listed);
      valid += direct;
      ++total;
    });
    CHECK(valid > 0);
    CHECK(valid < total);
  }
}

TEST_CASE("bialgebra data of both types agree with the assembled axioms", "[datum]") {
  auto base = example_library("k-principal", 0);
  Space V = Space::numbered("V", 1);
  for (auto kind : {ExtKind::I, ExtKind::II}) {
    std::size_t valid = 0;
    enumerate_data(zero_datum(kind, base, V), {0, 1}, [&](const ExtendingDatum& d) {
      CHECK(check_unified_structure(d).ok() == check_extending_datum(d).ok());
      valid += check_unified_structure(d).ok();
    });
    CHECK(valid > 0);
  }
}

TEST_CASE("datum types guard their roles", "[datum]") {
  Space V = Space::numbered("V", 1);
  CHECK_THROWS_AS(zero_datum(ExtKind::C1, named_algebra("k"), V), TypeMismatch);
  ExtendingDatum d = zero_datum(ExtKind::A1, named_algebra("k"), V);
  d.b.sigma.set({0, 0, 0}, 1);  // sigma is not an a1 role
  CHECK_THROWS(d.validate());
  CHECK_THROWS_AS(unified_coproduct(zero_datum(ExtKind::A2, named_algebra("k"), V)), TypeMismatch);
}

TEST_CASE("decomposing a unified product returns the datum", "[split]") {
  std::mt19937 rng(1);
  Algebra k2 = named_algebra("k2");
  Space V = Space::numbered("V", 1);
  int hits = 0;
  for (int t = 0; t < 200 && hits < 5; ++t) {
    ExtendingDatum d = zero_datum(ExtKind::A2, k2, V);
    for (auto& r : datum_roles(ExtKind::A2)) d.b.role(r) = corpus::random_map(d.b.role(r), rng, 25);
    if (!check_unified_structure(d).ok()) continue;
    ++hits;
    Algebra E = unified_product(d);
    ExtendingDatum back = decompose_algebra_extension(E, 2, ExtKind::A2);
    for (auto& [n, m] : d.b.roles()) CHECK(back.b.role(n).tensor().records() == m->tensor().records());
  }
  CHECK(hits > 0);
  CHECK_THROWS_AS(split_space(k2.space, 3), DimensionMismatch);
}

TEST_CASE("morphism pairs: identity always works, bijectivity follows s", "[morphism]") {
  Space V = Space::numbered("V", 1);
  auto z = zero_datum(ExtKind::C2, group_like_k(), V);
  enumerate_data(z, {0, 1}, [&](const ExtendingDatum& d) {
    if (!check_unified_structure(d).ok()) return;
    CHECK(check_morphism_pair(d, d, identity_pair(d.A(), d.V())).ok());
  });
  Space A = Space::numbered("a", 2), W = Space::numbered("w", 2);
  CHECK(is_bijective(A, W, pair_from_vector(A, W, {1, 2, 3, 4, 1, 0, 0, 1})));
  CHECK_FALSE(is_bijective(A, W, pair_from_vector(A, W, {0, 0, 0, 0, 1, 1, 1, 1})));
}

TEST_CASE("equivalence witnesses are genuine homomorphisms", "[equivalence]") {
  auto cls = classify_extensions(named_algebra("k"), 1, {0, 1});
  for (auto& c : cls.classes)
    for (auto m : c.members) {
      if (m == c.representative) continue;
      auto& d = cls.data[c.representative];
      auto& e = cls.data[m];
      auto r = decide_equivalence(d, e);
      CHECK(r.verdict == Tri::Yes);
      REQUIRE(r.witness);
      CHECK(s_invertible(*r.witness));
      CHECK(check_direct_morphism(d, e, *r.witness).ok());
    }
  CHECK(cls.unresolved_pairs == 0);
}

TEST_CASE("classification counts on the line", "[classify]") {
  auto alg = classify_extensions(named_algebra("k"), 1, {0, 1});
  CHECK(alg.candidates == 80);
  CHECK(alg.data.size() == 20);
  CHECK(alg.classes.size() == 9);
  auto co = classify_extensions(group_like_k(), 1, {0, 1});
  CHECK(co.data.size() == 20);
  CHECK(co.classes.size() == 11);
  CHECK_THROWS_AS(classify_extensions(named_algebra("k2"), 2, {-1, 0, 1}, 1000), BudgetExceeded);
}

TEST_CASE("shorter a1 list differs from the full one somewhere", "[morphism]") {
  Algebra k = named_algebra("k");
  Space V = Space::numbered("V", 1);
  std::vector<ExtendingDatum> data;
  enumerate_data(zero_datum(ExtKind::A1, k, V), {0, 1}, [&](const ExtendingDatum& d) {
    if (check_unified_structure(d).ok()) data.push_back(d);
  });
  std::size_t differ = 0;
  for (auto& d : data)
    for (auto& e : data)
      for (int r : {-1, 0, 1})
        for (int s : {-1, 1}) {
          auto m = pair_from_vector(d.A(), d.V(), {r, s});
          bool full = check_morphism_pair(d, e, m).ok();
          CHECK(full == check_direct_morphism(d, e, m).ok());
          differ += full != evaluate(morphism_conditions_a1_variant(d.b, e.b, m)).ok();
        }
  CHECK(differ > 0);
}
