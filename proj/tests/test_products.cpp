#include <catch_amalgamated.hpp>

#include "corpus.hpp"

using namespace ibx;

namespace {
// Random blocks whose assembled structures are sometimes valid: sparse entries
// in {0, 1} on a 1 + 1 split.
Blocks sparse_blocks(std::mt19937& rng) {
  Space A = Space::numbered("a", 1), H = Space::numbered("x", 1);
  Blocks b(A, H);
  std::bernoulli_distribution on(0.3);
  for (auto& [_, m] : b.roles())
    if (on(rng)) m->set({0, 0, 0}, 1);
  return b;
}
}  // namespace

TEST_CASE("component identities add up to the assembled axioms", "[components]") {
  std::mt19937 rng(5);
  int assoc_valid = 0, coassoc_valid = 0, compat_valid = 0;
  for (int t = 0; t < 400; ++t) {
    Blocks b = sparse_blocks(rng);
    b.lambda = t % 3 - 1;
    bool a = check_associativity(assemble_product(b)).ok();
    bool c = check_coassociativity(assemble_coproduct(b)).ok();
    bool w = check_weighted_compatibility(assemble_bialgebra(b)).ok();
    CHECK(a == evaluate(assoc_components(b)).ok());
    CHECK(c == evaluate(coassoc_components(b)).ok());
    CHECK(w == evaluate(compat_components(b)).ok());
    assoc_valid += a;
    coassoc_valid += c;
    compat_valid += w;
  }
  // Both outcomes occur, so the comparisons above are not vacuous.
  CHECK(assoc_valid > 0);
  CHECK(assoc_valid < 400);
  CHECK(coassoc_valid > 0);
  CHECK(compat_valid > 0);
}

TEST_CASE("component ids are distinct and complete", "[components]") {
  Blocks b(Space::numbered("a", 1), Space::numbered("x", 1));
  std::set<std::string> ids;
  std::size_t n = 0;
  for (auto& list : {assoc_components(b), coassoc_components(b), compat_components(b)})
    for (auto& c : list) {
      ids.insert(c.id);
      ++n;
    }
  CHECK(ids.size() == n);
  CHECK(n == 16 + 16 + 16);
}

TEST_CASE("double cross biproduct of a biproduct's blocks", "[matched]") {
  for (auto& o : corpus::valid_braided_objects()) {
    Blocks b = blocks_of(o);
    auto rep = verify_double_cross(matched_pair_alg_of(b), matched_pair_coalg_of(b), b.lambda);
    CHECK(rep.consistent());
    CHECK(rep.forward.ok());
    auto bp = biproduct(o);
    auto dc = double_cross_biproduct(matched_pair_alg_of(b), matched_pair_coalg_of(b), b.lambda);
    CHECK(bp.mu().tensor().records() == dc.mu().tensor().records());
    CHECK(bp.delta().tensor().records() == dc.delta().tensor().records());
  }
}

TEST_CASE("every mixed compatibility condition can be broken alone", "[cocycle]") {
  auto perts = corpus::cocycle_perturbations();
  std::set<std::string> labels;
  for (auto& p : perts) {
    labels.insert(p.label);
    INFO(p.label << " via " << p.detail);
    auto base = verify_cocycle_bicrossproduct(cocycle_pair_of(p.base));
    auto bad = verify_cocycle_bicrossproduct(cocycle_pair_of(p.perturbed));
    CHECK(base.forward.ok());
    CHECK_FALSE(bad.forward.ok());
    CHECK(bad.conditions.failed() == std::vector<std::string>{p.label});
    CHECK(bad.consistent());
  }
  for (int k = 1; k <= 14; ++k) CHECK(labels.count("CDM" + std::to_string(k)));
}

TEST_CASE("zero cocycles reduce the cocycle bicrossproduct", "[cocycle]") {
  std::mt19937 rng(17);
  for (int t = 0; t < 5; ++t) {
    Blocks b = corpus::random_blocks(Space::numbered("a", 2), Space::numbered("x", 1), rng);
    for (auto* r : {"sigma", "theta", "P", "Q"}) b.role(r) = 0 * b.role(r);
    auto cb = cocycle_bicrossproduct(cocycle_pair_of(b));
    auto dc = double_cross_biproduct(matched_pair_alg_of(b), matched_pair_coalg_of(b), b.lambda);
    CHECK(cb.mu() == dc.mu());
    CHECK(cb.delta() == dc.delta());
  }
}

TEST_CASE("split and assemble are inverse", "[blocks]") {
  std::mt19937 rng(23);
  Blocks b = corpus::random_blocks(Space::numbered("a", 2), Space::numbered("x", 2), rng);
  auto w = assemble_bialgebra(b);
  Blocks back = split_blocks(b.A, b.H, &w.alg.mu, &w.coalg.delta, b.lambda);
  for (auto& [n, m] : b.roles()) CHECK(back.role(n) == *m);
}

TEST_CASE("blocks reject maps of the wrong shape", "[blocks]") {
  Blocks b(Space::numbered("a", 1), Space::numbered("x", 2));
  b.sigma = zero_map({b.A, b.A}, {b.A});
  CHECK_THROWS_AS(b.validate(), DimensionMismatch);
}
