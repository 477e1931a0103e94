#include <catch_amalgamated.hpp>

#include "corpus.hpp"
#include "ibx/io.hpp"

using namespace ibx;
using io::FileKind;
using io::json;

namespace {
std::vector<io::StructureFile> one_of_each() {
  std::vector<io::StructureFile> out;
  Algebra dn = named_algebra("dual-numbers");
  out.push_back(io::from_algebra(dn));
  out.push_back(io::from_coalgebra(example_library("k2-principal", 1).coalg));
  out.push_back(io::from_bialgebra(example_library("mat2-principal", Rational(2, 3))));
  out.push_back(io::from_rmatrix(RMatrix(named_algebra("k2"), unit_square(named_algebra("k2")), 1)));
  auto o = corpus::valid_braided_objects().front();
  out.push_back(io::from_braided(o));
  out.push_back(io::from_blocks(FileKind::MatchedPair, blocks_of(o)));
  auto p = corpus::cocycle_perturbations().front();
  out.push_back(io::from_blocks(FileKind::CocycleBraidedPair, p.perturbed));
  out.push_back(io::from_datum(zero_datum(ExtKind::A1, dn, Space::numbered("V", 1))));
  return out;
}

const char* kMinimal = R"({
  "format_version": "1", "kind": "algebra",
  "spaces": [{"name": "A", "dim": 1}],
  "tensors": {"mu": [[0, 0, 0, "1"]]}
})";

json minimal() { return json::parse(kMinimal); }
}  // namespace

TEST_CASE("every file kind survives a round trip", "[io]") {
  for (auto& f : one_of_each()) {
    INFO(to_string(f.kind));
    std::string text = io::serialize(f);
    io::StructureFile back = io::parse(text);
    CHECK(io::serialize(back) == text);
    CHECK(io::digest(back) == io::digest(f));
    for (auto& [role, t] : back.tensors) CHECK(t == f.get(role));
  }
}

TEST_CASE("structures come back unchanged", "[io]") {
  auto b = example_library("k2-principal", 1);
  auto back = io::to_bialgebra(io::parse(io::serialize(io::from_bialgebra(b))));
  CHECK(back.mu() == b.mu());
  CHECK(back.delta() == b.delta());
  CHECK(back.lambda == b.lambda);
  auto o = corpus::valid_braided_objects().back();
  auto ob = io::to_braided(io::parse(io::serialize(io::from_braided(o))));
  CHECK(ob.phi == o.phi);
  CHECK(ob.act_right == o.act_right);
}

TEST_CASE("the minimal file parses", "[io]") {
  auto f = io::parse(kMinimal);
  CHECK(f.kind == FileKind::Algebra);
  CHECK(f.lambda == 0);
  CHECK(io::to_algebra(f).mu.at({0, 0, 0}) == 1);
}

TEST_CASE("strict parsing rejects malformed files", "[io]") {
  auto reject = [](json j) { CHECK_THROWS_AS(io::from_json(j), ParseError); };
  json j = minimal();
  j["extra"] = 1;
  reject(j);
  j = minimal();
  j["format_version"] = "2";
  reject(j);
  j = minimal();
  j["tensors"]["mu"] = json::parse(R"([[0, 0, "1"]])");
  reject(j);
  j = minimal();
  j["tensors"]["mu"] = json::parse(R"([[0, 0, 0, "1"], [0, 0, 0, "2"]])");
  reject(j);
  j = minimal();
  j["tensors"]["mu"] = json::parse(R"([[0, 0, 0, "1/0"]])");
  reject(j);
  j = minimal();
  j["tensors"]["mu"] = json::parse(R"([[0, 0, 1, "1"]])");
  reject(j);
  j = minimal();
  j["tensors"]["delta"] = json::array();
  reject(j);
  j = minimal();
  j["tensors"].erase("mu");
  reject(j);
  j = minimal();
  j["kind"] = "semigroup";
  reject(j);
  j = minimal();
  j["type"] = "a1";
  reject(j);
  j = minimal();
  j["lambda"] = 0.5;
  reject(j);
  CHECK_THROWS_AS(io::parse("{ not json"), ParseError);
}

TEST_CASE("conversions refuse the wrong kind", "[io]") {
  auto alg = io::parse(kMinimal);
  CHECK_THROWS_AS(io::to_braided(alg), KindMismatch);
  CHECK_THROWS_AS(io::to_rmatrix(alg), KindMismatch);
  Blocks b(Space::numbered("a", 1), Space::numbered("x", 1));
  b.sigma.set({0, 0, 0}, 1);
  CHECK_THROWS_AS(io::from_blocks(FileKind::MatchedPair, b), KindMismatch);
}

TEST_CASE("the digest ignores the report and layout", "[io]") {
  auto f = io::parse(kMinimal);
  std::string d = io::digest(f);
  f.report = {{"note", "anything"}};
  CHECK(io::digest(f) == d);
  CHECK(io::digest(io::parse(minimal().dump())) == d);
  f.tensors["mu"].set({0, 0, 0}, 2);
  CHECK(io::digest(f) != d);
}

TEST_CASE("zero optional roles are left out", "[io]") {
  auto f = io::from_blocks(FileKind::MatchedPair,
                           blocks_of(corpus::valid_braided_objects().front()));
  json j = io::to_json(f);
  for (auto& [role, t] : f.tensors)
    if (t.is_zero()) CHECK_FALSE(j["tensors"].contains(role));
  CHECK(j["tensors"].contains("mu_A"));
}
