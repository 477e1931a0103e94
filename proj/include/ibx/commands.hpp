#pragma once

#include <chrono>

#include "ibx/catalog.hpp"
#include "ibx/io.hpp"

namespace ibx::cmd {

using io::FileKind;
using io::json;
using io::NamedCheck;
using io::StructureFile;

// Bad flag values; exit code 2 like parse errors.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CheckOutcome {
  std::vector<NamedCheck> checks;
  json extra = json::object();
  bool ok() const { return io::all_ok(checks); }
};

inline const std::map<FileKind, std::vector<std::string>>& profiles() {
  static const std::map<FileKind, std::vector<std::string>> p = {
      {FileKind::Algebra, {"algebra"}},
      {FileKind::Coalgebra, {"coalgebra"}},
      {FileKind::Bialgebra, {"bialgebra", "algebra", "coalgebra", "compatibility", "unit-law"}},
      {FileKind::Braided, {"braided", "hopf-bimodule", "bosonisation"}},
      {FileKind::MatchedPair, {"double-matched-pair", "matched-pair-alg", "matched-pair-coalg"}},
      {FileKind::CocycleSystem, {"cocycle-cross-system", "cocycles"}},
      {FileKind::CycleCosystem, {"cycle-cross-cosystem", "cycles"}},
      {FileKind::CocycleBraidedPair,
       {"cocycle-bicross", "cocycle-double-matched-pair", "cocycle-braided"}},
      {FileKind::ExtendingDatum, {"extending-datum", "unified"}},
      {FileKind::RMatrix, {"wayb", "criterion", "qt-identities", "pipeline"}}};
  return p;
}

inline bool has_algebra_roles(const StructureFile& f) {
  for (auto* r : {"mu_A", "mu_H", "harpoon_l", "harpoon_r", "tri_l", "tri_r"})
    if (f.has(r) && !f.get(r).is_zero()) return true;
  return false;
}
inline bool has_coalgebra_roles(const StructureFile& f) {
  for (auto* r : {"delta_A", "delta_H", "phi", "psi", "rho", "gamma"})
    if (f.has(r) && !f.get(r).is_zero()) return true;
  return false;
}

// First listed profile, except for matched pairs that carry only one side.
inline std::string default_profile(const StructureFile& f) {
  if (f.kind == FileKind::MatchedPair) {
    bool a = has_algebra_roles(f), c = has_coalgebra_roles(f);
    if (a && !c) return "matched-pair-alg";
    if (c && !a) return "matched-pair-coalg";
  }
  return profiles().at(f.kind).front();
}

inline std::vector<NamedCheck> construction_checks(const ConstructionReport& r) {
  return {{"assembled", r.forward}, {"conditions", r.conditions}, {"hypotheses", r.hypotheses}};
}

inline CheckOutcome run_profile(const StructureFile& f, std::string profile = "") {
  if (profile.empty()) profile = default_profile(f);
  bool known = false;
  for (auto& [_, names] : profiles())
    known = known || std::find(names.begin(), names.end(), profile) != names.end();
  if (!known) throw UsageError("unknown profile '" + profile + "'");
  auto& mine = profiles().at(f.kind);
  if (std::find(mine.begin(), mine.end(), profile) == mine.end())
    throw KindMismatch("profile '" + profile + "' does not apply to a " + to_string(f.kind) +
                       " file");

  CheckOutcome out;
  auto add = [&](const std::string& n, CheckReport r) { out.checks.push_back({n, std::move(r)}); };
  switch (f.kind) {
    case FileKind::Algebra: add("algebra", check_associativity(io::to_algebra(f))); break;
    case FileKind::Coalgebra: add("coalgebra", check_coassociativity(io::to_coalgebra(f))); break;
    case FileKind::Bialgebra: {
      auto b = io::to_bialgebra(f);
      if (profile == "bialgebra") add("bialgebra", check_bialgebra(b));
      if (profile == "algebra") add("algebra", check_associativity(b.alg));
      if (profile == "coalgebra") add("coalgebra", check_coassociativity(b.coalg));
      if (profile == "compatibility") add("compatibility", check_weighted_compatibility(b));
      if (profile == "unit-law") {
        if (!b.alg.unit) throw MissingUnit("unit-law profile needs a unit");
        Tensor one = unit_square(b.alg);
        add("unit-law", evaluate(Condition{"UNIT-LAW", element(-b.lambda * one - coproduct_of_unit(b))}));
      }
      break;
    }
    case FileKind::Braided: {
      auto o = io::to_braided(f);
      if (profile == "braided") add("braided", check_braided(o));
      if (profile == "hopf-bimodule") add("hopf-bimodule", check_hopf_bimodule(o.hopf()));
      if (profile == "bosonisation") {
        auto r = verify_bosonisation(o);
        add("biproduct", r.forward);
        add("nine-conditions", r.backward);
        add("hypotheses", r.hypotheses);
        out.extra["consistent"] = r.consistent();
      }
      break;
    }
    case FileKind::MatchedPair: {
      Blocks b = io::to_blocks(f);
      auto a = matched_pair_alg_of(b);
      auto c = matched_pair_coalg_of(b);
      if (profile == "matched-pair-alg") add("matched-pair-alg", check_matched_pair_alg(a));
      if (profile == "matched-pair-coalg") add("matched-pair-coalg", check_matched_pair_coalg(c));
      if (profile == "double-matched-pair") {
        auto r = verify_double_cross(a, c, f.lambda);
        out.checks = construction_checks(r);
        out.extra["consistent"] = r.consistent();
      }
      break;
    }
    case FileKind::CocycleSystem: {
      auto p = cocycle_pair_of(io::to_blocks(f));
      if (profile == "cocycles") add("cocycles", check_cocycles(p.alg));
      if (profile == "cocycle-cross-system")
        add("cocycle-cross-system", check_cocycle_cross_system(p.alg));
      break;
    }
    case FileKind::CycleCosystem: {
      auto p = cocycle_pair_of(io::to_blocks(f));
      if (profile == "cycles") add("cycles", check_cycles(p.coalg));
      if (profile == "cycle-cross-cosystem")
        add("cycle-cross-cosystem", check_cycle_cross_cosystem(p.coalg));
      break;
    }
    case FileKind::CocycleBraidedPair: {
      auto p = cocycle_pair_of(io::to_blocks(f));
      if (profile == "cocycle-braided") add("cocycle-braided", check_cocycle_braided(p));
      if (profile == "cocycle-double-matched-pair")
        add("cocycle-double-matched-pair", check_cocycle_double_matched_pair(p));
      if (profile == "cocycle-bicross") {
        auto r = verify_cocycle_bicrossproduct(p);
        out.checks = construction_checks(r);
        out.extra["consistent"] = r.consistent();
      }
      break;
    }
    case FileKind::ExtendingDatum: {
      auto d = io::to_datum(f);
      if (profile == "extending-datum") add("extending-datum", check_extending_datum(d));
      if (profile == "unified") add("unified", check_unified_structure(d));
      break;
    }
    case FileKind::RMatrix: {
      auto m = io::to_rmatrix(f);
      if (profile == "wayb") add("wayb", evaluate(Condition{"WAYB", element(wayb_residual(m))}));
      if (profile == "criterion") {
        auto r = check_coassociativity_criterion(m);
        // The criterion is an equivalence; it is reported as one identity.
        CheckReport agree;
        agree.checked.push_back("CRITERION");
        if (!r.agree()) agree.violations.push_back({"CRITERION", {}, Tensor()});
        add("criterion", agree);
        out.extra["coassociative"] = r.coassociativity.ok();
        out.extra["invariant"] = r.invariance.ok();
      }
      if (profile == "qt-identities") {
        auto r = check_qt_identities(m);
        add("qt-left", r.left);
        add("qt-right", r.right);
        out.extra["sign_audit"] = {{"right", r.right.ok()}, {"right_alt", r.right_alt.ok()}};
      }
      if (profile == "pipeline") {
        add("wayb", evaluate(Condition{"WAYB", element(wayb_residual(m))}));
        if (out.ok()) {
          add("principal-bialgebra", check_bialgebra(principal_bialgebra(m)));
          add("induced-hopf-bimodule",
              check_hopf_bimodule(induced_braided_object(m).hopf()));
          add("zero-braiding", check_zero_braiding(m));
        }
      }
      break;
    }
  }
  return out;
}

inline json check_report(const StructureFile& f, const CheckOutcome& o, const std::string& profile,
                         std::optional<double> timing = std::nullopt) {
  json extra = o.extra;
  extra["profile"] = profile;
  extra["kind"] = to_string(f.kind);
  return io::report_json("check", io::digest(f), o.checks, extra, timing);
}

// ---- construct ------------------------------------------------------------

inline const std::vector<std::string>& product_names() {
  static const std::vector<std::string> p = {
      "biproduct",  "bicrossed",  "double-cross", "cocycle-bicross", "unified-a1", "unified-a2",
      "unified-c1", "unified-c2", "unified-I",    "unified-II",      "special"};
  return p;
}

struct Constructed {
  StructureFile file;  // report field filled in
  bool ok = false;
};

namespace detail {

inline StructureFile of_structure(const Algebra& a) { return io::from_algebra(a); }
inline StructureFile of_structure(const Coalgebra& c) { return io::from_coalgebra(c); }
inline StructureFile of_structure(const WeightedInfBialgebra& b) { return io::from_bialgebra(b); }

inline void require(const StructureFile& f, FileKind k, const std::string& product) {
  if (f.kind != k)
    throw KindMismatch("product '" + product + "' needs a " + to_string(k) + " file, got " +
                       to_string(f.kind));
}

}  // namespace detail

inline Constructed construct(const StructureFile& f, const std::string& product) {
  if (std::find(product_names().begin(), product_names().end(), product) == product_names().end())
    throw UsageError("unknown product '" + product + "'");
  StructureFile out;
  std::vector<NamedCheck> checks;
  if (product == "biproduct") {
    detail::require(f, FileKind::Braided, product);
    auto o = io::to_braided(f);
    auto r = verify_bosonisation(o);
    out = io::from_bialgebra(biproduct(o));
    checks = {{"biproduct", r.forward}, {"nine-conditions", r.backward}, {"hypotheses", r.hypotheses}};
  } else if (product == "bicrossed") {
    detail::require(f, FileKind::MatchedPair, product);
    Blocks b = io::to_blocks(f);
    if (has_algebra_roles(f) || !has_coalgebra_roles(f)) {
      auto d = matched_pair_alg_of(b);
      Algebra a = bicrossed_product(d);
      out = io::from_algebra(a);
      checks = {{"product", check_associativity(a)}, {"matched-pair-alg", check_matched_pair_alg(d)}};
    } else {
      auto d = matched_pair_coalg_of(b);
      Coalgebra c = bicrossed_coproduct(d);
      out = io::from_coalgebra(c);
      checks = {{"coproduct", check_coassociativity(c)},
                {"matched-pair-coalg", check_matched_pair_coalg(d)}};
    }
  } else if (product == "double-cross") {
    detail::require(f, FileKind::MatchedPair, product);
    Blocks b = io::to_blocks(f);
    auto a = matched_pair_alg_of(b);
    auto c = matched_pair_coalg_of(b);
    out = io::from_bialgebra(double_cross_biproduct(a, c, f.lambda));
    checks = construction_checks(verify_double_cross(a, c, f.lambda));
  } else if (product == "cocycle-bicross") {
    auto p = [&] {
      if (f.kind != FileKind::CocycleSystem && f.kind != FileKind::CycleCosystem)
        detail::require(f, FileKind::CocycleBraidedPair, product);
      return cocycle_pair_of(io::to_blocks(f));
    }();
    if (f.kind == FileKind::CocycleSystem) {
      Algebra a = cocycle_cross_product(p.alg);
      out = io::from_algebra(a);
      checks = {{"product", check_associativity(a)},
                {"cocycle-cross-system", check_cocycle_cross_system(p.alg)}};
    } else if (f.kind == FileKind::CycleCosystem) {
      Coalgebra c = cycle_cross_coproduct(p.coalg);
      out = io::from_coalgebra(c);
      checks = {{"coproduct", check_coassociativity(c)},
                {"cycle-cross-cosystem", check_cycle_cross_cosystem(p.coalg)}};
    } else {
      out = io::from_bialgebra(cocycle_bicrossproduct(p));
      checks = construction_checks(verify_cocycle_bicrossproduct(p));
    }
  } else {
    detail::require(f, FileKind::ExtendingDatum, product);
    ExtKind want = parse_ext_kind(product == "special" ? "special" : product.substr(8));
    auto d = io::to_datum(f);
    if (d.kind != want)
      throw KindMismatch("product '" + product + "' needs a " + to_string(want) + " datum, got " +
                         to_string(d.kind));
    if (has_product(want) && has_coproduct(want))
      out = io::from_bialgebra(unified_bialgebra(d));
    else if (has_product(want))
      out = io::from_algebra(unified_product(d));
    else
      out = io::from_coalgebra(unified_coproduct(d));
    checks = {{"unified", check_unified_structure(d)}, {"extending-datum", check_extending_datum(d)}};
  }
  json extra = {{"product", product}, {"source_kind", to_string(f.kind)}};
  out.report = io::report_json("construct", io::digest(f), checks, extra);
  return {out, io::all_ok(checks)};
}

// ---- solve-wayb -----------------------------------------------------------

inline std::vector<Rational> parse_list(const std::string& s, const std::string& flag) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw UsageError(flag + " needs at least one value");
  return out;
}

// "i:j,k:l"
inline std::vector<std::pair<int, int>> parse_mask(const std::string& s) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("support mask entries look like i:j");
    try {
      std::size_t p1 = 0, p2 = 0;
      std::string a = item.substr(0, colon), b = item.substr(colon + 1);
      int i = std::stoi(a, &p1), j = std::stoi(b, &p2);
      if (p1 != a.size() || p2 != b.size()) throw std::invalid_argument("trailing");
      out.emplace_back(i, j);
    } catch (const std::logic_error&) {
      throw UsageError("bad support mask entry '" + item + "'");
    }
  }
  return out;
}

inline json rational_list(const std::vector<Rational>& v) {
  json j = json::array();
  for (auto& x : v) j.push_back(x.str());
  return j;
}

inline json solve_wayb(const StructureFile& f, std::optional<Rational> lambda,
                       const std::vector<Rational>& coeffs,
                       const std::vector<std::pair<int, int>>& mask,
                       std::size_t budget = default_budget()) {
  Algebra a = io::to_algebra(f);
  if (!a.unit) throw MissingUnit("solve-wayb needs an algebra with a unit");
  Rational l = lambda.value_or(f.lambda);
  for (auto [i, j] : mask)
    if (i < 0 || j < 0 || i >= a.space.dim() || j >= a.space.dim())
      throw UsageError("support mask entry out of range");
  auto sols = solve_wayb_grid(a, l, coeffs, mask, budget);
  json list = json::array();
  for (auto& r : sols) {
    RMatrix m(a, r, l);
    list.push_back({{"r", io::records_json(r)},
                    {"text", r.str()},
                    {"verified", wayb_residual(m).is_zero()}});
  }
  std::set<Rational> uniq(coeffs.begin(), coeffs.end());
  json support = json::array();
  for (auto [i, j] : mask) support.push_back({i, j});
  json extra = {{"lambda", l.str()},
                {"coeffs", rational_list({uniq.begin(), uniq.end()})},
                {"support", support},
                {"count", sols.size()},
                {"solutions", list}};
  return io::report_json("solve-wayb", io::digest(f), {}, extra);
}

// ---- classify ---------------------------------------------------------------

inline json classify(const StructureFile& f, std::optional<StructureKind> kind, int v_dim,
                     const std::vector<Rational>& grid, std::size_t budget = default_budget()) {
  if (v_dim < 1) throw UsageError("--v-dim must be positive");
  StructureKind k = kind.value_or(f.kind == FileKind::Coalgebra   ? StructureKind::Coalgebra
                                  : f.kind == FileKind::Bialgebra ? StructureKind::Bialgebra
                                                                  : StructureKind::Algebra);
  Classification c;
  StructureFile a_file;
  switch (k) {
    case StructureKind::Algebra: {
      Algebra a = io::to_algebra(f);
      c = classify_extensions(Algebra(a.space, a.mu), v_dim, grid, budget);
      a_file = io::from_algebra(Algebra(a.space, a.mu));
      break;
    }
    case StructureKind::Coalgebra: {
      Coalgebra a = io::to_coalgebra(f);
      c = classify_extensions(a, v_dim, grid, budget);
      a_file = io::from_coalgebra(a);
      break;
    }
    case StructureKind::Bialgebra: {
      auto b = io::to_bialgebra(f);
      b.alg.unit.reset();
      c = classify_extensions(b, v_dim, grid, budget);
      a_file = io::from_bialgebra(b);
      break;
    }
  }
  json classes = json::array();
  for (auto& cl : c.classes)
    classes.push_back({{"representative", io::to_json(io::from_datum(c.data[cl.representative]))},
                       {"size_over_grid", cl.members.size()},
                       {"members", cl.members}});
  std::set<Rational> uniq(grid.begin(), grid.end());
  json extra = {{"kind", to_string(k)},
                {"A", io::to_json(a_file)},
                {"V_dim", v_dim},
                {"grid", rational_list({uniq.begin(), uniq.end()})},
                {"candidates", c.candidates},
                {"valid", c.data.size()},
                {"unresolved_pairs", c.unresolved_pairs},
                {"classes", classes}};
  return io::report_json("classify", io::digest(f), {}, extra);
}

}  // namespace ibx::cmd
