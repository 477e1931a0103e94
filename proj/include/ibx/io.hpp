#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ibx/extending.hpp"

namespace ibx::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";
inline constexpr const char* kReportVersion = "1";

struct WriteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FileKind {
  Algebra,
  Coalgebra,
  Bialgebra,
  Braided,
  MatchedPair,
  CocycleSystem,
  CycleCosystem,
  CocycleBraidedPair,
  ExtendingDatum,
  RMatrix
};

inline const std::vector<std::pair<FileKind, std::string>>& kind_names() {
  static const std::vector<std::pair<FileKind, std::string>> names = {
      {FileKind::Algebra, "algebra"},
      {FileKind::Coalgebra, "coalgebra"},
      {FileKind::Bialgebra, "bialgebra"},
      {FileKind::Braided, "braided"},
      {FileKind::MatchedPair, "matched-pair"},
      {FileKind::CocycleSystem, "cocycle-system"},
      {FileKind::CycleCosystem, "cycle-cosystem"},
      {FileKind::CocycleBraidedPair, "cocycle-braided-pair"},
      {FileKind::ExtendingDatum, "extending-datum"},
      {FileKind::RMatrix, "rmatrix"}};
  return names;
}
inline const std::string& to_string(FileKind k) {
  for (auto& [v, n] : kind_names())
    if (v == k) return n;
  throw std::logic_error("unnamed file kind");
}
inline FileKind parse_file_kind(const std::string& s) {
  for (auto& [v, n] : kind_names())
    if (n == s) return v;
  throw ParseError("unknown structure kind '" + s + "'");
}

inline int space_count(FileKind k) {
  switch (k) {
    case FileKind::Algebra:
    case FileKind::Coalgebra:
    case FileKind::Bialgebra:
    case FileKind::RMatrix: return 1;
    default: return 2;
  }
}

// A role's legs as indices into the file's space list, inputs then outputs.
struct RoleSpec {
  std::string name;
  std::vector<int> ins, outs;
  bool required = false;
};

namespace detail {

inline const std::vector<RoleSpec>& block_specs() {
  static const std::vector<RoleSpec> s = {
      {"mu_A", {0, 0}, {0}},     {"mu_H", {1, 1}, {1}},      {"harpoon_l", {1, 0}, {0}},
      {"harpoon_r", {0, 1}, {0}}, {"tri_l", {0, 1}, {1}},     {"tri_r", {1, 0}, {1}},
      {"sigma", {1, 1}, {0}},    {"theta", {0, 0}, {1}},     {"delta_A", {0}, {0, 0}},
      {"delta_H", {1}, {1, 1}},  {"phi", {0}, {1, 0}},       {"psi", {0}, {0, 1}},
      {"rho", {1}, {0, 1}},      {"gamma", {1}, {1, 0}},     {"P", {0}, {1, 1}},
      {"Q", {1}, {0, 0}}};
  return s;
}

inline std::vector<RoleSpec> pick(std::initializer_list<const char*> names,
                                  std::set<std::string> required = {}) {
  std::vector<RoleSpec> out;
  for (const char* n : names)
    for (auto& s : block_specs())
      if (s.name == n) {
        out.push_back(s);
        out.back().required = required.count(n) > 0;
      }
  return out;
}

}  // namespace detail

// Roles a file of this kind may carry. For extending data the datum type
// selects the roles; V occupies the second space.
inline std::vector<RoleSpec> role_specs(FileKind k, std::optional<ExtKind> type = std::nullopt) {
  switch (k) {
    case FileKind::Algebra:
      return {{"mu", {0, 0}, {0}, true}, {"unit", {}, {0}, false}};
    case FileKind::Coalgebra:
      return {{"delta", {0}, {0, 0}, true}};
    case FileKind::Bialgebra:
      return {{"mu", {0, 0}, {0}, true}, {"delta", {0}, {0, 0}, true}, {"unit", {}, {0}, false}};
    case FileKind::RMatrix:
      return {{"mu", {0, 0}, {0}, true}, {"unit", {}, {0}, true}, {"r", {}, {0, 0}, true}};
    case FileKind::Braided:
      // carrier first, base bialgebra second
      return {{"mu_A", {0, 0}, {0}, true},      {"delta_A", {0}, {0, 0}, true},
              {"mu_H", {1, 1}, {1}, true},      {"delta_H", {1}, {1, 1}, true},
              {"unit_H", {}, {1}, false},       {"act_left", {1, 0}, {0}, true},
              {"act_right", {0, 1}, {0}, true}, {"phi", {0}, {1, 0}, true},
              {"psi", {0}, {0, 1}, true}};
    case FileKind::MatchedPair:
      return detail::pick({"mu_A", "mu_H", "harpoon_l", "harpoon_r", "tri_l", "tri_r", "delta_A",
                           "delta_H", "phi", "psi", "rho", "gamma"});
    case FileKind::CocycleSystem:
      return detail::pick({"mu_A", "mu_H", "harpoon_l", "harpoon_r", "tri_l", "tri_r", "sigma",
                           "theta"},
                          {"mu_A", "mu_H"});
    case FileKind::CycleCosystem:
      return detail::pick({"delta_A", "delta_H", "phi", "psi", "rho", "gamma", "P", "Q"},
                          {"delta_A", "delta_H"});
    case FileKind::CocycleBraidedPair: {
      auto all = detail::block_specs();
      for (auto& s : all)
        s.required = s.name == "mu_A" || s.name == "mu_H" || s.name == "delta_A" ||
                     s.name == "delta_H";
      return all;
    }
    case FileKind::ExtendingDatum: {
      if (!type) throw ParseError("extending datum needs a type");
      std::vector<RoleSpec> out;
      auto fixed = fixed_roles(*type), own = datum_roles(*type);
      for (auto& s : detail::block_specs()) {
        bool f = std::find(fixed.begin(), fixed.end(), s.name) != fixed.end();
        bool o = std::find(own.begin(), own.end(), s.name) != own.end();
        if (f || o) {
          out.push_back(s);
          out.back().required = f;
        }
      }
      return out;
    }
  }
  return {};
}

// A parsed structure file. Tensor legs follow the role specs of the kind.
struct StructureFile {
  std::string format_version = kFormatVersion;
  FileKind kind = FileKind::Algebra;
  std::optional<ExtKind> datum_type;  // extending-datum only
  Rational lambda;
  std::vector<Space> spaces;
  std::map<std::string, Tensor> tensors;
  json report;  // informational, written by construct; not part of equality

  bool has(const std::string& role) const { return tensors.count(role) > 0; }
  Tensor get(const std::string& role) const {
    auto it = tensors.find(role);
    if (it != tensors.end()) return it->second;
    return Tensor(legs_of(role));
  }
  LinearMap map(const std::string& role) const {
    return LinearMap(get(role), spec(role).ins.size());
  }
  RoleSpec spec(const std::string& role) const {
    for (auto& s : role_specs(kind, datum_type))
      if (s.name == role) return s;
    throw KindMismatch("role " + role + " is not part of a " + to_string(kind) + " file");
  }
  std::vector<Space> legs_of(const std::string& role) const {
    RoleSpec s = spec(role);
    std::vector<Space> legs;
    for (int i : s.ins) legs.push_back(spaces.at(i));
    for (int i : s.outs) legs.push_back(spaces.at(i));
    return legs;
  }
  void set(const std::string& role, const LinearMap& m) {
    if (!(m.tensor().legs() == legs_of(role)))
      throw DimensionMismatch("map for role " + role + " has the wrong legs");
    tensors[role] = m.tensor();
  }

  friend bool operator==(const StructureFile& a, const StructureFile& b) {
    return a.format_version == b.format_version && a.kind == b.kind &&
           a.datum_type == b.datum_type && a.lambda == b.lambda && a.spaces == b.spaces &&
           a.tensors == b.tensors;
  }
};

// ---- JSON <-> StructureFile -------------------------------------------------

inline json records_json(const Tensor& t) {
  json out = json::array();
  for (auto& [idx, v] : t.records()) {
    json rec = json::array();
    for (int i : idx) rec.push_back(i);
    rec.push_back(v.str());
    out.push_back(std::move(rec));
  }
  return out;
}

inline Rational rational_of(const json& j, const std::string& where) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError(where + ": rationals are written as \"p/q\" strings");
}

inline Tensor tensor_of(const json& j, std::vector<Space> legs, const std::string& role) {
  if (!j.is_array()) throw ParseError(role + ": expected a list of sparse records");
  Tensor t(std::move(legs));
  std::set<std::vector<int>> seen;
  for (auto& rec : j) {
    if (!rec.is_array() || rec.size() != t.arity() + 1)
      throw ParseError(role + ": each record needs " + std::to_string(t.arity()) +
                       " indices and a value");
    std::vector<int> idx;
    for (std::size_t k = 0; k < t.arity(); ++k) {
      if (!rec[k].is_number_integer()) throw ParseError(role + ": indices must be integers");
      long long i = rec[k].get<long long>();
      if (i < 0 || i >= t.legs()[k].dim())
        throw ParseError(role + ": index " + std::to_string(i) + " out of range on leg " +
                         std::to_string(k));
      idx.push_back(static_cast<int>(i));
    }
    if (!seen.insert(idx).second) throw ParseError(role + ": repeated index tuple");
    t.set(std::span<const int>(idx), rational_of(rec.back(), role));
  }
  return t;
}

inline json to_json(const StructureFile& f) {
  json j;
  j["format_version"] = f.format_version;
  j["kind"] = to_string(f.kind);
  if (f.datum_type) j["type"] = to_string(*f.datum_type);
  j["lambda"] = f.lambda.str();
  json spaces = json::array();
  for (auto& s : f.spaces) spaces.push_back({{"name", s.name()}, {"dim", s.dim()}, {"labels", s.labels()}});
  j["spaces"] = spaces;
  json tensors = json::object();
  for (auto& s : role_specs(f.kind, f.datum_type)) {
    auto it = f.tensors.find(s.name);
    if (it != f.tensors.end() && (s.required || !it->second.is_zero()))
      tensors[s.name] = records_json(it->second);
    else if (s.required)
      tensors[s.name] = json::array();
  }
  j["tensors"] = tensors;
  if (!f.report.is_null()) j["report"] = f.report;
  return j;
}

inline StructureFile from_json(const json& j) {
  if (!j.is_object()) throw ParseError("structure file must be a JSON object");
  static const std::set<std::string> known = {"format_version", "kind", "type", "lambda",
                                              "spaces", "tensors", "report"};
  for (auto& [k, _] : j.items())
    if (!known.count(k)) throw ParseError("unknown field '" + k + "'");
  StructureFile f;
  if (!j.contains("format_version") || !j["format_version"].is_string())
    throw ParseError("missing format_version");
  f.format_version = j["format_version"].get<std::string>();
  if (f.format_version != kFormatVersion)
    throw ParseError("unsupported format_version '" + f.format_version + "'");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing kind");
  f.kind = parse_file_kind(j["kind"].get<std::string>());
  if (f.kind == FileKind::ExtendingDatum) {
    if (!j.contains("type") || !j["type"].is_string()) throw ParseError("extending datum needs a type");
    try {
      f.datum_type = parse_ext_kind(j["type"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  } else if (j.contains("type")) {
    throw ParseError("field 'type' only applies to extending data");
  }
  if (j.contains("lambda")) f.lambda = rational_of(j["lambda"], "lambda");

  if (!j.contains("spaces") || !j["spaces"].is_array()) throw ParseError("missing spaces");
  for (auto& s : j["spaces"]) {
    if (!s.is_object() || !s.contains("name") || !s["name"].is_string())
      throw ParseError("each space needs a name");
    std::string name = s["name"].get<std::string>();
    std::vector<std::string> labels;
    if (s.contains("labels")) {
      if (!s["labels"].is_array()) throw ParseError("labels of " + name + " must be a list");
      for (auto& l : s["labels"]) {
        if (!l.is_string()) throw ParseError("labels of " + name + " must be strings");
        labels.push_back(l.get<std::string>());
      }
    }
    if (s.contains("dim")) {
      if (!s["dim"].is_number_integer() || s["dim"].get<long long>() < 1)
        throw ParseError("dim of " + name + " must be a positive integer");
      int dim = s["dim"].get<int>();
      if (labels.empty()) labels = Space::numbered(name, dim).labels();
      if (static_cast<int>(labels.size()) != dim)
        throw ParseError("dim of " + name + " disagrees with its labels");
    }
    if (labels.empty()) throw ParseError("space " + name + " needs dim or labels");
    try {
      f.spaces.emplace_back(name, labels);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (static_cast<int>(f.spaces.size()) != space_count(f.kind))
    throw ParseError(to_string(f.kind) + " files have " + std::to_string(space_count(f.kind)) +
                     " space(s)");
  if (f.spaces.size() == 2 && f.spaces[0].name() == f.spaces[1].name())
    throw ParseError("the two spaces need distinct names");

  const json tensors = j.contains("tensors") ? j["tensors"] : json::object();
  if (!tensors.is_object()) throw ParseError("tensors must be an object");
  auto specs = role_specs(f.kind, f.datum_type);
  for (auto& [role, value] : tensors.items()) {
    auto it = std::find_if(specs.begin(), specs.end(), [&](auto& s) { return s.name == role; });
    if (it == specs.end())
      throw ParseError("role '" + role + "' does not belong to a " + to_string(f.kind) + " file");
    f.tensors[role] = tensor_of(value, f.legs_of(role), role);
  }
  for (auto& s : specs)
    if (s.required && !f.has(s.name)) throw ParseError("missing required role '" + s.name + "'");
  if (j.contains("report")) f.report = j["report"];
  return f;
}

inline StructureFile parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(j);
}

inline std::string serialize(const StructureFile& f) { return to_json(f).dump(2) + "\n"; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
inline StructureFile load(const std::string& path) { return parse(read_text(path)); }

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) throw WriteError("cannot write " + path);
}
inline void save(const std::string& path, const StructureFile& f) { write_text(path, serialize(f)); }

// ---- StructureFile <-> library objects -----------------------------------

inline void require_kind(const StructureFile& f, std::initializer_list<FileKind> ok,
                         const std::string& what) {
  for (FileKind k : ok)
    if (f.kind == k) return;
  throw KindMismatch(what + " cannot be read from a " + to_string(f.kind) + " file");
}

inline Algebra to_algebra(const StructureFile& f) {
  require_kind(f, {FileKind::Algebra, FileKind::Bialgebra, FileKind::RMatrix}, "an algebra");
  std::optional<LinearMap> u;
  if (f.has("unit")) u = f.map("unit");
  return Algebra(f.spaces[0], f.map("mu"), u);
}
inline Coalgebra to_coalgebra(const StructureFile& f) {
  require_kind(f, {FileKind::Coalgebra, FileKind::Bialgebra}, "a coalgebra");
  return Coalgebra(f.spaces[0], f.map("delta"));
}
inline WeightedInfBialgebra to_bialgebra(const StructureFile& f) {
  require_kind(f, {FileKind::Bialgebra}, "a bialgebra");
  return WeightedInfBialgebra(to_algebra(f), to_coalgebra(f), f.lambda);
}
inline RMatrix to_rmatrix(const StructureFile& f) {
  require_kind(f, {FileKind::RMatrix}, "an r-matrix");
  return RMatrix(to_algebra(f), f.get("r"), f.lambda);
}
inline BraidedObject to_braided(const StructureFile& f) {
  require_kind(f, {FileKind::Braided}, "a braided object");
  const Space &A = f.spaces[0], &H = f.spaces[1];
  std::optional<LinearMap> u;
  if (f.has("unit_H")) u = f.map("unit_H");
  WeightedInfBialgebra base(Algebra(H, f.map("mu_H"), u), Coalgebra(H, f.map("delta_H")),
                            f.lambda);
  return BraidedObject(base, A, f.map("mu_A"), f.map("delta_A"), f.map("act_left"),
                       f.map("act_right"), f.map("phi"), f.map("psi"));
}
inline Blocks to_blocks(const StructureFile& f) {
  require_kind(f,
               {FileKind::MatchedPair, FileKind::CocycleSystem, FileKind::CycleCosystem,
                FileKind::CocycleBraidedPair, FileKind::ExtendingDatum},
               "block data");
  Blocks b(f.spaces[0], f.spaces[1]);
  b.lambda = f.lambda;
  for (auto& s : role_specs(f.kind, f.datum_type)) b.role(s.name) = f.map(s.name);
  return b;
}
inline ExtendingDatum to_datum(const StructureFile& f) {
  require_kind(f, {FileKind::ExtendingDatum}, "an extending datum");
  ExtendingDatum d{*f.datum_type, to_blocks(f)};
  d.validate();
  return d;
}

inline StructureFile blank(FileKind k, std::vector<Space> spaces, const Rational& lambda = 0) {
  StructureFile f;
  f.kind = k;
  f.spaces = std::move(spaces);
  f.lambda = lambda;
  return f;
}

inline StructureFile from_algebra(const Algebra& a) {
  StructureFile f = blank(FileKind::Algebra, {a.space});
  f.set("mu", a.mu);
  if (a.unit) f.set("unit", *a.unit);
  return f;
}
inline StructureFile from_coalgebra(const Coalgebra& c) {
  StructureFile f = blank(FileKind::Coalgebra, {c.space});
  f.set("delta", c.delta);
  return f;
}
inline StructureFile from_bialgebra(const WeightedInfBialgebra& b) {
  StructureFile f = blank(FileKind::Bialgebra, {b.space()}, b.lambda);
  f.set("mu", b.mu());
  f.set("delta", b.delta());
  if (b.alg.unit) f.set("unit", *b.alg.unit);
  return f;
}
inline StructureFile from_rmatrix(const RMatrix& m) {
  StructureFile f = blank(FileKind::RMatrix, {m.space()}, m.lambda);
  f.set("mu", m.alg.mu);
  f.set("unit", *m.alg.unit);
  f.set("r", element(m.r));
  return f;
}
inline StructureFile from_braided(const BraidedObject& o) {
  StructureFile f = blank(FileKind::Braided, {o.carrier, o.base.space()}, o.lambda());
  f.set("mu_A", o.mu);
  f.set("delta_A", o.delta);
  f.set("mu_H", o.base.mu());
  f.set("delta_H", o.base.delta());
  if (o.base.alg.unit) f.set("unit_H", *o.base.alg.unit);
  f.set("act_left", o.act_left);
  f.set("act_right", o.act_right);
  f.set("phi", o.phi);
  f.set("psi", o.psi);
  return f;
}
// Only the roles the kind admits are written; the others must be zero.
inline StructureFile from_blocks(FileKind k, const Blocks& b,
                                 std::optional<ExtKind> type = std::nullopt) {
  StructureFile f = blank(k, {b.A, b.H}, b.lambda);
  f.datum_type = type;
  auto specs = role_specs(k, type);
  for (auto& [name, m] : b.roles()) {
    bool admitted = std::any_of(specs.begin(), specs.end(), [&](auto& s) { return s.name == name; });
    if (admitted)
      f.set(name, *m);
    else if (!m->is_zero())
      throw KindMismatch("role " + name + " is nonzero but a " + to_string(k) +
                         " file cannot hold it");
  }
  return f;
}
inline StructureFile from_datum(const ExtendingDatum& d) {
  return from_blocks(FileKind::ExtendingDatum, d.b, d.kind);
}

// ---- reports -------------------------------------------------------------

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}
inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}
// Digest of the canonical form, so formatting differences do not matter.
inline std::string digest(const StructureFile& f) {
  StructureFile g = f;
  g.report = nullptr;
  return hex64(fnv1a64(to_json(g).dump()));
}

struct NamedCheck {
  std::string name;
  CheckReport report;
};

inline bool all_ok(const std::vector<NamedCheck>& cs) {
  return std::all_of(cs.begin(), cs.end(), [](auto& c) { return c.report.ok(); });
}

inline std::string basis_tuple(const Index& idx, const std::vector<Space>& legs) {
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "(x)" : "") + legs[k].labels()[idx[k]];
  return s.empty() ? "()" : s;
}

inline json check_json(const NamedCheck& c, const std::vector<Space>& in_legs = {}) {
  json j;
  j["name"] = c.name;
  j["ok"] = c.report.ok();
  j["checked"] = c.report.checked;
  j["failed"] = c.report.failed();
  json v = json::array();
  for (auto& x : c.report.violations) {
    json e;
    e["condition"] = x.condition;
    e["inputs"] = x.inputs;
    if (in_legs.size() == x.inputs.size()) e["at"] = basis_tuple(x.inputs, in_legs);
    e["residual"] = records_json(x.residual);
    v.push_back(std::move(e));
  }
  j["violations"] = v;
  return j;
}

// Deterministic report; "timing_ms" is the only field outside the digest.
inline json report_json(const std::string& command, const std::string& input_digest,
                        const std::vector<NamedCheck>& checks, json extra = json::object(),
                        std::optional<double> timing_ms = std::nullopt) {
  json j;
  j["report_version"] = kReportVersion;
  j["command"] = command;
  j["input_digest"] = input_digest;
  j["ok"] = all_ok(checks);
  json cs = json::array();
  for (auto& c : checks) cs.push_back(check_json(c));
  j["checks"] = cs;
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["digest"] = hex64(fnv1a64(j.dump()));
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

inline std::string report_text(const std::vector<NamedCheck>& checks) {
  std::ostringstream os;
  for (auto& c : checks) {
    os << c.name << ": " << (c.report.ok() ? "ok" : "FAILED") << " (" << c.report.checked.size()
       << " conditions)\n";
    for (auto& v : c.report.violations) {
      os << "  " << v.condition << " at [";
      for (std::size_t k = 0; k < v.inputs.size(); ++k) os << (k ? "," : "") << v.inputs[k];
      os << "]: residual " << v.residual.str() << "\n";
    }
  }
  os << (all_ok(checks) ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace ibx::io
