// ibx: check, construct, solve and classify structures stored as JSON files.
//
// Exit codes: 0 ok, 1 a check failed, 2 parse or usage error,
// 3 kind mismatch (including a missing unit), 4 anything else.

#include <CLI11.hpp>
#include <iostream>

#include "ibx/commands.hpp"

namespace {

using namespace ibx;
using cmd::json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kKind = 3, kOther = 4 };

struct Common {
  std::string file, format = "text", out;
};

void emit(const Common& c, const std::string& text, const json& doc) {
  std::string body = c.format == "json" ? doc.dump(2) + "\n" : text;
  if (c.out.empty())
    std::cout << body;
  else
    io::write_text(c.out, body);
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int run_check(const Common& c, const std::string& profile) {
  auto t0 = std::chrono::steady_clock::now();
  auto f = io::load(c.file);
  std::string p = profile.empty() ? cmd::default_profile(f) : profile;
  auto o = cmd::run_profile(f, p);
  json doc = cmd::check_report(f, o, p, elapsed_ms(t0));
  std::string text = io::to_string(f.kind) + " / " + p + "\n" + io::report_text(o.checks);
  for (auto& [k, v] : o.extra.items()) text += k + ": " + v.dump() + "\n";
  emit(c, text, doc);
  return o.ok() ? kOk : kCheckFailed;
}

int run_construct(const Common& c, const std::string& product) {
  auto f = io::load(c.file);
  auto r = cmd::construct(f, product);
  std::string file_text = io::serialize(r.file);
  // The structure file is the output in both formats; --out names where it goes.
  if (c.out.empty())
    std::cout << file_text;
  else
    io::write_text(c.out, file_text);
  if (c.format == "text" && !c.out.empty())
    std::cout << product << " -> " << io::to_string(r.file.kind) << " on "
              << r.file.spaces[0].name() << " (dim " << r.file.spaces[0].dim() << "): "
              << (r.ok ? "ok" : "FAILED") << "\n";
  return r.ok ? kOk : kCheckFailed;
}

int run_solve(const Common& c, const std::string& lambda, const std::string& coeffs,
              const std::string& mask) {
  auto t0 = std::chrono::steady_clock::now();
  auto f = io::load(c.file);
  std::optional<Rational> l;
  if (!lambda.empty()) l = Rational::parse(lambda);
  auto doc = cmd::solve_wayb(f, l, cmd::parse_list(coeffs, "--coeffs"),
                             mask.empty() ? std::vector<std::pair<int, int>>{} : cmd::parse_mask(mask));
  std::string text = "lambda " + doc["lambda"].get<std::string>() + ": " +
                     std::to_string(doc["count"].get<std::size_t>()) + " solution(s)\n";
  for (auto& s : doc["solutions"]) text += "  r = " + s["text"].get<std::string>() + "\n";
  doc["timing_ms"] = elapsed_ms(t0);
  emit(c, text, doc);
  return kOk;
}

int run_classify(const Common& c, int v_dim, const std::string& grid, const std::string& kind) {
  auto t0 = std::chrono::steady_clock::now();
  auto f = io::load(c.file);
  std::optional<StructureKind> k;
  if (!kind.empty()) {
    try {
      k = parse_structure_kind(kind);
    } catch (const std::invalid_argument& e) {
      throw cmd::UsageError(e.what());
    }
  }
  auto doc = cmd::classify(f, k, v_dim, cmd::parse_list(grid, "--grid"));
  std::string text = doc["kind"].get<std::string>() + " extensions, dim V = " +
                     std::to_string(v_dim) + ": " + std::to_string(doc["valid"].get<std::size_t>()) +
                     " data, " + std::to_string(doc["classes"].size()) + " class(es)";
  if (doc["unresolved_pairs"].get<std::size_t>() > 0)
    text += ", " + std::to_string(doc["unresolved_pairs"].get<std::size_t>()) + " pair(s) undecided";
  text += "\n";
  for (auto& cl : doc["classes"])
    text += "  " + cl["representative"]["type"].get<std::string>() + " datum, " +
            std::to_string(cl["size_over_grid"].get<std::size_t>()) + " member(s)\n";
  doc["timing_ms"] = elapsed_ms(t0);
  emit(c, text, doc);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks and constructions for weighted infinitesimal bialgebras"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", common.file, "structure file")->required();
    sub->add_option("--format", common.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", common.out, "write output here instead of stdout");
  };

  std::string profile, product, lambda, coeffs = "-1,0,1", mask, grid = "0,1", kind;
  int v_dim = 1;

  auto* check = app.add_subcommand("check", "run a check profile on a structure file");
  add_common(check);
  check->add_option("--profile", profile, "check suite; defaults to the kind's main one");

  auto* construct = app.add_subcommand("construct", "build a product and write it as a file");
  add_common(construct);
  construct->add_option("--product", product, "product to build")
      ->required()
      ->check(CLI::IsMember(cmd::product_names()));

  auto* solve = app.add_subcommand("solve-wayb", "grid search for weighted AYBE solutions");
  add_common(solve);
  solve->add_option("--lambda", lambda, "weight, defaults to the file's");
  solve->add_option("--coeffs", coeffs, "comma separated coefficient grid");
  solve->add_option("--support-mask", mask, "positions i:j allowed to be nonzero");

  auto* classify = app.add_subcommand("classify", "classify extending structures over a grid");
  add_common(classify);
  classify->add_option("--v-dim", v_dim, "dimension of the complement V");
  classify->add_option("--grid", grid, "comma separated entry grid");
  classify->add_option("--kind", kind, "algebra, coalgebra or bialgebra");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return run_check(common, profile);
    if (*construct) return run_construct(common, product);
    if (*solve) return run_solve(common, lambda, coeffs, mask);
    if (*classify) return run_classify(common, v_dim, grid, kind);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const cmd::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const KindMismatch& e) {
    std::cerr << "kind mismatch: " << e.what() << "\n";
    return kKind;
  } catch (const TypeMismatch& e) {
    std::cerr << "kind mismatch: " << e.what() << "\n";
    return kKind;
  } catch (const MissingUnit& e) {
    std::cerr << "missing unit: " << e.what() << "\n";
    return kKind;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kOther;
  } catch (const io::WriteError& e) {
    std::cerr << "write error: " << e.what() << "\n";
    return kOther;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kUsage;
}
