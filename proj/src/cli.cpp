#include "imw/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "imw/corpus.hpp"
#include "imw/mtab.hpp"
#include "imw/report.hpp"
#include "imw/suite.hpp"

namespace imw {

namespace {

struct Globals {
  bool json = false;
  std::size_t budget = kDefaultBudget;
  std::size_t max_iso_n = 0;  // 0: the command's own default
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::SyntaxError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::SyntaxError, path + ": " + e.what());
  }
}

std::string stem(const std::string& path) {
  return path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
}

/// .json files hold a monoid object, anything else is mtab.
FiniteMonoid read_monoid(const std::string& path) {
  if (std::filesystem::path(path).extension() == ".json") {
    return monoid_from_json(read_json(path));
  }
  return parse_mtab(read_file(path));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_check(const Globals& g, const std::string& file, std::ostream& out) {
  auto r = analyze(read_monoid(file), stem(file));
  if (g.json) {
    emit(out, report_to_json(r));
  } else {
    out << report_to_human(r);
  }
  return r.all_hold() ? kExitOk : kExitVerdictFalse;
}

int run_extension(const Globals& g, const std::string& file, std::ostream& out) {
  auto r = analyze_extension(read_monoid(file), stem(file));
  if (g.json) {
    emit(out, extension_report_to_json(r));
  } else {
    out << extension_report_to_human(r);
  }
  return r.ok() ? kExitOk : kExitVerdictFalse;
}

IsoSearchOptions iso_options(const Globals& g, std::size_t fallback) {
  return {g.max_iso_n == 0 ? fallback : g.max_iso_n, true};
}

int run_decompose(const Globals& g, const std::string& file, std::ostream& out) {
  auto d = decompose(read_monoid(file), stem(file), iso_options(g, 16));
  if (g.json) {
    emit(out, decomposition_to_json(d));
  } else {
    out << decomposition_to_human(d);
  }
  return d.f_inverse.holds ? kExitOk : kExitVerdictFalse;
}

int run_construct(const Globals& g, const std::string& kind, const std::string& file,
                  std::ostream& out) {
  auto doc = read_json(file);
  FiniteMonoid m = [&] {
    if (kind == "fproduct") return f_product(almost_action_from_json(doc)).monoid.base();
    if (kind == "gluing") return gluing(gluing_map_from_json(doc)).product.monoid.base();
    return crossed_product(factor_system_from_json(doc)).monoid;
  }();
  if (g.json) {
    emit(out, monoid_to_json(m));
  } else {
    out << serialize_mtab(m);
  }
  return kExitOk;
}

int run_iso(const Globals& g, const std::string& a_file, const std::string& b_file,
            std::ostream& out) {
  auto a = read_monoid(a_file);
  auto b = read_monoid(b_file);
  auto w = brute_force_iso(a, b, iso_options(g, IsoSearchOptions{}.max_n));
  if (g.json) {
    Json j{{"schema", kJsonSchema}, {"kind", "isomorphism"}, {"isomorphic", w.has_value()}};
    j["forward"] = w ? Json(w->forward.values) : Json(nullptr);
    j["backward"] = w ? Json(w->backward.values) : Json(nullptr);
    emit(out, j);
  } else if (w) {
    out << "isomorphic\n";
    for (Elem x = 0; x < a.size(); ++x) {
      out << "  " << a.label(x) << " -> " << b.label(w->forward(x)) << "\n";
    }
  } else {
    out << "NotIsomorphic\n";
  }
  return w ? kExitOk : kExitVerdictFalse;
}

int run_enumerate(const Globals& g, const std::string& kind, std::size_t max_n,
                  const std::string& group, std::ostream& out) {
  std::vector<std::pair<std::string, Json>> json_items;
  std::vector<std::pair<std::string, std::string>> text_items;
  auto add_monoid = [&](std::string name, const FiniteMonoid& m) {
    json_items.emplace_back(name, monoid_to_json(m));
    text_items.emplace_back(std::move(name), serialize_mtab(m));
  };

  if (kind == "semilattice") {
    std::size_t i = 0;
    for (const auto& y : enumerate_semilattices(max_n)) {
      add_monoid("semilattice-" + std::to_string(i++), y.base());
    }
  } else if (kind == "inverse") {
    std::size_t i = 0;
    for (const auto& m : enumerate_inverse_monoids(max_n, 6)) {
      add_monoid("inverse-" + std::to_string(i++), m.base());
    }
  } else if (kind == "group") {
    for (const auto& [name, m] : small_groups()) {
      if (m.size() <= max_n) add_monoid(name, m);
    }
  } else if (kind == "corpus") {
    for (const auto& inst : builtin_corpus()) {
      if (auto m = inst.monoid(); m && m->size() <= max_n) add_monoid(inst.name, *m);
    }
  } else {
    std::optional<FiniteMonoid> gm;
    for (const auto& [name, m] : small_groups()) {
      if (name == group) gm = m;
    }
    if (!gm) fail(ErrorCode::PreconditionFailed, "unknown group '" + group + "'");
    std::size_t yi = 0;
    for (const auto& y : enumerate_semilattices(max_n)) {
      std::string prefix = group + "-Y" + std::to_string(yi++) + "-";
      std::size_t i = 0;
      if (kind == "almost-action") {
        for (const auto& aa : enumerate_almost_actions(*gm, y, g.budget)) {
          std::string name = prefix + std::to_string(i++);
          json_items.emplace_back(name, almost_action_to_json(aa));
          text_items.emplace_back(name, serialize_mtab(f_product(aa).monoid.base()));
        }
      } else {
        for (const auto& f : enumerate_gluing_maps(*gm, y, g.budget)) {
          std::string name = prefix + std::to_string(i++);
          json_items.emplace_back(name, gluing_map_to_json(f));
          text_items.emplace_back(name, serialize_mtab(gluing(f).product.monoid.base()));
        }
      }
    }
  }

  if (g.json) {
    Json items = Json::array();
    for (auto& [name, j] : json_items) items.push_back(Json{{"name", name}, {"value", j}});
    emit(out, Json{{"schema", kJsonSchema},
                   {"kind", "enumeration"},
                   {"of", kind},
                   {"count", json_items.size()},
                   {"items", items}});
  } else {
    for (const auto& [name, text] : text_items) out << "# " << name << "\n" << text << "\n";
    out << "# count " << text_items.size() << "\n";
  }
  return kExitOk;
}

int run_suite_command(const Globals& g, std::ostream& out) {
  SuiteOptions options;
  options.budget = g.budget;
  if (g.max_iso_n != 0) options.max_iso_n = g.max_iso_n;
  auto r = run_suite(options);
  if (g.json) {
    emit(out, suite_to_json(r));
  } else {
    out << suite_to_human(r);
  }
  return r.passed() ? kExitOk : kExitVerdictFalse;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite inverse monoid workbench", "imw"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--budget", g.budget, "Search budget for enumerations")
      ->envname("IMW_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-iso-n", g.max_iso_n, "Largest size brute-force isomorphism accepts")
      ->check(CLI::PositiveNumber);

  std::string file, file2, kind;
  std::size_t max_n = 4;
  std::string group = "Z2";

  auto* check = app.add_subcommand("check", "Predicate report for a monoid");
  check->add_option("file", file, "mtab or JSON monoid file")->required();
  auto* extension = app.add_subcommand("extension", "Canonical extension and splitting");
  extension->add_option("file", file)->required();
  auto* decomp = app.add_subcommand("decompose", "Almost action, factor system, gluing map");
  decomp->add_option("file", file)->required();
  auto* construct = app.add_subcommand("construct", "Build F(Y,G), Gl(f) or a crossed product");
  construct->add_option("kind", kind)
      ->required()
      ->check(CLI::IsMember({"fproduct", "gluing", "crossed"}));
  construct->add_option("file", file, "JSON almost action, gluing map or factor system")
      ->required();
  auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("a", file)->required();
  iso->add_option("b", file2)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive small structures");
  enumerate->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember(
          {"semilattice", "inverse", "group", "corpus", "almost-action", "gluing-map"}));
  enumerate->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  enumerate->add_option("--group", group, "Acting group for almost-action and gluing-map");
  auto* suite = app.add_subcommand("suite", "Run the acceptance checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*check) return run_check(g, file, out);
    if (*extension) return run_extension(g, file, out);
    if (*decomp) return run_decompose(g, file, out);
    if (*construct) return run_construct(g, kind, file, out);
    if (*iso) return run_iso(g, file, file2, out);
    if (*enumerate) return run_enumerate(g, kind, max_n, group, out);
    if (*suite) return run_suite_command(g, out);
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (!e.witness().empty()) err << " [witness " << join(e.witness(), ", ") << "]";
    err << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace imw
