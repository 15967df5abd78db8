// Command-line front end. Exit status: 0 success, 1 a check failed, 2 bad input or usage.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zinbiel/acceptance.hpp"
#include "zinbiel/json_io.hpp"

namespace {

using namespace zinbiel;
using io::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_report(const CheckReport& report, bool as_json) {
  if (as_json)
    print(io::to_json(report));
  else
    std::cout << describe(report);
  return report.passed() ? kPass : kFail;
}

// A failed precondition: the report goes to stderr so stdout stays parseable.
int refuse(const CheckReport& report, const std::string& what) {
  std::cerr << what << " refused; precondition report:\n" << describe(report);
  return kFail;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

RowVector parse_mu(const std::string& text, Index n) {
  const auto parts = split(text, ',');
  if (static_cast<Index>(parts.size()) != n)
    throw InputError("--mu needs " + std::to_string(n) + " comma-separated values, got " + std::to_string(parts.size()));
  RowVector mu(n);
  for (Index i = 0; i < n; ++i) mu(i) = parse_rational(parts[static_cast<std::size_t>(i)]);
  return mu;
}

std::vector<Index> parse_indices(const std::string& text, Index n) {
  std::vector<Index> out;
  for (const auto& p : split(text, ',')) {
    if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("--z: '" + p + "' is not a basis index");
    const long long i = std::stoll(p);
    if (i < 1 || i > n) throw InputError("--z: index " + p + " is outside 1.." + std::to_string(n));
    out.push_back(static_cast<Index>(i - 1));
  }
  return out;
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("--param expects name=value, got '" + item + "'");
    p[item.substr(0, eq)] = parse_rational(item.substr(eq + 1));
  }
  return p;
}

// Inline JSON when the argument looks like JSON, a file name otherwise.
json json_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return io::parse(arg, "argument");
  return io::read_file(arg);
}

struct Options {
  std::string kind;
  std::vector<std::string> files;
  bool as_json = false;
  bool force = false;
  std::string r;
  std::string z;
  std::string mode = "D";
  std::string mu;
  std::string id;
  std::vector<std::string> params;
  std::vector<int> criteria;
};

int run_check(const Options& o) {
  const json j = io::read_file(o.files.at(0));
  if (o.kind == "zinbiel") return emit_report(is_zinbiel(io::algebra_from_json(j)), o.as_json);
  if (o.kind == "datum") return emit_report(verify_datum(io::datum_from_json(j)), o.as_json);
  if (o.kind == "crossed") return emit_report(crossed(io::crossed_from_json(j)).report, o.as_json);
  if (o.kind == "matched") return emit_report(bicrossed(io::matched_from_json(j)).report, o.as_json);
  if (o.kind == "flag") return emit_report(verify_flag(io::flag_from_json(j)), o.as_json);
  return emit_report(is_bimodule(io::bimodule_from_json(j)), o.as_json);
}

int run_build(const Options& o) {
  const json j = io::read_file(o.files.at(0));
  if (o.kind == "unified") {
    const ExtendingDatum d = io::datum_from_json(j);
    if (!o.force) {
      const CheckReport r = verify_datum(d);
      if (!r.passed()) return refuse(r, "unified product");
    }
    print(io::to_json(build_unified(d, true)));
  } else if (o.kind == "semidirect") {
    const Bimodule b = io::bimodule_from_json(j);
    const CheckReport r = is_bimodule(b);
    if (!r.passed()) return refuse(r, "semidirect product");
    print(io::to_json(semidirect(b)));
  } else if (o.kind == "crossed" || o.kind == "bicrossed") {
    const Checked<Algebra> c = o.kind == "crossed" ? crossed(io::crossed_from_json(j)) : bicrossed(io::matched_from_json(j));
    if (!c.report.passed() && !o.force) return refuse(c.report, o.kind + " product");
    print(io::to_json(c.value));
  } else if (o.kind == "flag") {
    const FlagDatum fd = io::flag_from_json(j);
    const CheckReport r = verify_flag(fd);
    if (!r.passed()) return refuse(r, "flag extension");
    print(io::to_json(build_flag_extension(fd).algebra));
  } else {
    if (o.r.empty()) throw InputError("build rdeform needs --r");
    const MatchedPair mp = io::matched_from_json(j);
    const Matrix r = io::map_from_json(json_argument(o.r), mp.top.dim, mp.base.dim, "r");
    const CheckReport rep = deformation_report(mp, r);
    if (!rep.passed()) return refuse(rep, "r-deformation");
    print(io::to_json(r_deform(mp, r)));
  }
  return kPass;
}

int run_extract(const Options& o) {
  const Algebra e = io::algebra_from_json(io::read_file(o.files.at(0)));
  if (o.z.empty()) throw InputError("extract needs --z");
  print(io::to_json(extract_datum(coordinate_presentation(e, parse_indices(o.z, e.dim)))));
  return kPass;
}

int run_solve(const Options& o) {
  const Algebra z = io::algebra_from_json(io::read_file(o.files.at(0)));
  const RowVector mu = o.mu.empty() ? RowVector(RowVector::Zero(z.dim)) : parse_mu(o.mu, z.dim);
  const CheckReport f1 = mu_report(z, mu);
  if (!f1.passed()) return refuse(f1, "solve flag");
  print(io::to_json(solve_reduced(z, mu, o.mode == "T" ? FlagMode::T : FlagMode::D)));
  return kPass;
}

int run_catalog(const Options& o) {
  const Catalog catalog;
  if (o.kind == "list") {
    for (const auto& id : catalog.ids()) {
      std::cout << id;
      const auto req = catalog.required_params(id);
      if (!req.empty()) {
        std::cout << " (";
        for (std::size_t i = 0; i < req.size(); ++i) std::cout << (i ? ", " : "") << req[i];
        std::cout << ")";
      }
      std::cout << "\n";
    }
    for (const auto& f : catalog.families()) std::cout << f.id << " -> " << f.extension_id << "\n";
    return kPass;
  }
  if (o.id.empty()) throw InputError("catalog emit needs an id");
  Params p = catalog.recorded_params(o.id);
  for (const auto& [k, v] : parse_params(o.params)) p[k] = v;
  const bool is_family = o.id[0] == 'D' || o.id[0] == 'T';
  if (is_family && catalog.family(o.id).id == o.id)
    print(io::to_json(catalog.get_flag(o.id, p)));
  else
    print(io::to_json(catalog.get_algebra(o.id, p)));
  return kPass;
}

int run_verify(const Options& o) {
  const AcceptanceSummary s = verify_paper(Catalog(), o.criteria.empty() ? all_criteria() : o.criteria);
  if (o.as_json)
    print(to_json(s));
  else
    std::cout << describe(s);
  return s.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for Zinbiel algebras and their extending structures"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Check a structure and print a condition report");
  check->add_option("kind", o.kind)->required()->check(CLI::IsMember({"zinbiel", "datum", "crossed", "matched", "flag", "bimodule"}));
  check->add_option("file", o.files)->required()->expected(1);
  check->add_flag("--json", o.as_json, "Machine-readable report");

  auto* build = app.add_subcommand("build", "Build a product algebra and print it as JSON");
  build->add_option("kind", o.kind)->required()->check(CLI::IsMember({"unified", "semidirect", "crossed", "bicrossed", "flag", "rdeform"}));
  build->add_option("file", o.files)->required()->expected(1);
  build->add_flag("--force", o.force, "Skip the precondition (unified, crossed, bicrossed)");
  build->add_option("--r", o.r, "Deformation map: JSON rows or a file");

  auto* extract = app.add_subcommand("extract", "Extract the datum of E relative to a coordinate subalgebra");
  extract->add_option("file", o.files)->required()->expected(1);
  extract->add_option("--z", o.z, "1-based basis indices spanning Z, e.g. \"1,2\"")->required();

  auto* solve = app.add_subcommand("solve", "Solve the reduced flag problem");
  solve->add_option("kind", o.kind)->required()->check(CLI::IsMember({"flag"}));
  solve->add_option("file", o.files)->required()->expected(1);
  solve->add_option("--mode", o.mode)->check(CLI::IsMember({"D", "T"}));
  solve->add_option("--mu", o.mu, "Comma-separated values of mu on the basis");

  auto* catalog = app.add_subcommand("catalog", "List or emit catalogued fixtures");
  catalog->add_option("kind", o.kind)->required()->check(CLI::IsMember({"list", "emit"}));
  catalog->add_option("id", o.id);
  catalog->add_option("--param", o.params, "name=value, repeatable");

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("kind", o.kind)->required()->check(CLI::IsMember({"paper"}));
  verify->add_flag("--json", o.as_json);
  verify->add_option("--criteria", o.criteria, "Subset of criteria 1-10")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (check->parsed()) return run_check(o);
    if (build->parsed()) return run_build(o);
    if (extract->parsed()) return run_extract(o);
    if (solve->parsed()) return run_solve(o);
    if (catalog->parsed()) return run_catalog(o);
    return run_verify(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
  }
  return kInputError;
}
