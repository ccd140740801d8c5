#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ydforge/examples.hpp"
#include "ydforge/grouplike.hpp"
#include "ydforge/json_io.hpp"
#include "ydforge/report.hpp"

namespace {

using namespace ydforge;

constexpr int kExitOk = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

struct OutputTarget {
  std::string path = "-";

  int write(const std::string& content) const {
    if (path == "-") {
      std::cout << content;
      return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open '" << path << "' for writing\n";
      return kExitUsage;
    }
    out << content;
    return out.good() ? kExitOk : kExitUsage;
  }
};

ExampleSpec make_spec(int example, const std::string& zeta) {
  return ExampleSpec{example == 1 ? WhichExample::One : WhichExample::Two,
                     zeta_from_label(zeta)};
}

// Enumerate the group-likes with the configured grid and put them in the
// canonical order omega1..omega4, eta1..eta4 of the built example.
GroupLikeSet canonical_grouplikes(const BuiltExample& built, int grid_bound) {
  const GroupLikeSet found =
      enumerate_grouplikes(built.algebra, EnumerateOptions{grid_bound});
  if (!found.is_basis || found.elements.size() != 8) {
    throw std::runtime_error("group-like enumeration did not produce a basis");
  }
  std::vector<Vec> canonical;
  for (int t = 0; t < 8; ++t) {
    const Vec v = built.grouplike_vector(t);
    if (found.find(v) < 0) {
      throw std::runtime_error("enumerated group-likes do not match the construction");
    }
    canonical.push_back(v);
  }
  return grouplike_set_from_basis(built.algebra, canonical, built.grouplike_labels);
}

int cmd_build(int example, const std::string& zeta, const std::string& format,
              const OutputTarget& out) {
  const BuiltExample built = build_example(make_spec(example, zeta));
  if (format == "md") {
    return out.write(markdown_tables(built));
  }
  OrderedJson doc = build_document(built);
  doc["tables"] = tables_to_json(built, grouplike_basis_tables(built));
  return out.write(doc.dump(2) + "\n");
}

int cmd_verify(const std::string& input) {
  OrderedJson doc;
  try {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "error: cannot read '" << input << "'\n";
      return kExitUsage;
    }
    doc = OrderedJson::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "error: parse failure: " << e.what() << "\n";
    return kExitUsage;
  }
  YDAlgebra algebra;
  try {
    algebra = algebra_from_json(doc.contains("algebra") ? doc["algebra"] : doc);
  } catch (const std::exception& e) {
    std::cerr << "error: malformed algebra: " << e.what() << "\n";
    return kExitUsage;
  }
  const AxiomReport report = verify_axioms(algebra);
  std::cout << format_axiom_report(report);
  return report.all_passed() ? kExitOk : kExitMathFailure;
}

int cmd_core(int example, const std::string& zeta, const std::string& eta_label,
             const std::string& format, int grid_bound, const OutputTarget& out) {
  const BuiltExample built = build_example(make_spec(example, zeta));
  if (!verify_axioms(built.algebra).all_passed()) {
    std::cerr << "error: built algebra fails the axiom suite\n";
    return kExitMathFailure;
  }
  const GroupLikeSet basis = canonical_grouplikes(built, grid_bound);
  int eta_index = -1;
  for (size_t t = 0; t < basis.labels.size(); ++t) {
    if (basis.labels[t] == eta_label) eta_index = static_cast<int>(t);
  }
  if (eta_index < 0) {
    std::cerr << "error: unknown group-like label '" << eta_label
              << "' (expected omega1..omega4 or eta1..eta4)\n";
    return kExitUsage;
  }
  const CoreReport report =
      compute_core(built.algebra, basis, basis.elements[static_cast<size_t>(eta_index)]);
  const int status =
      out.write(format == "md" ? markdown_core_report(built.algebra, basis, report)
                               : core_report_to_json(built.algebra, basis, report).dump(2) + "\n");
  if (status != kExitOk) return status;
  return report.all_checks_passed() ? kExitOk : kExitMathFailure;
}

int cmd_scan(int example, const std::string& zeta, const std::string& format, int grid_bound,
             const OutputTarget& out) {
  const BuiltExample built = build_example(make_spec(example, zeta));
  if (!verify_axioms(built.algebra).all_passed()) {
    std::cerr << "error: built algebra fails the axiom suite\n";
    return kExitMathFailure;
  }
  const GroupLikeSet basis = canonical_grouplikes(built, grid_bound);
  const ScanReport report = conjecture_scan(built.algebra, basis);
  const int status =
      out.write(format == "md" ? markdown_scan_report(built.algebra, basis, report)
                               : scan_report_to_json(built.algebra, basis, report).dump(2) + "\n");
  if (status != kExitOk) return status;
  return report.all_cores_trivial && report.all_checks_passed ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ydforge: exact-arithmetic Yetter-Drinfel'd Hopf algebras over group rings of finite "
      "abelian groups"};
  app.require_subcommand(1);

  int example = 1;
  std::string zeta = "i";
  std::string format = "json";
  std::string eta_label;
  std::string input;
  OutputTarget out;
  int grid_bound = 4;

  const auto add_example_opts = [&](CLI::App* cmd, bool with_grid) {
    cmd->add_option("--example", example, "example number")->required()->check(CLI::Range(1, 2));
    cmd->add_option("--zeta", zeta, "fourth root of unity: 1, -1, i, -i")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "md"}));
    cmd->add_option("--out", out.path, "output path, '-' for stdout");
    if (with_grid) {
      cmd->add_option("--grid-bound", grid_bound,
                      "eigenvalue search bound for the group-like enumeration")
          ->envname("YDFORGE_GRID_BOUND")
          ->check(CLI::PositiveNumber);
    }
  };

  CLI::App* build = app.add_subcommand("build", "construct an example and emit it");
  add_example_opts(build, false);

  CLI::App* verify = app.add_subcommand("verify", "verify the axioms of a JSON-described algebra");
  verify->add_option("--input", input, "algebra JSON (or a `build` document)")->required();

  CLI::App* core = app.add_subcommand("core", "compute the core of a group-like element");
  add_example_opts(core, true);
  core->add_option("--eta", eta_label, "group-like label, e.g. eta1 or omega2")->required();

  CLI::App* scan = app.add_subcommand("scan", "compute every core and test the triviality claim");
  add_example_opts(scan, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(example, zeta, format, out);
    if (verify->parsed()) return cmd_verify(input);
    if (core->parsed()) return cmd_core(example, zeta, eta_label, format, grid_bound, out);
    if (scan->parsed()) return cmd_scan(example, zeta, format, grid_bound, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFailure;
  }
  return kExitUsage;
}
