#include "ydforge/report.hpp"

#include <sstream>

namespace ydforge {

std::string render_combination(const Vec& coords, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t t = 0; t < coords.size(); ++t) {
    const Scalar& c = coords[t];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (c.is_one()) {
      out += labels[t];
    } else if (c == Scalar(-1)) {
      out += "-" + labels[t];
    } else {
      out += "(" + c.str() + ") " + labels[t];
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

std::string table_markdown(const std::string& title, const std::array<std::array<Vec, 4>, 4>& t,
                           const std::vector<std::string>& labels,
                           const std::string& row_prefix, const std::string& col_prefix,
                           bool transpose) {
  std::ostringstream md;
  md << "### " << title << "\n\n";
  md << "|  |";
  for (int j = 1; j <= 4; ++j) md << " " << col_prefix << j << " |";
  md << "\n|---|---|---|---|---|\n";
  for (int i = 1; i <= 4; ++i) {
    md << "| **" << row_prefix << i << "** |";
    for (int j = 1; j <= 4; ++j) {
      const Vec& entry = transpose ? t[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)]
                                   : t[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
      md << " " << render_combination(entry, labels) << " |";
    }
    md << "\n";
  }
  md << "\n";
  return md.str();
}

std::string matrix_markdown(const Matrix& m) {
  std::ostringstream md;
  for (size_t i = 0; i < m.rows(); ++i) {
    md << "    [";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) md << ", ";
      md << m.at(i, j).str();
    }
    md << "]\n";
  }
  return md.str();
}

}  // namespace

std::string markdown_tables(const BuiltExample& built) {
  const GrouplikeTables tables = grouplike_basis_tables(built);
  const auto& labels = built.grouplike_labels;
  std::ostringstream md;
  const int example = built.spec.which == WhichExample::One ? 1 : 2;
  md << "# Example " << example << " (zeta = " << zeta_label(built.spec.zeta) << ")\n\n";

  md << "Group-like basis in the monomial basis {1, x, x^2, x^3, y, xy, x^2y, x^3y}:\n\n";
  for (size_t t = 0; t < labels.size(); ++t) {
    md << "- " << labels[t] << " = "
       << render_combination(built.basis_change.column(t), built.algebra.labels) << "\n";
  }
  md << "\n";

  // y^4 collapses to 1 or x^2 depending on whether zeta is primitive.
  {
    const Vec y = built.algebra.basis_vector(4);
    const Vec y2 = built.algebra.multiply(y, y);
    const Vec y4 = built.algebra.multiply(y2, y2);
    md << "y^4 = " << render_combination(y4, built.algebra.labels) << "\n\n";
  }

  md << "## Multiplication tables in the group-like basis\n\n";
  md << table_markdown("omega_i * omega_j (row: first factor)", tables.omega_omega, labels,
                       "omega", "omega", false);
  md << table_markdown("omega_i * eta_j (column: first factor omega_i, row: eta_j)",
                       tables.omega_eta, labels, "eta", "omega", true);
  md << table_markdown("eta_i * omega_j (row: first factor)", tables.eta_omega, labels, "eta",
                       "omega", false);
  md << table_markdown("eta_i * eta_j (row: first factor)", tables.eta_eta, labels, "eta", "eta",
                       false);

  const ExampleCharacters chars = characters_of_example(built.spec);
  md << "## One-dimensional characters\n\n";
  md << "|  |";
  for (const auto& chi : chars.characters) md << " " << chi.name << " |";
  md << "\n|---|";
  for (size_t i = 0; i < chars.characters.size(); ++i) md << "---|";
  md << "\n| x |";
  for (const auto& chi : chars.characters) md << " " << chi.x.str() << " |";
  md << "\n| y |";
  for (const auto& chi : chars.characters) md << " " << chi.y.str() << " |";
  md << "\n\n";

  if (chars.two_dim) {
    md << "## Two-dimensional irreducible representation\n\n";
    md << "X =\n\n" << matrix_markdown(chars.two_dim->x) << "\nY =\n\n"
       << matrix_markdown(chars.two_dim->y) << "\n";
  }
  return md.str();
}

namespace {

std::string index_list(const FinAbGroup& g, const std::vector<int>& indices) {
  std::string s = "{";
  for (size_t i = 0; i < indices.size(); ++i) {
    if (i) s += ", ";
    s += "(" + g.element_label(g.element(indices[i])) + ")";
  }
  return s + "}";
}

std::string group_shape(const FinAbGroup& g) {
  if (g.factors().empty()) return "trivial";
  std::string s;
  for (size_t i = 0; i < g.factors().size(); ++i) {
    if (i) s += " x ";
    s += "Z" + std::to_string(g.factors()[i]);
  }
  return s;
}

}  // namespace

std::string markdown_core_report(const YDAlgebra& a, const GroupLikeSet& basis,
                                 const CoreReport& r) {
  std::ostringstream md;
  const FinAbGroup& g = a.group;
  md << "## Core of " << r.eta_label << "\n\n";
  md << "- inertia group T = " << index_list(g, r.stab.inertia) << "\n";
  md << "- isotropy group Q = " << index_list(g, r.stab.isotropy) << " (character tuples)\n";
  md << "- Q^perp = " << index_list(g, r.stab.isotropy_perp) << ", T^perp = "
     << index_list(g, r.stab.inertia_perp) << " (character tuples)\n";
  md << "- index group: " << group_shape(r.stab.index_group.group) << ", index m = " << r.stab.index
     << "\n";
  md << "- orbit of " << r.eta_label << ": ";
  for (size_t i = 0; i < r.stab.orbit.size(); ++i) {
    if (i) md << ", ";
    const int t = basis.find(r.stab.orbit[i]);
    md << (t >= 0 ? basis.labels[static_cast<size_t>(t)]
                  : render_combination(r.stab.orbit[i], a.labels));
  }
  md << "\n";
  md << "- eta' = " << basis.labels[static_cast<size_t>(r.eta_prime_index)] << "\n";
  md << "- core basis: ";
  for (size_t i = 0; i < r.omega_indices.size(); ++i) {
    if (i) md << ", ";
    md << basis.labels[static_cast<size_t>(r.omega_indices[i])];
  }
  md << "\n\n";
  md << "| check | verdict |\n|---|---|\n";
  for (const auto& c : r.cross_checks) {
    md << "| " << c.name << " | " << (c.passed ? "pass" : "FAIL") << " |\n";
  }
  md << "| eta'-independent | " << (r.eta_prime_independent ? "pass" : "FAIL") << " |\n";
  md << "| core axioms over K[G_eta] | " << (r.core_axioms_ok ? "pass" : "FAIL") << " |\n";
  md << "| representative choice consistent | " << (r.rep_choice_consistent ? "pass" : "FAIL")
     << " |\n\n";
  md << "- trivial: " << (r.trivial ? "yes" : "no") << "\n";
  md << "- completely trivial: " << (r.completely_trivial ? "yes" : "no");
  if (!r.completely_trivial && !r.triviality_witness.empty()) {
    md << " (" << r.triviality_witness << ")";
  }
  md << "\n";
  return md.str();
}

std::string markdown_scan_report(const YDAlgebra& a, const GroupLikeSet& basis,
                                 const ScanReport& r) {
  std::ostringstream md;
  md << "# Conjecture scan\n\n";
  md << "- all cores trivial: " << (r.all_cores_trivial ? "yes" : "NO") << "\n";
  md << "- all checks passed: " << (r.all_checks_passed ? "yes" : "NO") << "\n\n";
  md << "| eta | index | core | trivial | completely trivial | checks |\n";
  md << "|---|---|---|---|---|---|\n";
  for (const auto& rep : r.per_eta) {
    md << "| " << rep.eta_label << " | " << rep.stab.index << " | ";
    for (size_t i = 0; i < rep.omega_indices.size(); ++i) {
      if (i) md << ", ";
      md << basis.labels[static_cast<size_t>(rep.omega_indices[i])];
    }
    md << " | " << (rep.trivial ? "yes" : "NO") << " | "
       << (rep.completely_trivial ? "yes" : "no") << " | "
       << (rep.all_checks_passed() ? "pass" : "FAIL") << " |\n";
  }
  md << "\n";
  for (const auto& rep : r.per_eta) md << markdown_core_report(a, basis, rep) << "\n";
  return md.str();
}

std::string format_axiom_report(const AxiomReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.passed) out << ": " << c.witness;
    out << "\n";
  }
  out << (report.all_passed() ? "all axioms hold" : "axiom verification FAILED") << "\n";
  return out.str();
}

}  // namespace ydforge
