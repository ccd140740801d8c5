#pragma once

#include <string>

#include "ydforge/examples.hpp"
#include "ydforge/grouplike.hpp"

namespace ydforge {

// Linear combination over labelled basis vectors, e.g. "(1/2 + i/2) eta2 +
// (1/2 - i/2) eta4".
std::string render_combination(const Vec& coords, const std::vector<std::string>& labels);

// The four group-like multiplication tables and the character tables,
// formatted for diffing: tables follow the row/column conventions of the
// source tables (the omega*eta table lists the eta factor in the first
// column).
std::string markdown_tables(const BuiltExample& built);

std::string markdown_core_report(const YDAlgebra& a, const GroupLikeSet& basis,
                                 const CoreReport& report);
std::string markdown_scan_report(const YDAlgebra& a, const GroupLikeSet& basis,
                                 const ScanReport& report);

// One "[PASS]/[FAIL] name" line per axiom check.
std::string format_axiom_report(const AxiomReport& report);

}  // namespace ydforge
