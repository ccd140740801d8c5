#pragma once

#include <string>
#include <vector>

#include "ydforge/ydalgebra.hpp"

namespace ydforge {

struct NotGroupLike : std::domain_error {
  NotGroupLike() : std::domain_error("element is not group-like") {}
};

struct NotCocommutative : std::domain_error {
  NotCocommutative() : std::domain_error("coproduct tensor is not cocommutative") {}
};

struct CandidateExhausted : std::runtime_error {
  explicit CandidateExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct BasisUnavailable : std::runtime_error {
  BasisUnavailable() : std::runtime_error("no group-like basis available") {}
};

// Delta(a) = a (x) a and eps(a) = 1, exactly.
bool is_grouplike(const YDAlgebra& a, const Vec& v);

struct GroupLikeSet {
  std::vector<Vec> elements;
  std::vector<std::string> labels;
  bool is_basis = false;

  int find(const Vec& v) const;  // -1 when absent
};

// Wrap a known family of group-likes (checked) as a GroupLikeSet.
GroupLikeSet grouplike_set_from_basis(const YDAlgebra& a, const std::vector<Vec>& elements,
                                      std::vector<std::string> labels);

struct EnumerateOptions {
  // Eigenvalue search grid: (a0 + a1 w + a2 w^2 + a3 w^3)/d with |a_i| <=
  // grid_bound and d in {1, 2, 4}.
  int grid_bound = 4;
};

// All group-like elements, found as the common eigenvectors of the commuting
// operators (e_i^* (x) id) o Delta by iterative eigenspace splitting, each
// normalized to counit 1. Throws NotCocommutative / CandidateExhausted.
GroupLikeSet enumerate_grouplikes(const YDAlgebra& a, const EnumerateOptions& opts = {});

/// Stabilizer data of a group-like element: the inertia group T_eta in G, the
/// isotropy group Q_eta in G-hat, both annihilators, the index group
/// Q_eta-perp / (T_eta intersect Q_eta-perp), and the orbit under Q_eta-perp.
struct Stabilizers {
  std::vector<int> inertia;        // element indices of T_eta
  std::vector<int> isotropy;       // character indices of Q_eta
  std::vector<int> isotropy_perp;  // element indices of Q_eta^perp
  std::vector<int> inertia_perp;   // character indices of T_eta^perp
  QuotientGroup index_group;
  int index = 0;
  std::vector<Vec> orbit;  // sorted, duplicates removed
  // The index can equivalently be computed on the dual side as
  // |T_eta^perp / (Q_eta intersect T_eta^perp)|.
  bool symmetric_index_ok = false;
};

Stabilizers stabilizers(const YDAlgebra& a, const Vec& eta);  // throws NotGroupLike

/// Interaction of two group-likes: the orbits O = psi_gamma(eta) over
/// T_{eta'}-perp and O' = phi_g(eta') over Q_eta-perp, and the group-like
/// support of eta * eta'.
struct ProductSpan {
  int m = 0;
  std::vector<int> omega_indices;  // indices into the group-like basis
  std::vector<Vec> orbit_o;
  std::vector<Vec> orbit_o_prime;
  bool cardinalities_match = false;  // |O| = |O'| = m
  bool products_in_span = false;     // every product from O x O' stays in the span
  bool coeffs_nonzero = false;       // expansion of eta*eta' uses every omega
};

ProductSpan product_span(const YDAlgebra& a, const GroupLikeSet& basis, const Vec& eta,
                         const Vec& eta_prime);

/// The three equivalent conditions on a pair of group-likes: the product is
/// group-like, Q_eta-perp lies in T_{eta'}, and sigma flips the pair.
struct CorollaryReport {
  bool product_grouplike = false;
  bool perp_inside_inertia = false;
  bool sigma_flips = false;
  bool consistent = false;
};

CorollaryReport corollary_equivalence(const YDAlgebra& a, const Vec& eta, const Vec& eta_prime);

struct CoreCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Full output of a core computation.
struct CoreReport {
  int eta_index = -1;
  std::string eta_label;
  Vec eta;
  Stabilizers stab;
  int eta_prime_index = -1;
  Vec eta_prime;
  std::vector<int> omega_indices;
  std::vector<Vec> omega_basis;
  int m = 0;
  std::vector<CoreCheck> cross_checks;  // the nine subalgebra/stability checks
  bool cross_checks_passed = false;
  bool eta_prime_independent = false;
  // The core viewed as a Yetter-Drinfel'd Hopf algebra over K[G_eta]: axiom
  // verdict, and whether an alternative coset-representative choice yields
  // the identical verdict list.
  bool core_axioms_ok = false;
  bool rep_choice_consistent = false;
  bool trivial = false;
  bool completely_trivial = false;
  std::string triviality_witness;

  bool all_checks_passed() const;
};

CoreReport compute_core(const YDAlgebra& a, const GroupLikeSet& basis, const Vec& eta);

// The core restricted to its span, with the action re-indexed by coset
// representatives of the index group and the coaction pushed forward along
// the quotient map. alternate_reps picks the largest representative in each
// coset instead of the smallest.
YDAlgebra core_as_yd_algebra(const YDAlgebra& a, const CoreReport& report,
                             bool alternate_reps = false);

struct ScanReport {
  bool all_cores_trivial = false;
  bool all_checks_passed = false;
  std::vector<CoreReport> per_eta;
};

ScanReport conjecture_scan(const YDAlgebra& a, const GroupLikeSet& basis);

}  // namespace ydforge
