#pragma once

#include <stdexcept>
#include <vector>

#include "ydforge/abelian.hpp"
#include "ydforge/linalg.hpp"

namespace ydforge {

struct DegenerateBicharacter : std::domain_error {
  DegenerateBicharacter() : std::domain_error("bicharacter is degenerate") {}
};

struct NonSymmetricBicharacter : std::domain_error {
  NonSymmetricBicharacter()
      : std::domain_error("coaction induction requires a symmetric bicharacter") {}
};

/// Element of K[G] (x) K[G] stored as a |G| x |G| coefficient matrix indexed
/// by group element pairs.
struct RMatrix {
  FinAbGroup group;
  Matrix entries;          // R[g][g'] = theta(g,g') / |G|
  Matrix inverse_entries;  // theta(g^{-1},g') / |G|
};

// Prop: a nondegenerate bicharacter yields an R-matrix for K[G], together
// with its explicit inverse. Throws DegenerateBicharacter.
RMatrix build_rmatrix(const Bicharacter& theta);

struct RMatrixReport {
  // Axiom (1) holds structurally for commutative cocommutative H; it is still
  // recomputed for defense in depth.
  bool axiom1_structural = true;
  bool axiom1 = false;
  bool axiom2 = false;
  bool axiom3 = false;
  bool invertible = false;
  bool all_passed() const { return axiom1 && axiom2 && axiom3 && invertible; }
};

RMatrixReport check_rmatrix(const RMatrix& r);

// Convolution product in K[G] (x) K[G].
Matrix group_ring_tensor_multiply(const FinAbGroup& g, const Matrix& a, const Matrix& b);

// The coaction induced from a module structure via the R-matrix of a
// symmetric nondegenerate bicharacter: pi_g = (1/|G|) sum_{g'} theta(g,g')
// phi_{g'}. Throws DegenerateBicharacter / NonSymmetricBicharacter.
std::vector<Matrix> induce_coaction(const FinAbGroup& g, const std::vector<Matrix>& action,
                                    const Bicharacter& theta);

// gamma = theta(g, -): pairing a group element to a character.
Character theta_character(const Bicharacter& theta, const GroupElement& g);

}  // namespace ydforge
