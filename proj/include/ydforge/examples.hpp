#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ydforge/ydalgebra.hpp"

namespace ydforge {

enum class WhichExample { One, Two };

struct ExampleSpec {
  WhichExample which = WhichExample::One;
  ZetaKind zeta = ZetaKind::PlusI;
};

/// One of the two built-in 8-dimensional Yetter-Drinfel'd Hopf algebras over
/// K[Z2 x Z2], assembled in the monomial basis {1, x, x^2, x^3, y, xy, x^2y,
/// x^3y} with the group-like basis change attached.
struct BuiltExample {
  ExampleSpec spec;
  YDAlgebra algebra;
  Bicharacter theta;
  // Column t is the t-th group-like basis vector (omega1..4, eta1..4) in
  // monomial coordinates.
  Matrix basis_change;
  Matrix basis_change_inv;
  std::vector<std::string> grouplike_labels;

  Vec grouplike_vector(int t) const { return basis_change.column(static_cast<size_t>(t)); }
  // Coordinates of a monomial-basis vector in the group-like basis.
  Vec to_grouplike_coords(const Vec& v) const { return basis_change_inv * v; }
};

BuiltExample build_example(const ExampleSpec& spec);

// The conventional numbering g_1=(0,0), g_2=(1,0), g_3=(0,1), g_4=(1,1).
GroupElement klein_element(int i);

/// The four multiplication tables of the group-like basis. Entry (i,j) holds
/// the product row_(i+1) * col_(j+1) in group-like coordinates.
struct GrouplikeTables {
  std::array<std::array<Vec, 4>, 4> omega_omega;  // omega_i * omega_j
  std::array<std::array<Vec, 4>, 4> omega_eta;    // omega_i * eta_j
  std::array<std::array<Vec, 4>, 4> eta_omega;    // eta_i * omega_j
  std::array<std::array<Vec, 4>, 4> eta_eta;      // eta_i * eta_j
};

GrouplikeTables grouplike_basis_tables(const BuiltExample& built);

/// A one-dimensional character of the algebra, determined by its values on
/// the generators x and y.
struct AlgebraCharacter {
  std::string name;
  Scalar x, y;
};

struct TwoDimRep {
  Matrix x, y;  // 2x2
  bool relations_ok = false;
  bool irreducible = false;
};

struct ExampleCharacters {
  std::vector<AlgebraCharacter> characters;
  std::optional<TwoDimRep> two_dim;  // Example 2 only
  bool relations_ok = false;         // every character respects the relations
  bool distinct = false;
  // Example 1: the 8 characters are linearly independent (rank 8), proving
  // A = K^8. Example 2: the 4 characters plus the 2-dim representation give
  // a rank-8 map into K^4 + M(2x2, K).
  bool independent = false;
};

ExampleCharacters characters_of_example(const ExampleSpec& spec);

/// The 8x8 block matrices realizing Example 2 by left multiplication.
struct MatrixRep8 {
  Matrix x, y;  // 8x8
  bool relations_ok = false;
  // Rank of the 64x8 stack of the monomial images E, X, .., X^3 Y; equal to 8
  // exactly when the monomials are linearly independent.
  size_t monomial_rank = 0;
};

MatrixRep8 matrix_rep_example2(ZetaKind zeta);

}  // namespace ydforge
