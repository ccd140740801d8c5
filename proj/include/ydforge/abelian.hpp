#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ydforge/linalg.hpp"
#include "ydforge/scalar.hpp"

namespace ydforge {

struct UnsupportedExponent : std::domain_error {
  explicit UnsupportedExponent(int n)
      : std::domain_error("cyclic factor of order " + std::to_string(n) +
                          " does not divide 8; characters would leave Q(xi8)") {}
};

struct GroupElement {
  std::vector<int> exponents;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group as a product of cyclic factors Z_{n1} x ... x Z_{nr}.
/// Elements are exponent tuples, addressed either directly or by their
/// mixed-radix index in 0..order-1.
class FinAbGroup {
 public:
  FinAbGroup() : FinAbGroup(std::vector<int>{}) {}
  explicit FinAbGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  int exponent() const;

  GroupElement element(int index) const;
  int index_of(const GroupElement& g) const;
  GroupElement identity() const;
  GroupElement reduce(std::vector<int> exponents) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  GroupElement power(const GroupElement& a, int k) const;
  int element_order(const GroupElement& a) const;
  std::string element_label(const GroupElement& a) const;  // "1,0"

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

/// Character of a finite abelian group, stored by its values on the cyclic
/// generators. Every value lies in mu8, which requires each factor order to
/// divide 8.
class Character {
 public:
  Character() = default;
  Character(FinAbGroup group, std::vector<Scalar> gen_values);

  const FinAbGroup& group() const { return group_; }
  const std::vector<Scalar>& gen_values() const { return gen_values_; }
  Scalar value(const GroupElement& g) const;
  bool is_trivial() const;

  Character times(const Character& other) const;  // pointwise product

  friend bool operator==(const Character&, const Character&) = default;

 private:
  FinAbGroup group_;
  std::vector<Scalar> gen_values_;
};

// The dual group: characters are indexed like group elements, with the t-th
// character sending gen_i to xi^((8/n_i) * t_i). Index arithmetic in the same
// FinAbGroup therefore realizes the pointwise product of characters.
std::vector<Character> dual_group(const FinAbGroup& g);  // throws UnsupportedExponent
Character character_from_index(const FinAbGroup& g, int index);
int character_index(const Character& chi);

// Subgroups and subsets are sorted index vectors.
std::vector<int> generated_subgroup(const FinAbGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FinAbGroup& g, const std::vector<int>& subset);

// Annihilators. perp of a subset of G is a subgroup of G-hat and vice versa;
// both are returned as sorted index vectors against the same FinAbGroup.
std::vector<int> perp_of_elements(const FinAbGroup& g, const std::vector<int>& subset);
std::vector<int> perp_of_characters(const FinAbGroup& g, const std::vector<int>& subset);

// Typed wrappers matching the two directions of the annihilator.
std::vector<Character> perp(const FinAbGroup& g, const std::vector<GroupElement>& subset);
std::vector<GroupElement> perp(const FinAbGroup& g, const std::vector<Character>& subset);

/// Quotient of a subgroup S of G by a subgroup T of S, decomposed into cyclic
/// factors with an explicit projection (element index -> quotient element
/// index, -1 outside S) and a section picking the smallest representative per
/// coset.
struct QuotientGroup {
  FinAbGroup group;
  std::vector<int> projection;
  std::vector<int> representatives;
};

QuotientGroup subquotient(const FinAbGroup& g, const std::vector<int>& numerator,
                          const std::vector<int>& denominator);
// G modulo a subgroup.
QuotientGroup quotient_group(const FinAbGroup& g, const std::vector<int>& subgroup);

/// Bicharacter on G, stored by its values on generator pairs.
class Bicharacter {
 public:
  Bicharacter() = default;
  // gen_matrix[i][j] = theta(gen_i, gen_j); validated against factor orders.
  Bicharacter(FinAbGroup group, Matrix gen_matrix);

  const FinAbGroup& group() const { return group_; }
  const Matrix& gen_matrix() const { return gen_matrix_; }
  Scalar value(const GroupElement& a, const GroupElement& b) const;
  Scalar value_by_index(int a, int b) const;

 private:
  FinAbGroup group_;
  Matrix gen_matrix_;
};

struct BicharacterReport {
  bool symmetric = false;
  bool nondegenerate = false;
  bool orthogonality = false;
};

BicharacterReport bicharacter_checks(const Bicharacter& theta);

}  // namespace ydforge
