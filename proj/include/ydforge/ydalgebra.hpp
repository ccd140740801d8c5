#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ydforge/abelian.hpp"
#include "ydforge/linalg.hpp"

namespace ydforge {

/// Candidate Yetter-Drinfel'd Hopf algebra over H = K[G], given by structure
/// constants on a fixed basis e_0..e_{n-1}:
///   mult[i][j][k]:   e_i e_j = sum_k mult[i][j][k] e_k
///   coprod[k][i][j]: Delta(e_k) = sum_{i,j} coprod[k][i][j] e_i (x) e_j
///   antipode:        column j is S(e_j)
///   action[g]:       phi_g, column j is g.e_j
///   coaction[g]:     pi_g, the g-homogeneous projector of the coaction,
///                    delta(e_j) = sum_g g (x) pi_g(e_j)
/// Elements of A (x) A are n x n coefficient matrices T with
/// T[i][j] = coefficient of e_i (x) e_j.
class YDAlgebra {
 public:
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<Scalar> mult;
  Vec unit;
  std::vector<Scalar> coprod;
  Vec counit;
  Matrix antipode;
  FinAbGroup group;
  std::vector<Matrix> action;
  std::vector<Matrix> coaction;

  // Throws DimensionMismatch if any field has an inconsistent shape.
  void validate() const;

  const Scalar& mult_at(int i, int j, int k) const {
    return mult[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  Scalar& mult_at(int i, int j, int k) {
    return mult[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  const Scalar& coprod_at(int k, int i, int j) const {
    return coprod[(static_cast<size_t>(k) * dim + i) * dim + j];
  }
  Scalar& coprod_at(int k, int i, int j) {
    return coprod[(static_cast<size_t>(k) * dim + i) * dim + j];
  }

  Vec basis_vector(int i) const;
  Vec mult_column(int i, int j) const;  // e_i e_j as a coefficient vector

  Vec multiply(const Vec& a, const Vec& b) const;
  Matrix coprod_tensor(const Vec& a) const;
  Matrix coprod_basis(int k) const;
  Scalar counit_of(const Vec& a) const;
  Vec antipode_of(const Vec& a) const;
  Vec act(int g_index, const Vec& a) const;
  Vec coact_component(int g_index, const Vec& a) const;

  // sigma(a (x) b) = sum_g phi_g(b) (x) pi_g(a) and its linear extension.
  Matrix quasisymmetry(const Vec& a, const Vec& b) const;
  Matrix quasisymmetry(const Matrix& tensor) const;
  Matrix quasisymmetry_inverse(const Matrix& tensor) const;

  // Product in the braided tensor algebra A (x)^ A.
  Matrix braided_multiply(const Matrix& s, const Matrix& t) const;

  // psi_gamma = sum_g gamma(g) pi_g.
  Matrix psi_operator(const Character& gamma) const;

  bool is_cocommutative() const;

  int label_index(const std::string& label) const;  // -1 when absent
};

/// Precomputed quasisymmetry on basis pairs; speeds up repeated braided
/// products against the same algebra.
class BraidedOps {
 public:
  explicit BraidedOps(const YDAlgebra& a);

  const Matrix& sigma_basis(int j, int k) const {
    return sigma_[static_cast<size_t>(j) * n_ + k];
  }
  Matrix multiply(const Matrix& s, const Matrix& t) const;

 private:
  const YDAlgebra& a_;
  size_t n_;
  std::vector<Matrix> sigma_;
  std::vector<Vec> mult_cols_;
};

struct AxiomCheck {
  std::string name;
  bool passed = false;
  std::string witness;  // empty when passed
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* find(const std::string& name) const;
};

enum class VerifyMode {
  Full,      // run every check
  FailFast,  // stop at the first failure (cheap checks are ordered first)
};

// Exhaustive basis-tuple verification of the Yetter-Drinfel'd Hopf algebra
// axioms, with exact equality. Failures carry a witness, nothing throws.
AxiomReport verify_axioms(const YDAlgebra& a, VerifyMode mode = VerifyMode::Full);

struct TrivialityStatus {
  bool trivial = false;
  bool completely_trivial = false;
  std::string witness;  // first counterexample when a flag is false
};

// Subspace given by a basis; an empty list means the whole algebra.
TrivialityStatus triviality_status(const YDAlgebra& a, const std::vector<Vec>& subspace = {});

// The group algebra K[alg_group] with trivial H-action and H-coaction for
// H = K[h_group]: the completely trivial Yetter-Drinfel'd Hopf algebra.
YDAlgebra make_group_algebra(const FinAbGroup& alg_group, const FinAbGroup& h_group);

}  // namespace ydforge
