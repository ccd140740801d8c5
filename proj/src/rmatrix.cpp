#include "ydforge/rmatrix.hpp"

namespace ydforge {

RMatrix build_rmatrix(const Bicharacter& theta) {
  const auto checks = bicharacter_checks(theta);
  if (!checks.nondegenerate) throw DegenerateBicharacter();
  const FinAbGroup& g = theta.group();
  const int n = g.order();
  const Scalar inv_order = Scalar(n).inverse();
  RMatrix r;
  r.group = g;
  r.entries = Matrix(static_cast<size_t>(n), static_cast<size_t>(n));
  r.inverse_entries = Matrix(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    const int ainv = g.index_of(g.inv(g.element(a)));
    for (int b = 0; b < n; ++b) {
      r.entries.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
          theta.value_by_index(a, b) * inv_order;
      r.inverse_entries.at(static_cast<size_t>(a), static_cast<size_t>(b)) =
          theta.value_by_index(ainv, b) * inv_order;
    }
  }
  return r;
}

Matrix group_ring_tensor_multiply(const FinAbGroup& g, const Matrix& a, const Matrix& b) {
  const int n = g.order();
  Matrix r(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int g1 = 0; g1 < n; ++g1) {
    for (int h1 = 0; h1 < n; ++h1) {
      const Scalar& x = a.at(static_cast<size_t>(g1), static_cast<size_t>(h1));
      if (x.is_zero()) continue;
      for (int g2 = 0; g2 < n; ++g2) {
        const int gp = g.index_of(g.mul(g.element(g1), g.element(g2)));
        for (int h2 = 0; h2 < n; ++h2) {
          const Scalar& y = b.at(static_cast<size_t>(g2), static_cast<size_t>(h2));
          if (y.is_zero()) continue;
          const int hp = g.index_of(g.mul(g.element(h1), g.element(h2)));
          r.at(static_cast<size_t>(gp), static_cast<size_t>(hp)) += x * y;
        }
      }
    }
  }
  return r;
}

RMatrixReport check_rmatrix(const RMatrix& r) {
  const FinAbGroup& g = r.group;
  const int n = g.order();
  const int unit = g.index_of(g.identity());
  RMatrixReport rep;

  // Axiom (1): sum h a_i (x) h b_i = sum a_i h (x) b_i h for all h. Both
  // sides are index shifts of R; equality is automatic over K[G] with G
  // abelian, but computed anyway.
  rep.axiom1 = true;
  for (int h = 0; h < n && rep.axiom1; ++h) {
    const GroupElement he = g.element(h);
    Matrix lhs(static_cast<size_t>(n), static_cast<size_t>(n));
    Matrix rhs(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const Scalar& c = r.entries.at(static_cast<size_t>(a), static_cast<size_t>(b));
        if (c.is_zero()) continue;
        const int ha = g.index_of(g.mul(he, g.element(a)));
        const int hb = g.index_of(g.mul(he, g.element(b)));
        const int ah = g.index_of(g.mul(g.element(a), he));
        const int bh = g.index_of(g.mul(g.element(b), he));
        lhs.at(static_cast<size_t>(ha), static_cast<size_t>(hb)) += c;
        rhs.at(static_cast<size_t>(ah), static_cast<size_t>(bh)) += c;
      }
    }
    if (lhs != rhs) rep.axiom1 = false;
  }

  // Axiom (2): (Delta (x) id)(R) = sum_{i,j} a_i (x) a_j (x) b_i b_j.
  rep.axiom2 = true;
  for (int p = 0; p < n && rep.axiom2; ++p) {
    for (int q = 0; q < n && rep.axiom2; ++q) {
      for (int s = 0; s < n; ++s) {
        // lhs: Delta(g) = g (x) g, so entry (p,q,s) = delta_{p,q} R[p][s]
        const Scalar lhs = (p == q) ? r.entries.at(static_cast<size_t>(p), static_cast<size_t>(s))
                                    : Scalar(0);
        Scalar rhs;
        for (int s1 = 0; s1 < n; ++s1) {
          const int s2 = g.index_of(g.mul(g.inv(g.element(s1)), g.element(s)));
          rhs += r.entries.at(static_cast<size_t>(p), static_cast<size_t>(s1)) *
                 r.entries.at(static_cast<size_t>(q), static_cast<size_t>(s2));
        }
        if (lhs != rhs) {
          rep.axiom2 = false;
          break;
        }
      }
    }
  }

  // Axiom (3): (id (x) Delta)(R) = sum_{i,j} a_i a_j (x) b_j (x) b_i.
  rep.axiom3 = true;
  for (int p = 0; p < n && rep.axiom3; ++p) {
    for (int q = 0; q < n && rep.axiom3; ++q) {
      for (int s = 0; s < n; ++s) {
        const Scalar lhs = (q == s) ? r.entries.at(static_cast<size_t>(p), static_cast<size_t>(q))
                                    : Scalar(0);
        Scalar rhs;
        for (int p1 = 0; p1 < n; ++p1) {
          const int p2 = g.index_of(g.mul(g.inv(g.element(p1)), g.element(p)));
          rhs += r.entries.at(static_cast<size_t>(p1), static_cast<size_t>(s)) *
                 r.entries.at(static_cast<size_t>(p2), static_cast<size_t>(q));
        }
        if (lhs != rhs) {
          rep.axiom3 = false;
          break;
        }
      }
    }
  }

  Matrix unit_tensor(static_cast<size_t>(n), static_cast<size_t>(n));
  unit_tensor.at(static_cast<size_t>(unit), static_cast<size_t>(unit)) = Scalar(1);
  rep.invertible = group_ring_tensor_multiply(g, r.entries, r.inverse_entries) == unit_tensor &&
                   group_ring_tensor_multiply(g, r.inverse_entries, r.entries) == unit_tensor;

  return rep;
}

std::vector<Matrix> induce_coaction(const FinAbGroup& g, const std::vector<Matrix>& action,
                                    const Bicharacter& theta) {
  if (!(theta.group() == g)) throw std::invalid_argument("bicharacter group mismatch");
  const auto checks = bicharacter_checks(theta);
  if (!checks.symmetric) throw NonSymmetricBicharacter();
  if (!checks.nondegenerate) throw DegenerateBicharacter();
  const int n = g.order();
  if (action.size() != static_cast<size_t>(n)) throw DimensionMismatch("action family size");
  const size_t dim = action.front().rows();
  const Scalar inv_order = Scalar(n).inverse();
  std::vector<Matrix> coaction;
  coaction.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    Matrix pi(dim, dim);
    for (int b = 0; b < n; ++b) {
      pi += action[static_cast<size_t>(b)] * (theta.value_by_index(a, b) * inv_order);
    }
    coaction.push_back(std::move(pi));
  }
  return coaction;
}

Character theta_character(const Bicharacter& theta, const GroupElement& g) {
  const FinAbGroup& grp = theta.group();
  std::vector<Scalar> vals(static_cast<size_t>(grp.rank()));
  for (int j = 0; j < grp.rank(); ++j) {
    std::vector<int> exps(static_cast<size_t>(grp.rank()), 0);
    exps[static_cast<size_t>(j)] = 1;
    vals[static_cast<size_t>(j)] = theta.value(g, GroupElement{exps});
  }
  return Character(grp, std::move(vals));
}

}  // namespace ydforge
