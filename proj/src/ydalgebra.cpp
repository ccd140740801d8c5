#include "ydforge/ydalgebra.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ydforge {

namespace {

std::string describe(const Vec& v, const std::vector<std::string>& labels) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + v[i].str() + ")*" + labels[i];
  }
  return s.empty() ? "0" : s;
}

std::string describe(const Matrix& t, const std::vector<std::string>& labels) {
  std::string s;
  for (size_t i = 0; i < t.rows(); ++i) {
    for (size_t j = 0; j < t.cols(); ++j) {
      if (t.at(i, j).is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + t.at(i, j).str() + ")*" + labels[i] + "(x)" + labels[j];
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace

void YDAlgebra::validate() const {
  const size_t n = static_cast<size_t>(dim);
  if (dim <= 0) throw DimensionMismatch("dim must be positive");
  if (labels.size() != n) throw DimensionMismatch("labels size");
  if (mult.size() != n * n * n) throw DimensionMismatch("mult tensor size");
  if (unit.size() != n) throw DimensionMismatch("unit size");
  if (coprod.size() != n * n * n) throw DimensionMismatch("coprod tensor size");
  if (counit.size() != n) throw DimensionMismatch("counit size");
  if (antipode.rows() != n || antipode.cols() != n) throw DimensionMismatch("antipode shape");
  const size_t m = static_cast<size_t>(group.order());
  if (action.size() != m) throw DimensionMismatch("action family size");
  if (coaction.size() != m) throw DimensionMismatch("coaction family size");
  for (const Matrix& mat : action) {
    if (mat.rows() != n || mat.cols() != n) throw DimensionMismatch("action matrix shape");
  }
  for (const Matrix& mat : coaction) {
    if (mat.rows() != n || mat.cols() != n) throw DimensionMismatch("coaction matrix shape");
  }
}

Vec YDAlgebra::basis_vector(int i) const {
  Vec v(static_cast<size_t>(dim));
  v[static_cast<size_t>(i)] = Scalar(1);
  return v;
}

Vec YDAlgebra::mult_column(int i, int j) const {
  Vec v(static_cast<size_t>(dim));
  for (int k = 0; k < dim; ++k) v[static_cast<size_t>(k)] = mult_at(i, j, k);
  return v;
}

Vec YDAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (a.size() != static_cast<size_t>(dim) || b.size() != static_cast<size_t>(dim))
    throw DimensionMismatch("multiply operand size");
  Vec r(static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (a[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[static_cast<size_t>(j)].is_zero()) continue;
      const Scalar c = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k) {
        const Scalar& m = mult_at(i, j, k);
        if (!m.is_zero()) r[static_cast<size_t>(k)] += c * m;
      }
    }
  }
  return r;
}

Matrix YDAlgebra::coprod_tensor(const Vec& a) const {
  if (a.size() != static_cast<size_t>(dim)) throw DimensionMismatch("coprod operand size");
  Matrix t(static_cast<size_t>(dim), static_cast<size_t>(dim));
  for (int k = 0; k < dim; ++k) {
    if (a[static_cast<size_t>(k)].is_zero()) continue;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const Scalar& c = coprod_at(k, i, j);
        if (!c.is_zero()) t.at(static_cast<size_t>(i), static_cast<size_t>(j)) += a[static_cast<size_t>(k)] * c;
      }
    }
  }
  return t;
}

Matrix YDAlgebra::coprod_basis(int k) const {
  Matrix t(static_cast<size_t>(dim), static_cast<size_t>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t.at(static_cast<size_t>(i), static_cast<size_t>(j)) = coprod_at(k, i, j);
  return t;
}

Scalar YDAlgebra::counit_of(const Vec& a) const {
  if (a.size() != static_cast<size_t>(dim)) throw DimensionMismatch("counit operand size");
  Scalar s;
  for (int i = 0; i < dim; ++i) s += counit[static_cast<size_t>(i)] * a[static_cast<size_t>(i)];
  return s;
}

Vec YDAlgebra::antipode_of(const Vec& a) const { return antipode * a; }

Vec YDAlgebra::act(int g_index, const Vec& a) const {
  return action[static_cast<size_t>(g_index)] * a;
}

Vec YDAlgebra::coact_component(int g_index, const Vec& a) const {
  return coaction[static_cast<size_t>(g_index)] * a;
}

Matrix YDAlgebra::quasisymmetry(const Vec& a, const Vec& b) const {
  Matrix r(static_cast<size_t>(dim), static_cast<size_t>(dim));
  for (int g = 0; g < group.order(); ++g) {
    const Vec pa = coact_component(g, a);
    if (vec_is_zero(pa)) continue;
    r += outer(act(g, b), pa);
  }
  return r;
}

Matrix YDAlgebra::quasisymmetry(const Matrix& tensor) const {
  Matrix r(static_cast<size_t>(dim), static_cast<size_t>(dim));
  const Matrix tt = tensor.transpose();
  for (int g = 0; g < group.order(); ++g) {
    r += action[static_cast<size_t>(g)] * tt * coaction[static_cast<size_t>(g)].transpose();
  }
  return r;
}

Matrix YDAlgebra::quasisymmetry_inverse(const Matrix& tensor) const {
  // sigma^{-1}(w (x) v) = v^(2) (x) phi_{g^{-1}}(w) summed over the
  // g-components v^(1); uses that the antipode of K[G] is inversion.
  Matrix r(static_cast<size_t>(dim), static_cast<size_t>(dim));
  const Matrix tt = tensor.transpose();
  for (int g = 0; g < group.order(); ++g) {
    const int ginv = group.index_of(group.inv(group.element(g)));
    r += coaction[static_cast<size_t>(g)] * tt * action[static_cast<size_t>(ginv)].transpose();
  }
  return r;
}

Matrix YDAlgebra::braided_multiply(const Matrix& s, const Matrix& t) const {
  return BraidedOps(*this).multiply(s, t);
}

Matrix YDAlgebra::psi_operator(const Character& gamma) const {
  Matrix r(static_cast<size_t>(dim), static_cast<size_t>(dim));
  for (int g = 0; g < group.order(); ++g) {
    const Scalar v = gamma.value(group.element(g));
    if (v.is_zero()) continue;
    r += coaction[static_cast<size_t>(g)] * v;
  }
  return r;
}

bool YDAlgebra::is_cocommutative() const {
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        if (coprod_at(k, i, j) != coprod_at(k, j, i)) return false;
  return true;
}

int YDAlgebra::label_index(const std::string& label) const {
  for (int i = 0; i < dim; ++i) {
    if (labels[static_cast<size_t>(i)] == label) return i;
  }
  return -1;
}

BraidedOps::BraidedOps(const YDAlgebra& a) : a_(a), n_(static_cast<size_t>(a.dim)) {
  sigma_.reserve(n_ * n_);
  for (size_t j = 0; j < n_; ++j) {
    for (size_t k = 0; k < n_; ++k) {
      sigma_.push_back(a.quasisymmetry(a.basis_vector(static_cast<int>(j)),
                                       a.basis_vector(static_cast<int>(k))));
    }
  }
  mult_cols_.reserve(n_ * n_);
  for (size_t i = 0; i < n_; ++i)
    for (size_t p = 0; p < n_; ++p)
      mult_cols_.push_back(a.mult_column(static_cast<int>(i), static_cast<int>(p)));
}

Matrix BraidedOps::multiply(const Matrix& s, const Matrix& t) const {
  // (a (x) b)(c (x) d) = a sigma(b (x) c)_1 (x) sigma(b (x) c)_2 d,
  // extended bilinearly over the basis entries of s and t.
  Matrix r(n_, n_);
  for (size_t i = 0; i < n_; ++i) {
    for (size_t j = 0; j < n_; ++j) {
      const Scalar& sij = s.at(i, j);
      if (sij.is_zero()) continue;
      for (size_t k = 0; k < n_; ++k) {
        for (size_t l = 0; l < n_; ++l) {
          const Scalar& tkl = t.at(k, l);
          if (tkl.is_zero()) continue;
          const Scalar c = sij * tkl;
          const Matrix& sg = sigma_basis(static_cast<int>(j), static_cast<int>(k));
          for (size_t p = 0; p < n_; ++p) {
            for (size_t q = 0; q < n_; ++q) {
              if (sg.at(p, q).is_zero()) continue;
              const Scalar cc = c * sg.at(p, q);
              const Vec& left = mult_cols_[i * n_ + p];
              const Vec& right = mult_cols_[q * n_ + l];
              for (size_t u = 0; u < n_; ++u) {
                if (left[u].is_zero()) continue;
                const Scalar cl = cc * left[u];
                for (size_t v = 0; v < n_; ++v) {
                  if (right[v].is_zero()) continue;
                  r.at(u, v) += cl * right[v];
                }
              }
            }
          }
        }
      }
    }
  }
  return r;
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

using WitnessFn = std::function<std::optional<std::string>()>;

struct Checker {
  AxiomReport report;
  bool stop = false;
  VerifyMode mode;

  void run(const std::string& name, const WitnessFn& fn) {
    if (stop) return;
    auto witness = fn();
    report.checks.push_back({name, !witness.has_value(), witness.value_or("")});
    if (witness && mode == VerifyMode::FailFast) stop = true;
  }
};

}  // namespace

AxiomReport verify_axioms(const YDAlgebra& a, VerifyMode mode) {
  a.validate();
  const int n = a.dim;
  const int m = a.group.order();
  const auto& labels = a.labels;
  Checker ck{{}, false, mode};

  const auto eq_vec = [&](const Vec& x, const Vec& y, const std::string& what) -> std::optional<std::string> {
    if (x == y) return std::nullopt;
    return what + ": lhs = " + describe(x, labels) + ", rhs = " + describe(y, labels);
  };
  const auto eq_mat = [&](const Matrix& x, const Matrix& y, const std::string& what) -> std::optional<std::string> {
    if (x == y) return std::nullopt;
    return what + ": lhs = " + describe(x, labels) + ", rhs = " + describe(y, labels);
  };

  // Cheap sanity and (co)module checks first; the braided bialgebra law is
  // the most expensive and runs last.
  ck.run("unit_laws", [&]() -> std::optional<std::string> {
    for (int j = 0; j < n; ++j) {
      const Vec e = a.basis_vector(j);
      if (auto w = eq_vec(a.multiply(a.unit, e), e, "1*" + labels[static_cast<size_t>(j)])) return w;
      if (auto w = eq_vec(a.multiply(e, a.unit), e, labels[static_cast<size_t>(j)] + "*1")) return w;
    }
    return std::nullopt;
  });

  ck.run("counit_laws", [&]() -> std::optional<std::string> {
    for (int k = 0; k < n; ++k) {
      Vec left(static_cast<size_t>(n)), right(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const Scalar& c = a.coprod_at(k, i, j);
          if (c.is_zero()) continue;
          left[static_cast<size_t>(j)] += a.counit[static_cast<size_t>(i)] * c;
          right[static_cast<size_t>(i)] += a.counit[static_cast<size_t>(j)] * c;
        }
      }
      const Vec e = a.basis_vector(k);
      if (auto w = eq_vec(left, e, "(eps(x)id)Delta(" + labels[static_cast<size_t>(k)] + ")")) return w;
      if (auto w = eq_vec(right, e, "(id(x)eps)Delta(" + labels[static_cast<size_t>(k)] + ")")) return w;
    }
    return std::nullopt;
  });

  ck.run("counit_morphism", [&]() -> std::optional<std::string> {
    if (!a.counit_of(a.unit).is_one()) return std::string("eps(1) != 1");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Scalar lhs = a.counit_of(a.mult_column(i, j));
        const Scalar rhs = a.counit[static_cast<size_t>(i)] * a.counit[static_cast<size_t>(j)];
        if (lhs != rhs) {
          return "eps(" + labels[static_cast<size_t>(i)] + "*" + labels[static_cast<size_t>(j)] +
                 ") = " + lhs.str() + " != " + rhs.str();
        }
      }
    }
    return std::nullopt;
  });

  ck.run("action_representation", [&]() -> std::optional<std::string> {
    const int unit = a.group.index_of(a.group.identity());
    if (a.action[static_cast<size_t>(unit)] != Matrix::identity(static_cast<size_t>(n)))
      return std::string("phi_1 is not the identity");
    for (int g = 0; g < m; ++g) {
      for (int h = 0; h < m; ++h) {
        const int gh = a.group.index_of(a.group.mul(a.group.element(g), a.group.element(h)));
        if (a.action[static_cast<size_t>(g)] * a.action[static_cast<size_t>(h)] !=
            a.action[static_cast<size_t>(gh)]) {
          return "phi_g phi_h != phi_gh at g=" + a.group.element_label(a.group.element(g)) +
                 ", h=" + a.group.element_label(a.group.element(h));
        }
      }
    }
    return std::nullopt;
  });

  ck.run("coaction_counit", [&]() -> std::optional<std::string> {
    Matrix sum(static_cast<size_t>(n), static_cast<size_t>(n));
    for (int g = 0; g < m; ++g) sum += a.coaction[static_cast<size_t>(g)];
    if (sum != Matrix::identity(static_cast<size_t>(n)))
      return std::string("sum_g pi_g is not the identity");
    return std::nullopt;
  });

  ck.run("coaction_grading", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      for (int h = 0; h < m; ++h) {
        const Matrix prod = a.coaction[static_cast<size_t>(g)] * a.coaction[static_cast<size_t>(h)];
        const Matrix expect = (g == h) ? a.coaction[static_cast<size_t>(g)]
                                       : Matrix(static_cast<size_t>(n), static_cast<size_t>(n));
        if (prod != expect) {
          return "pi_g pi_h != delta_{g,h} pi_g at g=" + a.group.element_label(a.group.element(g)) +
                 ", h=" + a.group.element_label(a.group.element(h));
        }
      }
    }
    return std::nullopt;
  });

  ck.run("dimodule_condition", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      for (int h = 0; h < m; ++h) {
        if (a.action[static_cast<size_t>(g)] * a.coaction[static_cast<size_t>(h)] !=
            a.coaction[static_cast<size_t>(h)] * a.action[static_cast<size_t>(g)]) {
          return "phi_g pi_h != pi_h phi_g at g=" + a.group.element_label(a.group.element(g)) +
                 ", h=" + a.group.element_label(a.group.element(h));
        }
      }
    }
    return std::nullopt;
  });

  ck.run("antipode_convolution", [&]() -> std::optional<std::string> {
    for (int k = 0; k < n; ++k) {
      Vec left(static_cast<size_t>(n)), right(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const Scalar& c = a.coprod_at(k, i, j);
          if (c.is_zero()) continue;
          left = vec_add(left, vec_scale(c, a.multiply(a.antipode.column(static_cast<size_t>(i)),
                                                       a.basis_vector(j))));
          right = vec_add(right, vec_scale(c, a.multiply(a.basis_vector(i),
                                                         a.antipode.column(static_cast<size_t>(j)))));
        }
      }
      const Vec expect = vec_scale(a.counit[static_cast<size_t>(k)], a.unit);
      if (auto w = eq_vec(left, expect, "S(a_(1))a_(2) for a=" + labels[static_cast<size_t>(k)]))
        return w;
      if (auto w = eq_vec(right, expect, "a_(1)S(a_(2)) for a=" + labels[static_cast<size_t>(k)]))
        return w;
    }
    return std::nullopt;
  });

  ck.run("associativity", [&]() -> std::optional<std::string> {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Vec ij = a.mult_column(i, j);
        for (int k = 0; k < n; ++k) {
          const Vec lhs = a.multiply(ij, a.basis_vector(k));
          const Vec rhs = a.multiply(a.basis_vector(i), a.mult_column(j, k));
          if (lhs != rhs) {
            return "(" + labels[static_cast<size_t>(i)] + "*" + labels[static_cast<size_t>(j)] +
                   ")*" + labels[static_cast<size_t>(k)] + " != ...: lhs = " + describe(lhs, labels) +
                   ", rhs = " + describe(rhs, labels);
          }
        }
      }
    }
    return std::nullopt;
  });

  ck.run("coassociativity", [&]() -> std::optional<std::string> {
    for (int k = 0; k < n; ++k) {
      // lhs[p][q][r] = sum_i C_k[i][r] C_i[p][q]; rhs[p][q][r] = sum_j C_k[p][j] C_j[q][r]
      for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
          for (int r = 0; r < n; ++r) {
            Scalar lhs, rhs;
            for (int i = 0; i < n; ++i) {
              const Scalar& c = a.coprod_at(k, i, r);
              if (!c.is_zero()) lhs += c * a.coprod_at(i, p, q);
            }
            for (int j = 0; j < n; ++j) {
              const Scalar& c = a.coprod_at(k, p, j);
              if (!c.is_zero()) rhs += c * a.coprod_at(j, q, r);
            }
            if (lhs != rhs) {
              return "coassociativity fails on " + labels[static_cast<size_t>(k)] + " at (" +
                     labels[static_cast<size_t>(p)] + "," + labels[static_cast<size_t>(q)] + "," +
                     labels[static_cast<size_t>(r)] + "): " + lhs.str() + " != " + rhs.str();
            }
          }
        }
      }
    }
    return std::nullopt;
  });

  ck.run("action_automorphisms", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      if (auto w = eq_vec(a.act(g, a.unit), a.unit,
                          "phi_" + a.group.element_label(a.group.element(g)) + "(1)"))
        return w;
      for (int i = 0; i < n; ++i) {
        const Vec gi = a.act(g, a.basis_vector(i));
        for (int j = 0; j < n; ++j) {
          const Vec lhs = a.act(g, a.mult_column(i, j));
          const Vec rhs = a.multiply(gi, a.act(g, a.basis_vector(j)));
          if (lhs != rhs) {
            return "phi_" + a.group.element_label(a.group.element(g)) + " not multiplicative at " +
                   labels[static_cast<size_t>(i)] + "*" + labels[static_cast<size_t>(j)] +
                   ": lhs = " + describe(lhs, labels) + ", rhs = " + describe(rhs, labels);
          }
        }
      }
    }
    return std::nullopt;
  });

  ck.run("mult_colinear", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      const GroupElement ge = a.group.element(g);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const Vec lhs = a.coact_component(g, a.mult_column(i, j));
          Vec rhs(static_cast<size_t>(n));
          for (int h = 0; h < m; ++h) {
            const GroupElement he = a.group.element(h);
            const int k = a.group.index_of(a.group.mul(a.group.inv(he), ge));
            const Vec ph = a.coact_component(h, a.basis_vector(i));
            if (vec_is_zero(ph)) continue;
            rhs = vec_add(rhs, a.multiply(ph, a.coact_component(k, a.basis_vector(j))));
          }
          if (lhs != rhs) {
            return "pi_g(ab) codiagonal mismatch at g=" + a.group.element_label(ge) + ", a=" +
                   labels[static_cast<size_t>(i)] + ", b=" + labels[static_cast<size_t>(j)];
          }
        }
      }
    }
    return std::nullopt;
  });

  ck.run("unit_colinear", [&]() -> std::optional<std::string> {
    const int unit = a.group.index_of(a.group.identity());
    for (int g = 0; g < m; ++g) {
      const Vec lhs = a.coact_component(g, a.unit);
      const Vec rhs = (g == unit) ? a.unit : Vec(static_cast<size_t>(n));
      if (auto w = eq_vec(lhs, rhs, "pi_" + a.group.element_label(a.group.element(g)) + "(1)"))
        return w;
    }
    return std::nullopt;
  });

  ck.run("counit_linear", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      for (int k = 0; k < n; ++k) {
        const Scalar lhs = a.counit_of(a.act(g, a.basis_vector(k)));
        const Scalar& rhs = a.counit[static_cast<size_t>(k)];
        if (lhs != rhs) {
          return "eps(phi_" + a.group.element_label(a.group.element(g)) + " " +
                 labels[static_cast<size_t>(k)] + ") = " + lhs.str() + " != " + rhs.str();
        }
      }
    }
    return std::nullopt;
  });

  ck.run("counit_colinear", [&]() -> std::optional<std::string> {
    const int unit = a.group.index_of(a.group.identity());
    for (int g = 0; g < m; ++g) {
      for (int k = 0; k < n; ++k) {
        const Scalar lhs = a.counit_of(a.coact_component(g, a.basis_vector(k)));
        const Scalar rhs = (g == unit) ? a.counit[static_cast<size_t>(k)] : Scalar(0);
        if (lhs != rhs) {
          return "eps(pi_" + a.group.element_label(a.group.element(g)) + " " +
                 labels[static_cast<size_t>(k)] + ") = " + lhs.str() + " != " + rhs.str();
        }
      }
    }
    return std::nullopt;
  });

  ck.run("antipode_linear", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      if (a.antipode * a.action[static_cast<size_t>(g)] !=
          a.action[static_cast<size_t>(g)] * a.antipode) {
        return "S phi_g != phi_g S at g=" + a.group.element_label(a.group.element(g));
      }
    }
    return std::nullopt;
  });

  ck.run("antipode_colinear", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      if (a.antipode * a.coaction[static_cast<size_t>(g)] !=
          a.coaction[static_cast<size_t>(g)] * a.antipode) {
        return "S pi_g != pi_g S at g=" + a.group.element_label(a.group.element(g));
      }
    }
    return std::nullopt;
  });

  ck.run("coproduct_linear", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      const Matrix& phi = a.action[static_cast<size_t>(g)];
      for (int k = 0; k < n; ++k) {
        const Matrix lhs = a.coprod_tensor(a.act(g, a.basis_vector(k)));
        const Matrix rhs = phi * a.coprod_basis(k) * phi.transpose();
        if (lhs != rhs) {
          return "Delta(phi_g a) != (phi_g(x)phi_g)Delta(a) at g=" +
                 a.group.element_label(a.group.element(g)) + ", a=" + labels[static_cast<size_t>(k)];
        }
      }
    }
    return std::nullopt;
  });

  ck.run("coproduct_colinear", [&]() -> std::optional<std::string> {
    for (int g = 0; g < m; ++g) {
      const GroupElement ge = a.group.element(g);
      for (int k = 0; k < n; ++k) {
        const Matrix lhs = a.coprod_tensor(a.coact_component(g, a.basis_vector(k)));
        Matrix rhs(static_cast<size_t>(n), static_cast<size_t>(n));
        const Matrix ck_tensor = a.coprod_basis(k);
        for (int h = 0; h < m; ++h) {
          const GroupElement he = a.group.element(h);
          const int k2 = a.group.index_of(a.group.mul(a.group.inv(he), ge));
          rhs += a.coaction[static_cast<size_t>(h)] * ck_tensor *
                 a.coaction[static_cast<size_t>(k2)].transpose();
        }
        if (lhs != rhs) {
          return "Delta(pi_g a) codiagonal mismatch at g=" + a.group.element_label(ge) +
                 ", a=" + labels[static_cast<size_t>(k)];
        }
      }
    }
    return std::nullopt;
  });

  ck.run("coproduct_morphism", [&]() -> std::optional<std::string> {
    if (auto w = eq_mat(a.coprod_tensor(a.unit), outer(a.unit, a.unit), "Delta(1)")) return w;
    const BraidedOps braided(a);
    for (int i = 0; i < n; ++i) {
      const Matrix di = a.coprod_basis(i);
      for (int j = 0; j < n; ++j) {
        const Matrix lhs = a.coprod_tensor(a.mult_column(i, j));
        const Matrix rhs = braided.multiply(di, a.coprod_basis(j));
        if (lhs != rhs) {
          return "Delta(" + labels[static_cast<size_t>(i)] + "*" + labels[static_cast<size_t>(j)] +
                 ") != Delta(a)Delta(b) in A(x)^A: lhs = " + describe(lhs, labels) +
                 ", rhs = " + describe(rhs, labels);
        }
      }
    }
    return std::nullopt;
  });

  return ck.report;
}

TrivialityStatus triviality_status(const YDAlgebra& a, const std::vector<Vec>& subspace) {
  std::vector<Vec> basis = subspace;
  if (basis.empty()) {
    for (int i = 0; i < a.dim; ++i) basis.push_back(a.basis_vector(i));
  }
  TrivialityStatus st;
  st.trivial = true;
  st.completely_trivial = true;

  for (size_t i = 0; i < basis.size() && st.trivial; ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (a.quasisymmetry(basis[i], basis[j]) != outer(basis[j], basis[i])) {
        st.trivial = false;
        st.witness = "sigma(b" + std::to_string(i) + " (x) b" + std::to_string(j) +
                     ") is not the flip";
        break;
      }
    }
  }

  const int unit = a.group.index_of(a.group.identity());
  for (const Vec& v : basis) {
    for (int g = 0; g < a.group.order(); ++g) {
      if (a.act(g, v) != v) {
        st.completely_trivial = false;
        if (st.witness.empty())
          st.witness = "phi_" + a.group.element_label(a.group.element(g)) + " moves " +
                       describe(v, a.labels);
        break;
      }
    }
    if (!st.completely_trivial) break;
  }
  if (st.completely_trivial) {
    for (const Vec& v : basis) {
      if (a.coact_component(unit, v) != v) {
        st.completely_trivial = false;
        if (st.witness.empty()) st.witness = "pi_1 is not the identity on the subspace";
        break;
      }
    }
  }
  return st;
}

YDAlgebra make_group_algebra(const FinAbGroup& alg_group, const FinAbGroup& h_group) {
  YDAlgebra a;
  const int n = alg_group.order();
  a.dim = n;
  a.group = h_group;
  for (int i = 0; i < n; ++i) a.labels.push_back("g" + std::to_string(i + 1));
  a.mult.assign(static_cast<size_t>(n) * n * n, Scalar(0));
  a.coprod.assign(static_cast<size_t>(n) * n * n, Scalar(0));
  a.unit = Vec(static_cast<size_t>(n));
  a.unit[static_cast<size_t>(alg_group.index_of(alg_group.identity()))] = Scalar(1);
  a.counit.assign(static_cast<size_t>(n), Scalar(1));
  a.antipode = Matrix(static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = alg_group.index_of(alg_group.mul(alg_group.element(i), alg_group.element(j)));
      a.mult_at(i, j, k) = Scalar(1);
    }
    a.coprod_at(i, i, i) = Scalar(1);
    a.antipode.at(static_cast<size_t>(alg_group.index_of(alg_group.inv(alg_group.element(i)))),
                  static_cast<size_t>(i)) = Scalar(1);
  }
  const int hm = h_group.order();
  const int hunit = h_group.index_of(h_group.identity());
  for (int g = 0; g < hm; ++g) {
    a.action.push_back(Matrix::identity(static_cast<size_t>(n)));
    a.coaction.push_back(g == hunit ? Matrix::identity(static_cast<size_t>(n))
                                    : Matrix(static_cast<size_t>(n), static_cast<size_t>(n)));
  }
  return a;
}

}  // namespace ydforge
