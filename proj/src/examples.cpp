#include "ydforge/examples.hpp"

#include "ydforge/rmatrix.hpp"

namespace ydforge {

namespace {

constexpr int kDim = 8;

// Monomial x^i y^j sits at index i + 4j.
int monomial_index(int i, int j) { return (i & 3) + 4 * j; }

const std::vector<std::string>& monomial_labels() {
  static const std::vector<std::string> labels = {"1",  "x",  "x^2",  "x^3",
                                                  "y",  "xy", "x^2y", "x^3y"};
  return labels;
}

// Coefficients of y^2 as a polynomial in x.
std::array<Scalar, 4> y_square_coeffs(WhichExample which, const Scalar& zeta) {
  const Scalar half(Rational(1, 2));
  if (which == WhichExample::One) {
    // y^2 = (1 + zeta x + x^2 - zeta x^3) / 2
    return {half, half * zeta, half, -(half * zeta)};
  }
  // y^2 = (zeta + x - zeta x^2 + x^3) / 2
  return {half * zeta, half, -(half * zeta), half};
}

// Structure constants of the monomial product (x^a y^b)(x^c y^d) under the
// rewrite rules x^4 -> 1, y x -> x^3 y (second example only) and the y^2
// relation.
void fill_mult(YDAlgebra& alg, WhichExample which, const Scalar& zeta) {
  const auto q = y_square_coeffs(which, zeta);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 2; ++d) {
          const int i = monomial_index(a, b);
          const int j = monomial_index(c, d);
          const int twist = (which == WhichExample::Two && b == 1) ? 3 : 1;
          const int xpow = (a + twist * c) & 3;
          if (b + d < 2) {
            alg.mult_at(i, j, monomial_index(xpow, b + d)) = Scalar(1);
          } else {
            for (int e = 0; e < 4; ++e) {
              if (q[static_cast<size_t>(e)].is_zero()) continue;
              alg.mult_at(i, j, monomial_index((xpow + e) & 3, 0)) = q[static_cast<size_t>(e)];
            }
          }
        }
      }
    }
  }
}

// phi(x^i y^j) = phi(x)^i phi(y)^j, for generator images given as vectors.
Matrix automorphism_from_generator_images(const YDAlgebra& alg, const Vec& x_img,
                                          const Vec& y_img) {
  Matrix phi(kDim, kDim);
  Vec xpow = alg.unit;
  for (int i = 0; i < 4; ++i) {
    phi.set_column(static_cast<size_t>(monomial_index(i, 0)), xpow);
    phi.set_column(static_cast<size_t>(monomial_index(i, 1)), alg.multiply(xpow, y_img));
    if (i < 3) xpow = alg.multiply(xpow, x_img);
  }
  return phi;
}

Bicharacter example_bicharacter(const FinAbGroup& g, const Scalar& zeta) {
  Matrix gen(2, 2);
  gen.at(0, 0) = zeta * zeta;  // theta(g2, g2)
  gen.at(0, 1) = Scalar(-1);
  gen.at(1, 0) = Scalar(-1);
  gen.at(1, 1) = Scalar(1);
  return Bicharacter(g, gen);
}

}  // namespace

GroupElement klein_element(int i) {
  switch (i) {
    case 1: return GroupElement{{0, 0}};
    case 2: return GroupElement{{1, 0}};
    case 3: return GroupElement{{0, 1}};
    case 4: return GroupElement{{1, 1}};
    default: throw std::out_of_range("Klein group elements are numbered 1..4");
  }
}

BuiltExample build_example(const ExampleSpec& spec) {
  BuiltExample built;
  built.spec = spec;
  const Scalar zeta = zeta_embed(spec.zeta);
  const Scalar iota = Scalar::iota();
  const Scalar half(Rational(1, 2));

  YDAlgebra& alg = built.algebra;
  alg.dim = kDim;
  alg.labels = monomial_labels();
  alg.group = FinAbGroup({2, 2});
  alg.mult.assign(kDim * kDim * kDim, Scalar(0));
  alg.coprod.assign(kDim * kDim * kDim, Scalar(0));
  alg.unit = Vec(kDim);
  alg.unit[0] = Scalar(1);
  alg.counit.assign(kDim, Scalar(1));

  fill_mult(alg, spec.which, zeta);

  // Action: g2 by phi (x -> x^3, y -> x^3 y), g3 by phi' (x -> x, y -> x^2 y),
  // extended multiplicatively over the Klein group.
  const Vec x1 = alg.basis_vector(monomial_index(1, 0));
  const Vec x2 = alg.basis_vector(monomial_index(2, 0));
  const Vec x3 = alg.basis_vector(monomial_index(3, 0));
  const Vec y1 = alg.basis_vector(monomial_index(0, 1));
  const Matrix phi = automorphism_from_generator_images(alg, x3, alg.multiply(x3, y1));
  const Matrix phi_prime = automorphism_from_generator_images(alg, x1, alg.multiply(x2, y1));
  alg.action.assign(4, Matrix());
  alg.action[static_cast<size_t>(alg.group.index_of(klein_element(1)))] =
      Matrix::identity(kDim);
  alg.action[static_cast<size_t>(alg.group.index_of(klein_element(2)))] = phi;
  alg.action[static_cast<size_t>(alg.group.index_of(klein_element(3)))] = phi_prime;
  alg.action[static_cast<size_t>(alg.group.index_of(klein_element(4)))] = phi * phi_prime;

  built.theta = example_bicharacter(alg.group, zeta);
  alg.coaction = induce_coaction(alg.group, alg.action, built.theta);

  // Coproduct: the unique algebra map into A (x)^ A with
  //   Delta(x) = (x(x)x + x(x)x^3 + x^3(x)x - x^3(x)x^3) / 2, Delta(y) = y(x)y.
  {
    const BraidedOps braided(alg);
    Matrix dx(kDim, kDim);
    dx.at(1, 1) = half;
    dx.at(1, 3) = half;
    dx.at(3, 1) = half;
    dx.at(3, 3) = -half;
    Matrix dy(kDim, kDim);
    dy.at(4, 4) = Scalar(1);
    Matrix dunit(kDim, kDim);
    dunit.at(0, 0) = Scalar(1);

    Matrix dxpow = dunit;
    for (int i = 0; i < 4; ++i) {
      const Matrix base = dxpow;
      for (int j = 0; j < 2; ++j) {
        const Matrix tensor = (j == 0) ? base : braided.multiply(base, dy);
        const int k = monomial_index(i, j);
        for (int p = 0; p < kDim; ++p)
          for (int q = 0; q < kDim; ++q)
            alg.coprod_at(k, p, q) = tensor.at(static_cast<size_t>(p), static_cast<size_t>(q));
      }
      if (i < 3) dxpow = braided.multiply(dxpow, dx);
    }
  }

  // Group-like basis: omega1..omega4, eta1..eta4.
  built.grouplike_labels = {"omega1", "omega2", "omega3", "omega4",
                            "eta1",   "eta2",   "eta3",   "eta4"};
  const Scalar cplus = half * (Scalar(1) + iota * zeta * zeta);
  const Scalar cminus = half * (Scalar(1) - iota * zeta * zeta);
  Matrix p(kDim, kDim);
  p.at(0, 0) = Scalar(1);                      // omega1 = 1
  p.at(1, 1) = cplus;                          // omega2 = c+ x + c- x^3
  p.at(3, 1) = cminus;
  p.at(1, 2) = cminus;                         // omega3 = c- x + c+ x^3
  p.at(3, 2) = cplus;
  p.at(2, 3) = Scalar(1);                      // omega4 = x^2
  p.at(4, 4) = Scalar(1);                      // eta1 = y
  p.at(7, 5) = Scalar(1);                      // eta2 = x^3 y
  p.at(6, 6) = Scalar(1);                      // eta3 = x^2 y
  p.at(5, 7) = Scalar(1);                      // eta4 = x y
  built.basis_change = p;
  auto pinv = inverse(p);
  if (!pinv) throw std::logic_error("group-like basis change is singular");
  built.basis_change_inv = *pinv;

  // Antipode: identity on the omegas, the explicit table on the etas,
  // transported to the monomial basis.
  const Scalar zinv = zeta.inverse();
  Matrix s_gl = Matrix::identity(kDim);
  const auto set_eta_column = [&](int col, std::array<Scalar, 4> coeffs) {
    for (int r = 0; r < 4; ++r)
      s_gl.at(static_cast<size_t>(4 + r), static_cast<size_t>(4 + col)) =
          half * coeffs[static_cast<size_t>(r)];
  };
  if (spec.which == WhichExample::One) {
    set_eta_column(0, {Scalar(1), zinv, Scalar(1), -zinv});
    set_eta_column(1, {zinv, Scalar(1), -zinv, Scalar(1)});
    set_eta_column(2, {Scalar(1), -zinv, Scalar(1), zinv});
    set_eta_column(3, {-zinv, Scalar(1), zinv, Scalar(1)});
  } else {
    set_eta_column(0, {zinv, Scalar(1), -zinv, Scalar(1)});
    set_eta_column(1, {Scalar(1), zinv, Scalar(1), -zinv});
    set_eta_column(2, {-zinv, Scalar(1), zinv, Scalar(1)});
    set_eta_column(3, {Scalar(1), -zinv, Scalar(1), zinv});
  }
  alg.antipode = p * s_gl * built.basis_change_inv;

  alg.validate();
  return built;
}

GrouplikeTables grouplike_basis_tables(const BuiltExample& built) {
  const YDAlgebra& alg = built.algebra;
  GrouplikeTables tables;
  const auto product = [&](int s, int t) {
    return built.to_grouplike_coords(
        alg.multiply(built.grouplike_vector(s), built.grouplike_vector(t)));
  };
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      tables.omega_omega[static_cast<size_t>(i)][static_cast<size_t>(j)] = product(i, j);
      tables.omega_eta[static_cast<size_t>(i)][static_cast<size_t>(j)] = product(i, 4 + j);
      tables.eta_omega[static_cast<size_t>(i)][static_cast<size_t>(j)] = product(4 + i, j);
      tables.eta_eta[static_cast<size_t>(i)][static_cast<size_t>(j)] = product(4 + i, 4 + j);
    }
  }
  return tables;
}

namespace {

// Does the pair (vx, vy) satisfy the defining relations, scalars commuting?
bool character_respects_relations(WhichExample which, const Scalar& zeta, const Scalar& vx,
                                  const Scalar& vy) {
  const Scalar half(Rational(1, 2));
  if (!vx.pow(4).is_one()) return false;
  if (which == WhichExample::One) {
    return vy * vy == half * (Scalar(1) + zeta * vx + vx * vx - zeta * vx.pow(3));
  }
  if (vx * vy != vy * vx.pow(3)) return false;
  return vy * vy == half * (zeta * Scalar(1) + vx - zeta * vx * vx + vx.pow(3));
}

Scalar char_on_monomial(const AlgebraCharacter& chi, int i, int j) {
  return chi.x.pow(i) * chi.y.pow(j);
}

}  // namespace

ExampleCharacters characters_of_example(const ExampleSpec& spec) {
  const Scalar zeta = zeta_embed(spec.zeta);
  const Scalar iota = Scalar::iota();
  const Scalar xi = Scalar::xi();
  ExampleCharacters out;

  if (spec.which == WhichExample::One) {
    out.characters = {{"eps1", Scalar(1), Scalar(1)},   {"eps2", Scalar(-1), Scalar(1)},
                      {"eps3", Scalar(-1), Scalar(-1)}, {"eps4", Scalar(1), Scalar(-1)}};
    const bool primitive = (zeta * zeta == Scalar(-1));
    if (primitive) {
      out.characters.push_back({"rho1", zeta, zeta});
      out.characters.push_back({"rho2", -zeta, Scalar(1)});
      out.characters.push_back({"rho3", zeta, -zeta});
      out.characters.push_back({"rho4", -zeta, Scalar(-1)});
    } else if (zeta == Scalar(-1)) {
      out.characters.push_back({"rho1", -iota, xi});
      out.characters.push_back({"rho2", iota, iota * xi});
      out.characters.push_back({"rho3", -iota, -xi});
      out.characters.push_back({"rho4", iota, -(iota * xi)});
    } else {  // zeta = 1
      out.characters.push_back({"rho1", -iota, -(iota * xi)});
      out.characters.push_back({"rho2", iota, xi});
      out.characters.push_back({"rho3", -iota, iota * xi});
      out.characters.push_back({"rho4", iota, -xi});
    }
  } else {
    out.characters = {{"eps1", Scalar(1), Scalar(1)},   {"eps2", Scalar(-1), iota},
                      {"eps3", Scalar(-1), -iota},      {"eps4", Scalar(1), Scalar(-1)}};
    TwoDimRep rep;
    rep.x = Matrix(2, 2);
    rep.x.at(0, 0) = iota;
    rep.x.at(1, 1) = -iota;
    rep.y = Matrix(2, 2);
    rep.y.at(0, 1) = zeta;
    rep.y.at(1, 0) = Scalar(1);
    const Matrix e2 = Matrix::identity(2);
    const Matrix x2 = rep.x * rep.x;
    const Scalar half(Rational(1, 2));
    rep.relations_ok = (x2 * x2 == e2) && (rep.x * rep.y == rep.y * rep.x * x2) &&
                       (rep.y * rep.y ==
                        (e2 * zeta + rep.x - x2 * zeta + x2 * rep.x) * half);
    // X has distinct eigenvalues, so a common eigenvector would be a unit
    // vector; neither is an eigenvector of Y.
    rep.irreducible = !rep.y.at(1, 0).is_zero() && !rep.y.at(0, 1).is_zero();
    out.two_dim = rep;
  }

  out.relations_ok = true;
  for (const auto& chi : out.characters) {
    if (!character_respects_relations(spec.which, zeta, chi.x, chi.y)) out.relations_ok = false;
  }

  out.distinct = true;
  for (size_t s = 0; s < out.characters.size(); ++s) {
    for (size_t t = s + 1; t < out.characters.size(); ++t) {
      if (out.characters[s].x == out.characters[t].x && out.characters[s].y == out.characters[t].y)
        out.distinct = false;
    }
  }

  // Independence certificate: evaluate everything on the monomial basis and
  // compute the exact rank of the stacked matrix.
  std::vector<Vec> rows;
  for (const auto& chi : out.characters) {
    Vec row(kDim);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j)
        row[static_cast<size_t>(monomial_index(i, j))] = char_on_monomial(chi, i, j);
    rows.push_back(std::move(row));
  }
  if (out.two_dim) {
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        Vec row(kDim);
        for (int i = 0; i < 4; ++i) {
          for (int j = 0; j < 2; ++j) {
            Matrix img = Matrix::identity(2);
            for (int t = 0; t < i; ++t) img = img * out.two_dim->x;
            for (int t = 0; t < j; ++t) img = img * out.two_dim->y;
            row[static_cast<size_t>(monomial_index(i, j))] =
                img.at(static_cast<size_t>(r), static_cast<size_t>(c));
          }
        }
        rows.push_back(std::move(row));
      }
    }
  }
  out.independent = rank(from_columns(rows).transpose()) == kDim;
  return out;
}

MatrixRep8 matrix_rep_example2(ZetaKind zeta_kind) {
  const Scalar zeta = zeta_embed(zeta_kind);
  const Scalar half(Rational(1, 2));
  MatrixRep8 rep;

  // X is block diag(X1, X1) with X1 the cyclic shift; Y is the off-diagonal
  // block matrix built from Y1 and the permutation Y2.
  Matrix x1(4, 4);
  x1.at(0, 3) = Scalar(1);
  x1.at(1, 0) = Scalar(1);
  x1.at(2, 1) = Scalar(1);
  x1.at(3, 2) = Scalar(1);

  Matrix y1(4, 4);
  const std::array<std::array<int, 4>, 4> y1_zeta_pattern = {{// entry = zeta^p * sign
                                                              {{1, 0, -1, 0}},
                                                              {{0, -1, 0, 1}},
                                                              {{-1, 0, 1, 0}},
                                                              {{0, 1, 0, -1}}}};
  for (size_t r = 0; r < 4; ++r) {
    for (size_t c = 0; c < 4; ++c) {
      const int p = y1_zeta_pattern[r][c];
      y1.at(r, c) = (p == 0) ? half : (p == 1 ? half * zeta : -(half * zeta));
    }
  }

  Matrix y2(4, 4);
  y2.at(0, 0) = Scalar(1);
  y2.at(1, 3) = Scalar(1);
  y2.at(2, 2) = Scalar(1);
  y2.at(3, 1) = Scalar(1);

  rep.x = Matrix(kDim, kDim);
  rep.y = Matrix(kDim, kDim);
  for (size_t r = 0; r < 4; ++r) {
    for (size_t c = 0; c < 4; ++c) {
      rep.x.at(r, c) = x1.at(r, c);
      rep.x.at(4 + r, 4 + c) = x1.at(r, c);
      rep.y.at(r, 4 + c) = y1.at(r, c);
      rep.y.at(4 + r, c) = y2.at(r, c);
    }
  }

  const Matrix e8 = Matrix::identity(kDim);
  const Matrix x2 = rep.x * rep.x;
  rep.relations_ok = (x2 * x2 == e8) && (rep.x * rep.y == rep.y * x2 * rep.x) &&
                     (rep.y * rep.y == (e8 * zeta + rep.x - x2 * zeta + x2 * rep.x) * half);

  // Stack the monomial images E, X, X^2, X^3, Y, XY, X^2Y, X^3Y as 64-long
  // columns; rank 8 certifies dim A = 8.
  Matrix stacked(64, 8);
  Matrix xpow = e8;
  for (int i = 0; i < 4; ++i) {
    const Matrix xy = xpow * rep.y;
    for (size_t r = 0; r < kDim; ++r) {
      for (size_t c = 0; c < kDim; ++c) {
        stacked.at(r * kDim + c, static_cast<size_t>(monomial_index(i, 0))) = xpow.at(r, c);
        stacked.at(r * kDim + c, static_cast<size_t>(monomial_index(i, 1))) = xy.at(r, c);
      }
    }
    if (i < 3) xpow = xpow * rep.x;
  }
  rep.monomial_rank = rank(stacked);
  return rep;
}

}  // namespace ydforge
