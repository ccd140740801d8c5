#include "ydforge/scalar.hpp"

#include <sstream>

namespace ydforge {

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r) << "/" << boost::multiprecision::denominator(r);
  return out.str();
}

Rational rational_from_string(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(BigInt(std::string(text)));
    }
    BigInt num(std::string(text.substr(0, slash)));
    BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational '" + std::string(text) + "': " + e.what());
  }
}

Scalar Scalar::from_coords(std::array<Rational, 4> coords) {
  Scalar s;
  s.c_ = std::move(coords);
  return s;
}

Scalar Scalar::xi(int power) {
  int k = power % 8;
  if (k < 0) k += 8;
  Scalar s;
  if (k < 4) {
    s.c_[static_cast<size_t>(k)] = 1;
  } else {
    s.c_[static_cast<size_t>(k - 4)] = -1;
  }
  return s;
}

bool Scalar::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_one() const {
  return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool Scalar::is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

Scalar Scalar::operator-() const {
  Scalar r;
  for (size_t i = 0; i < 4; ++i) r.c_[i] = -c_[i];
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // Convolution with the reduction xi^4 = -1: the degree-(i+j) term lands on
  // coordinate (i+j) mod 4 with sign -1 when i+j >= 4.
  std::array<Rational, 4> out{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      Rational term = c_[i] * o.c_[j];
      const size_t d = i + j;
      if (d < 4) {
        out[d] += term;
      } else {
        out[d - 4] -= term;
      }
    }
  }
  c_ = std::move(out);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

namespace {

// Column j of the multiplication-by-a matrix is a * xi^j in coordinates.
std::array<std::array<Rational, 4>, 4> mult_matrix(const std::array<Rational, 4>& a) {
  std::array<std::array<Rational, 4>, 4> m;
  for (size_t j = 0; j < 4; ++j) {
    for (size_t i = 0; i < 4; ++i) {
      // a * xi^j has coordinate a[i-j] at i (cyclic, negated on wrap).
      const size_t src = (i + 4 - j) % 4;
      m[i][j] = (i >= j) ? a[src] : -a[src];
    }
  }
  return m;
}

}  // namespace

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Solve M x = e0 by Gaussian elimination over Q, with M = mult-by-*this.
  auto m = mult_matrix(c_);
  std::array<Rational, 4> rhs{Rational(1), Rational(0), Rational(0), Rational(0)};
  for (size_t col = 0; col < 4; ++col) {
    size_t pivot = col;
    while (pivot < 4 && m[pivot][col] == 0) ++pivot;
    // X^4+1 is irreducible over Q, so M is invertible whenever a != 0.
    if (pivot == 4) throw DivisionByZero();
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    const Rational inv_p = Rational(1) / m[col][col];
    for (size_t j = col; j < 4; ++j) m[col][j] *= inv_p;
    rhs[col] *= inv_p;
    for (size_t row = 0; row < 4; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col];
      for (size_t j = col; j < 4; ++j) m[row][j] -= f * m[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  return from_coords(rhs);
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar acc = Scalar(1);
  long long k = e;
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

namespace {

std::string coeff_term(const Rational& r, const std::string& sym, bool leading) {
  const bool neg = r < 0;
  const Rational mag = neg ? Rational(-r) : r;
  std::string s;
  if (!leading) {
    s += neg ? " - " : " + ";
  } else if (neg) {
    s += "-";
  }
  const BigInt num = boost::multiprecision::numerator(mag);
  const BigInt den = boost::multiprecision::denominator(mag);
  std::ostringstream body;
  if (sym.empty()) {
    body << num;
  } else if (num == 1) {
    body << sym;
  } else {
    body << num << sym;
  }
  if (den != 1) body << "/" << den;
  s += body.str();
  return s;
}

}  // namespace

std::string Scalar::str() const {
  static const std::array<std::string, 4> syms = {"", "w", "i", "w^3"};
  std::string out;
  for (size_t i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    out += coeff_term(c_[i], syms[i], out.empty());
  }
  return out.empty() ? "0" : out;
}

bool lex_less(const Scalar& a, const Scalar& b) {
  for (int i = 0; i < 4; ++i) {
    if (a.coord(i) != b.coord(i)) return a.coord(i) < b.coord(i);
  }
  return false;
}

Scalar zeta_embed(ZetaKind kind) {
  switch (kind) {
    case ZetaKind::PlusOne: return Scalar(1);
    case ZetaKind::MinusOne: return Scalar(-1);
    case ZetaKind::PlusI: return Scalar::iota();
    case ZetaKind::MinusI: return -Scalar::iota();
  }
  throw std::invalid_argument("bad ZetaKind");
}

std::string zeta_label(ZetaKind kind) {
  switch (kind) {
    case ZetaKind::PlusOne: return "1";
    case ZetaKind::MinusOne: return "-1";
    case ZetaKind::PlusI: return "i";
    case ZetaKind::MinusI: return "-i";
  }
  throw std::invalid_argument("bad ZetaKind");
}

ZetaKind zeta_from_label(std::string_view label) {
  if (label == "1") return ZetaKind::PlusOne;
  if (label == "-1") return ZetaKind::MinusOne;
  if (label == "i") return ZetaKind::PlusI;
  if (label == "-i") return ZetaKind::MinusI;
  throw std::invalid_argument("zeta must be one of 1, -1, i, -i");
}

}  // namespace ydforge
