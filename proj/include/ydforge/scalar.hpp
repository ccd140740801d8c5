#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "ydforge/rational.hpp"

namespace ydforge {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(xi8)") {}
};

/// Element of the cyclotomic field K = Q(xi8) = Q[X]/(X^4 + 1), stored as
/// exact rational coordinates a0 + a1*xi + a2*xi^2 + a3*xi^3. The coordinate
/// vector is canonical: two values are equal iff their coordinates are.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n) : c_{Rational(n), Rational(0), Rational(0), Rational(0)} {}
  explicit Scalar(Rational r) : c_{std::move(r), Rational(0), Rational(0), Rational(0)} {}

  static Scalar from_coords(std::array<Rational, 4> coords);

  // xi^k for any integer k, reduced via xi^4 = -1.
  static Scalar xi(int power = 1);
  // iota = xi^2, a primitive fourth root of unity.
  static Scalar iota() { return xi(2); }

  const Rational& coord(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::array<Rational, 4>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  // True iff the xi, xi^2, xi^3 coordinates vanish.
  bool is_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Multiplicative inverse, computed by solving the 4x4 linear system of
  // multiplication-by-*this over Q. Throws DivisionByZero.
  Scalar inverse() const;

  Scalar pow(long long e) const;

  // Human-readable form with w = xi and i = xi^2, e.g. "1/2 - i/2", "w^3".
  std::string str() const;

 private:
  std::array<Rational, 4> c_{Rational(0), Rational(0), Rational(0), Rational(0)};
};

// Container ordering only (lexicographic on coordinates); not a field order.
bool lex_less(const Scalar& a, const Scalar& b);

/// The parameter zeta: a fourth root of unity, not required to be primitive.
enum class ZetaKind { PlusOne, MinusOne, PlusI, MinusI };

Scalar zeta_embed(ZetaKind kind);

// CLI spellings "1", "-1", "i", "-i".
std::string zeta_label(ZetaKind kind);
ZetaKind zeta_from_label(std::string_view label);  // throws std::invalid_argument

constexpr std::array<ZetaKind, 4> kAllZetaKinds = {ZetaKind::PlusOne, ZetaKind::MinusOne,
                                                   ZetaKind::PlusI, ZetaKind::MinusI};

}  // namespace ydforge
