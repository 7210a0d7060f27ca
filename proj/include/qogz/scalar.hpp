#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qogz/cyclotomic.hpp"
#include "qogz/poly.hpp"

namespace qogz {

/// An element of Q(zeta_m)(q), q transcendental.
///
/// Stored as numerator / denominator, both polynomials in q (slot 0 of the
/// polynomial engine), coprime, with a monic denominator. Two scalars are
/// equal iff their stored representations are identical.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : num_(v) {}                    // NOLINT(google-explicit-constructor)
  Scalar(Cyclotomic c) : num_(std::move(c)) {}   // NOLINT(google-explicit-constructor)

  static Scalar q(int power = 1);
  static Scalar zeta(int m, long k = 1);
  /// Normalizes; throws DivisionByZero when den is zero. Both arguments
  /// must only involve slot 0 (Laurent exponents allowed).
  static Scalar fraction(const Poly& num, const Poly& den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  /// c * q^k for a cyclotomic c, if the scalar has that shape.
  std::optional<std::pair<Cyclotomic, int>> as_monomial() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(int k) const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// e.g. "(q^2 + z^1)/(q - 1)".
  std::string to_string() const;
  /// Inverse of to_string; also accepts any field expression in q, z,
  /// integers, + - * / ^ and parentheses. `m` fixes the meaning of z.
  static Scalar parse(std::string_view text, int m);

 private:
  Poly num_;
  Poly den_{1};
};

/// The (m,p)-form q-number q^{-xm/p}(q^{xm}-1) / (q^{-m/p}(q^m-1)).
Scalar mp_q_number(long x, int m, int p);

/// Render a polynomial in q alone, e.g. "q^2 - 2*q + 1".
std::string render_q_poly(const Poly& p);

}  // namespace qogz
