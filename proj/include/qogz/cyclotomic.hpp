#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace qogz {

/// Euler totient.
int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term
/// first. Computed once per m as (z^m - 1) / prod_{d | m, d < m} Phi_d.
const std::vector<mpz_class>& cyclotomic_polynomial(int m);

/// An element of Q(zeta_m), stored as the reduced residue modulo Phi_m in
/// the basis 1, z, ..., z^(phi(m)-1).
///
/// Elements of orders 1 and 2 are plain rationals and combine freely with
/// any order; so does any element whose residue happens to be rational.
/// Mixing two genuinely irrational elements of different orders throws
/// ParameterMismatch.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_(1) {}
  Cyclotomic(long v) : m_(1), c_{mpq_class(v)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(mpq_class v) : m_(1), c_{std::move(v)} {}  // NOLINT(google-explicit-constructor)

  /// zeta_m^k, reduced.
  static Cyclotomic zeta(int m, long k = 1);
  /// Residue of sum_j coeffs[j] z^j modulo Phi_m.
  static Cyclotomic from_powers(const std::vector<mpq_class>& coeffs, int m);

  int order() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  const mpq_class& rational_part() const { return c_[0]; }

  /// Same value, represented with order m (m must be a multiple of the
  /// current order, or the value must be rational).
  Cyclotomic promoted(int m) const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic operator-() const;
  /// Throws DivisionByZero on zero.
  Cyclotomic inverse() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Multiply by zeta_m^k in place (cheap basis rotation plus reduction).
  void mul_zeta_power(int m, long k);

  /// "3/2", "z^1", "1 + 2*z^1", ...; ascending powers of z.
  std::string to_string() const;
  /// Number of nonzero basis coordinates.
  int weight() const;

  std::size_t hash() const;

 private:
  Cyclotomic(int m, std::vector<mpq_class> c) : m_(m), c_(std::move(c)) {}
  void align_with(Cyclotomic& o);
  void normalize_order();

  int m_;
  std::vector<mpq_class> c_;
};

/// Reduce an integer polynomial in zeta (constant term first) modulo Phi_m.
Cyclotomic cyclo_reduce(const std::vector<long>& poly_in_zeta, int m);

}  // namespace qogz
