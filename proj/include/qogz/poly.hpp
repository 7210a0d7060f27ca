#pragma once

// Sparse multivariate Laurent polynomials over Q(zeta_m).
//
// This is the arithmetic engine behind Scalar, LaurentPoly and RatFunc.
// Variable slot 0 holds the quantum parameter q; slots 1.. hold the x
// variables in (row, column) order. The engine itself is layout-agnostic.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qogz/cyclotomic.hpp"

namespace qogz {

inline constexpr int kMaxVars = 16;

struct Exponents {
  std::array<int32_t, kMaxVars> e{};

  int32_t& operator[](int i) { return e[i]; }
  int32_t operator[](int i) const { return e[i]; }

  Exponents& operator+=(const Exponents& o) {
    for (int i = 0; i < kMaxVars; ++i) e[i] += o.e[i];
    return *this;
  }
  Exponents& operator-=(const Exponents& o) {
    for (int i = 0; i < kMaxVars; ++i) e[i] -= o.e[i];
    return *this;
  }
  friend Exponents operator+(Exponents a, const Exponents& b) { return a += b; }
  friend Exponents operator-(Exponents a, const Exponents& b) { return a -= b; }
  friend bool operator==(const Exponents& a, const Exponents& b) { return a.e == b.e; }
  friend bool operator!=(const Exponents& a, const Exponents& b) { return a.e != b.e; }

  bool is_zero() const;
  /// Sum of the x exponents (slots 1..).
  int x_degree() const;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& x) const noexcept;
};

/// Monomial order: graded on the x slots, then lexicographic with slot 1
/// most significant, then the q exponent. Returns <0, 0, >0.
int compare_monomials(const Exponents& a, const Exponents& b);

/// Plain lexicographic comparison over all slots, used for map keys.
struct ExponentsLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return a.e < b.e; }
};

struct Term {
  Exponents exp;
  Cyclotomic coef;
};

class Poly {
 public:
  Poly() = default;
  Poly(Cyclotomic c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Cyclotomic(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly monomial(const Exponents& e, Cyclotomic c = Cyclotomic(1));
  static Poly variable(int slot, int power = 1);
  /// Build from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms);

  /// Terms in descending monomial order.
  const std::vector<Term>& terms() const { return t_; }
  std::size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return t_.size() == 1; }
  const Term& leading() const { return t_.front(); }
  const Term& trailing() const { return t_.back(); }
  Cyclotomic constant_value() const;

  int degree(int slot) const;
  int min_degree(int slot) const;
  Exponents min_exponents() const;
  Exponents max_exponents() const;
  bool is_polynomial() const;
  /// Bitmask of slots with a nonzero exponent somewhere.
  uint32_t used_vars() const;
  /// 1 + highest used slot (0 for constants).
  int nvars() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const Cyclotomic& c) const;
  /// Multiply by the monomial x^e.
  Poly shifted(const Exponents& e) const;
  /// Divide by the componentwise minimum monomial; returns that monomial.
  Exponents strip_monomial();

  /// Coefficients in slot v, index d holding the coefficient of v^d.
  /// Requires min_degree(v) >= 0.
  std::vector<Poly> coefficients_in(int v) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, int v);

  /// Rewrite every term; the callback may change exponent and coefficient
  /// arbitrarily. Terms are re-sorted and merged afterwards.
  Poly map_terms(const std::function<void(Term&)>& f) const;
  /// Same, for callbacks that preserve the relative order of terms and
  /// never merge them (q-shifts). Skips the re-sort.
  Poly map_terms_ordered(const std::function<void(Term&)>& f) const;

  std::string debug_string() const;

 private:
  void canonicalize();
  std::vector<Term> t_;
};

Poly pow(const Poly& a, int k);

/// a / b when the quotient is a Laurent polynomial, otherwise nullopt.
/// Throws DivisionByZero if b is zero.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

/// Greatest common divisor up to units of the Laurent ring: the result is a
/// polynomial with no monomial factor whose leading coefficient is 1.
/// gcd(0, 0) is 0.
Poly gcd(const Poly& a, const Poly& b);

/// Pseudo-remainder of a by b viewed as univariate polynomials in slot v.
Poly pseudo_remainder(const Poly& a, const Poly& b, int v);

/// Divide by the leading coefficient.
Poly make_monic(const Poly& a);

}  // namespace qogz
