#pragma once

// Laurent polynomials over Q(zeta_m)(q) in the variables x[k,i], and their
// fraction field.
//
// Internally both types are a pair (num, den) of engine polynomials in
// (q, x...) with den a polynomial free of monomial factors, coprime to num,
// and with leading coefficient 1. For LaurentPoly the denominator involves
// q only. The public views (Scalar coefficients, x-monic denominators)
// are derived on demand by terms(), numerator() and denominator().

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qogz/poly.hpp"
#include "qogz/scalar.hpp"

namespace qogz {

struct VarIndex {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// Maps x[k,i] (1-based) to engine slots 1.. in (row, column) order.
class VarLayout {
 public:
  VarLayout() = default;
  explicit VarLayout(std::vector<int> row_lengths);

  int rows() const { return static_cast<int>(r_.size()); }
  int row_length(int k) const;
  const std::vector<int>& row_lengths() const { return r_; }
  /// |r|, the number of x variables.
  int size() const { return total_; }

  int slot(int k, int i) const;
  int slot(VarIndex v) const { return slot(v.row, v.col); }
  VarIndex index_of(int slot) const;
  bool contains(VarIndex v) const;

  friend bool operator==(const VarLayout& a, const VarLayout& b) { return a.r_ == b.r_; }

 private:
  std::vector<int> r_;
  std::vector<int> offset_;
  int total_ = 0;
};

namespace detail {

struct Frac {
  Poly num;
  Poly den{1};
};

Frac frac_make(const Poly& num, const Poly& den);
Frac frac_add(const Frac& a, const Frac& b);
Frac frac_mul(const Frac& a, const Frac& b);
Frac frac_inv(const Frac& a);
/// Restore the denominator invariants after an automorphism of the Laurent
/// ring was applied to both parts.
void frac_fix_den(Frac& f);
/// x[slot] -> q^{-qpower * u[slot]} x[slot] for every x slot.
Frac frac_q_shift(const Frac& f, const Exponents& u, int qpower);

}  // namespace detail

/// Substitution data: slot -> (coefficient, target slot).
using SubstitutionMap = std::map<int, std::pair<Scalar, int>>;

class RatFunc;

/// Sparse Laurent polynomial in the x variables with Scalar coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : f_{Poly(c), Poly(1)} {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Scalar& c);                  // NOLINT(google-explicit-constructor)

  /// x[slot]^power.
  static LaurentPoly variable(int slot, int power = 1);
  static LaurentPoly variable(const VarLayout& layout, VarIndex v, int power = 1);
  /// c * x^e (slot 0 of e is ignored).
  static LaurentPoly monomial(const Exponents& e, const Scalar& c = Scalar(1));

  bool is_zero() const { return f_.num.is_zero(); }
  bool is_one() const { return f_.num.is_one() && f_.den.is_one(); }
  /// Scalar coefficients keyed by x exponent vectors, in descending
  /// graded-lex order.
  std::vector<std::pair<Exponents, Scalar>> terms() const;
  Scalar coefficient(const Exponents& x_exps) const;
  /// Number of distinct x monomials.
  std::size_t term_count() const;
  bool is_x_monomial() const { return term_count() == 1; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  /// Negative powers only for single-term polynomials.
  LaurentPoly pow(int k) const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.f_.num == b.f_.num && a.f_.den == b.f_.den;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string to_string(const VarLayout& layout) const;

  const detail::Frac& frac() const { return f_; }
  static LaurentPoly from_frac(detail::Frac f);

 private:
  detail::Frac f_;
};

/// Normalized fraction of Laurent polynomials.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(long c) : f_{Poly(c), Poly(1)} {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Scalar& c);                  // NOLINT(google-explicit-constructor)
  RatFunc(const LaurentPoly& p) : f_(p.frac()) {}  // NOLINT(google-explicit-constructor)

  /// Throws DivisionByZero when den is zero.
  static RatFunc fraction(const LaurentPoly& num, const LaurentPoly& den);

  bool is_zero() const { return f_.num.is_zero(); }
  bool is_one() const { return f_.num.is_one() && f_.den.is_one(); }

  /// Canonical numerator / denominator with Scalar coefficients: the
  /// denominator is a polynomial in x without monomial factor whose leading
  /// graded-lex coefficient is 1.
  LaurentPoly numerator() const;
  LaurentPoly denominator() const;
  /// The value as a Laurent polynomial, if its denominator is free of x.
  std::optional<LaurentPoly> as_laurent() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc pow(int k) const;

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.f_.num == b.f_.num && a.f_.den == b.f_.den;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// x[slot] -> q^{-qpower * u[slot]} x[slot]: the coefficient twist
  /// produced by moving delta^u across this element.
  RatFunc q_shifted(const Exponents& u, int qpower = 1) const;

  std::string to_string(const VarLayout& layout) const;
  /// Expressions over q, z, x[k,i], integers with + - * / ^ ( ).
  static RatFunc parse(std::string_view text, const VarLayout& layout, int m);

  const detail::Frac& frac() const { return f_; }
  static RatFunc from_frac(detail::Frac f);

 private:
  detail::Frac f_;
};

/// e_d(args); e_0 = 1. Throws std::out_of_range unless 0 <= d <= args.size().
LaurentPoly elementary_symmetric(int d, const std::vector<LaurentPoly>& args);

/// Ring homomorphism x[s] -> c_s * x[t_s]. Every x variable occurring in f
/// must be mapped (std::invalid_argument otherwise).
LaurentPoly monomial_substitute(const LaurentPoly& f, const SubstitutionMap& map);
RatFunc monomial_substitute(const RatFunc& f, const SubstitutionMap& map);

/// num / den in canonical form.
RatFunc frac_normalize(const LaurentPoly& num, const LaurentPoly& den);

/// "x[k,i]^e*..." for the x part of e; "" for the empty monomial.
std::string render_x_monomial(const Exponents& e, const VarLayout& layout);

}  // namespace qogz
