#pragma once

// The skew group algebra L * M^ with delta^{ki} x_{lj} = q^{-[k=l][i=j]} x_{lj} delta^{ki}.
// Elements are stored as left-coefficient sums  sum_u c_u delta^u.

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qogz/laurent.hpp"
#include "qogz/reflection.hpp"

namespace qogz {

/// prod (delta^{ki})^{u_ki}; slot numbering follows VarLayout, slot 0 unused.
struct DeltaMonomial {
  Exponents u;

  static DeltaMonomial unit(const VarLayout& layout, VarIndex v, int power = 1);
  bool is_identity() const { return u.is_zero(); }
  DeltaMonomial operator-() const;
  friend DeltaMonomial operator+(const DeltaMonomial& a, const DeltaMonomial& b) { return {a.u + b.u}; }
  friend bool operator==(const DeltaMonomial& a, const DeltaMonomial& b) { return a.u == b.u; }
  friend auto operator<=>(const DeltaMonomial& a, const DeltaMonomial& b) { return a.u.e <=> b.u.e; }
  /// "d[1,1]^1*d[2,2]^-1", "1" for the identity.
  std::string to_string(const VarLayout& layout) const;
};

/// Deliberately broken commutation rules, used to show that the checks can fail.
enum class ShiftMutation {
  none,
  /// delta^u x^e = q^{+<u,e>} x^e delta^u (still an algebra, for q^-1).
  flipped_sign,
  /// delta^u x^e = q^{-<|u|,e>} x^e delta^u: inverses shift like the generators.
  inverse_sign_bug,
};

class SkewElement {
 public:
  /// qpower s: delta^u x^e = q^{-s<u,e>} x^e delta^u.
  explicit SkewElement(VarLayout layout = VarLayout(), int qpower = 1, ShiftMutation mutation = ShiftMutation::none);

  /// c * delta^u.
  static SkewElement term(const SkewElement& like, const DeltaMonomial& u, const RatFunc& c);
  /// delta^u * c, normalized to the left form.
  static SkewElement right_term(const SkewElement& like, const DeltaMonomial& u, const RatFunc& c);
  /// c * delta^0.
  static SkewElement scalar(const SkewElement& like, const RatFunc& c);
  /// (delta^{v})^power.
  static SkewElement delta(const SkewElement& like, VarIndex v, int power = 1);

  const VarLayout& layout() const { return layout_; }
  int qpower() const { return qpower_; }
  ShiftMutation mutation() const { return mutation_; }
  const std::map<DeltaMonomial, RatFunc>& terms() const { return t_; }
  RatFunc coefficient(const DeltaMonomial& u) const;
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  /// The coefficient twist of moving delta^u to the right of c.
  RatFunc shift(const DeltaMonomial& u, const RatFunc& c) const;

  SkewElement& operator+=(const SkewElement& o);
  SkewElement& operator-=(const SkewElement& o);
  SkewElement operator-() const;
  friend SkewElement operator+(SkewElement a, const SkewElement& b) { return a += b; }
  friend SkewElement operator-(SkewElement a, const SkewElement& b) { return a -= b; }
  friend SkewElement operator*(const SkewElement& a, const SkewElement& b);
  /// Left multiplication by a coefficient.
  friend SkewElement operator*(const RatFunc& c, const SkewElement& a);
  friend bool operator==(const SkewElement& a, const SkewElement& b) {
    return a.layout_ == b.layout_ && a.qpower_ == b.qpower_ && a.t_ == b.t_;
  }
  friend bool operator!=(const SkewElement& a, const SkewElement& b) { return !(a == b); }

  /// Terms sorted by delta monomial: "(c)*d[1,1]^1 + (c')*d[1,2]^-1"; "0".
  std::string to_string() const;

 private:
  void check_compatible(const SkewElement& o) const;
  void add_term(const DeltaMonomial& u, const RatFunc& c);

  VarLayout layout_;
  int qpower_;
  ShiftMutation mutation_;
  std::map<DeltaMonomial, RatFunc> t_;
};

SkewElement skew_mul(const SkewElement& a, const SkewElement& b);
std::vector<DeltaMonomial> skew_support(const SkewElement& a);
/// g(c delta^u) = g(c) g(delta)^u with g(delta^{ki}) = delta^{k sigma_k(i)}.
SkewElement act_on_skew(const ProductGroupElement& g, const SkewElement& a);
SkewElement commutator(const SkewElement& a, const SkewElement& b);

enum class Tristate { no, yes, unknown };
std::string to_string(Tristate t);

/// Does the monoid generated by S equal Z^dim? Lattice test by Hermite
/// reduction, then: negation-closed S means yes; otherwise a breadth-first
/// search over sums of at most `radius` elements must reach -s for each s.
/// A "no" needs a certificate (a functional nonnegative on S); otherwise the
/// answer is unknown.
Tristate monoid_generates(const std::vector<std::vector<long>>& S, int dim, int radius = 6);
/// The same for M, the delta monomials vanishing on the last row of the
/// layout. Throws std::invalid_argument for elements outside M.
Tristate monoid_generates(const std::vector<DeltaMonomial>& S, const VarLayout& layout, int radius = 6);

}  // namespace qogz
