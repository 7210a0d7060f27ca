#pragma once

// The groups G(m,p,n) = S_n x| A(m,p,n) and products of them over the rows of
// a signature, acting on the x variables by g(x_i) = zeta_m^{a_i} x_{sigma(i)}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qogz/laurent.hpp"
#include "qogz/spec.hpp"

namespace qogz {

class GroupElement {
 public:
  /// perm holds 1-based images sigma(1..n); a are exponents of zeta_m.
  /// Throws std::invalid_argument unless perm is a permutation, a has
  /// length n, p divides m, and sum(a) is divisible by p.
  GroupElement(std::vector<int> perm, std::vector<long> a, int m, int p);

  static GroupElement identity(int m, int p, int n);

  int m() const { return m_; }
  int p() const { return p_; }
  int n() const { return static_cast<int>(perm_.size()); }
  /// sigma(i), 1-based.
  int sigma(int i) const { return perm_[i - 1]; }
  /// a_i reduced to [0, m).
  int exp(int i) const { return a_[i - 1]; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& exps() const { return a_; }
  bool is_identity() const;

  /// "perm=[2,1] exps=[1,1] (m,p,n)".
  std::string to_string() const;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  int m_, p_;
  std::vector<int> perm_;
  std::vector<int> a_;
};

GroupElement group_make(std::vector<int> perm, std::vector<long> a, int m, int p);
/// The product law making act_on_poly a left action. Throws
/// ParameterMismatch on differing (m,p,n).
GroupElement group_mul(const GroupElement& g, const GroupElement& h);
GroupElement group_inv(const GroupElement& g);
inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return group_mul(g, h); }

/// m^n n!/p.
std::uint64_t group_order(int m, int p, int n);
/// Adjacent transpositions; diag(zeta^p,1,...,1) when p < m; the twisted
/// transposition ((12),(1,-1)) when 1 < p and n >= 2.
std::vector<GroupElement> generating_set(int m, int p, int n);
/// All elements, sorted. Throws SizeLimitExceeded when the order exceeds
/// max_size.
std::vector<GroupElement> enumerate_group(int m, int p, int n, std::uint64_t max_size = 100000);
/// Closure of gens under multiplication, sorted. Throws SizeLimitExceeded
/// past max_size elements.
std::vector<GroupElement> group_closure(const std::vector<GroupElement>& gens, int m, int p, int n,
                                        std::uint64_t max_size = 100000);

/// One component per row; component k is an element of G(m,p,r_k).
struct ProductGroupElement {
  std::vector<GroupElement> components;

  static ProductGroupElement identity(const AlgebraSpec& spec);
  /// g placed in row k, identity elsewhere.
  static ProductGroupElement embed(const AlgebraSpec& spec, int k, const GroupElement& g);
  const GroupElement& row(int k) const { return components.at(k - 1); }
  std::string to_string() const;
  friend auto operator<=>(const ProductGroupElement&, const ProductGroupElement&) = default;
};

ProductGroupElement operator*(const ProductGroupElement& g, const ProductGroupElement& h);
ProductGroupElement group_inv(const ProductGroupElement& g);

/// Union over rows of the embedded generating sets of G(m,p,r_k).
std::vector<ProductGroupElement> generating_set(const AlgebraSpec& spec);

/// Substitution realizing g on row `row` of the layout.
SubstitutionMap action_map(const GroupElement& g, const VarLayout& layout, int row);
SubstitutionMap action_map(const ProductGroupElement& g, const VarLayout& layout);

/// g acting on the variables of row `row` (default: the only row).
LaurentPoly act_on_poly(const GroupElement& g, const LaurentPoly& f, const VarLayout& layout, int row = 1);
RatFunc act_on_poly(const GroupElement& g, const RatFunc& f, const VarLayout& layout, int row = 1);
LaurentPoly act_on_poly(const ProductGroupElement& g, const LaurentPoly& f, const VarLayout& layout);
RatFunc act_on_poly(const ProductGroupElement& g, const RatFunc& f, const VarLayout& layout);

/// Invariance under G(m,p,r_1) x ... x G(m,p,r_n), the rows being those of
/// the layout; checked on generators.
bool is_invariant(const RatFunc& f, const VarLayout& layout, int m, int p);

struct GammaGenerator {
  std::string label;  // "gamma[k,d]" or "gamma[k,d]^-1"
  int row = 1;
  int degree = 1;
  int sign = 1;
  LaurentPoly value;
};

/// gamma_{kd} = e_d(x_k1^m, ...) for d < r_k and gamma_{k r_k}^{+-1} =
/// (x_k1 ... x_kr_k)^{+-m/p}.
std::vector<GammaGenerator> gamma_generators(const AlgebraSpec& spec);

/// alpha = diag(zeta_m, 1, ..., 1) in G(m,1,n) (identity when p = 1) and
/// eps_p = (alpha_1 ... alpha_n)^{m/p}.
std::pair<GroupElement, Scalar> coset_rep_and_epsilon(int m, int p, int n);

}  // namespace qogz
