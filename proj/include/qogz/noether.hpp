#pragma once

// Quantum Laurent polynomial algebras with the G(m,p,n) action, and the
// ingredients of the q-difference Noether argument.
//
// A quantum torus element is a SkewElement over the one-row layout (n) with
// y_i stored as (delta^{1i})^{-1}, so that y_i x_j = q^{s[i=j]} x_j y_i for
// qpower s.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qogz/report.hpp"
#include "qogz/skew.hpp"
#include "qogz/spec.hpp"

namespace qogz {

class QuantumTorus {
 public:
  /// n pairs (x_i, y_i) with y_i x_i = q^{qpower} x_i y_i.
  explicit QuantumTorus(int n, int qpower = 1);

  int n() const { return n_; }
  int qpower() const { return zero_.qpower(); }
  const VarLayout& layout() const { return zero_.layout(); }
  const SkewElement& zero() const { return zero_; }

  SkewElement one() const;
  SkewElement x(int i, int power = 1) const;
  SkewElement y(int i, int power = 1) const;
  /// c * x^a * y^b, a and b indexed from 1.
  SkewElement monomial(const Exponents& a, const Exponents& b, const Scalar& c = Scalar(1)) const;
  SkewElement scalar(const RatFunc& c) const;

  /// Terms "(c)*y[1]^-1*y[2]^2", "0" for zero.
  std::string to_string(const SkewElement& a) const;

 private:
  int n_;
  SkewElement zero_;
};

/// g(x_i) = zeta^{a_i} x_{sigma(i)}, g(y_i) = y_{sigma(i)}. Throws
/// ParameterMismatch unless a lives on a one-row layout of g.n() variables.
SkewElement qtorus_act(const GroupElement& g, const SkewElement& a);

/// x_i -> x_i^m, y_i -> y_i, from qpower m to qpower 1. Throws
/// ParameterMismatch unless a.qpower() == m.
SkewElement power_map_step1(const SkewElement& a, int m);

/// Invariance under every generator of G(m,p,n).
bool qtorus_is_invariant(const SkewElement& a, int m, int p);

/// (f_0, ..., f_{p-1}) with f = sum_k f_k (x_1...x_n)^{km/p}, each f_k
/// invariant under G(m,1,n). Throws std::invalid_argument for input that is
/// not G(m,p,n)-invariant and std::logic_error when a polynomial input has a
/// component that is not divisible by its monomial.
std::vector<SkewElement> eigenspace_decompose(const SkewElement& f, int m, int p);
/// sum_k f_k (x_1...x_n)^{km/p}.
SkewElement eigenspace_reconstruct(const std::vector<SkewElement>& parts, int m, int p);
/// "(0, c_0), (1, c_1), ...".
std::string render_decomposition(const QuantumTorus& torus, const std::vector<SkewElement>& parts);

/// (1/|G|) sum_g g(f) over the given group elements.
SkewElement reynolds_average(const SkewElement& f, const std::vector<GroupElement>& group);

struct RandomTorusOptions {
  int terms = 3;
  int x_min = -2, x_max = 4;
  int y_min = -1, y_max = 1;
  int coef_bound = 3;
  int q_bound = 1;
  /// When positive, the x exponents of each term are b + modulus * t_i with a
  /// common b drawn from the multiples of step below modulus.
  int modulus = 0;
  int step = 1;
};

/// Sum of random monomials c q^j x^a y^b with c a nonzero integer.
SkewElement random_torus_element(const QuantumTorus& torus, std::mt19937_64& rng, const RandomTorusOptions& opts = {});

/// The map psi: P_k -> L * M, x_i -> x_ki, y_i -> (delta^{ki})^{-1}, on a
/// torus element with r_k pairs.
SkewElement psi_map(const SkewElement& a, int k, const AlgebraSpec& spec);
/// Relations of the images of the torus generators and G(m,p,r_k)
/// equivariance on generators. Throws std::out_of_range unless 1 <= k < n.
Report psi_iso_check(int k, const AlgebraSpec& spec);

/// Parameters q^{low} (low_count times) and q^{high} (high_count times) of a
/// quantum Weyl field over a purely transcendental extension of degree
/// base_degree.
struct WeylFieldParams {
  int low = 1, low_count = 0;
  int high = 1, high_count = 0;
  int base_degree = 0;

  int pairs() const { return low_count + high_count; }
  /// Sorted exponent list, low before high.
  std::vector<int> exponents() const;
  /// "q^2 x1, q^4 x2, base 0".
  std::string to_string() const;
  friend bool operator==(const WeylFieldParams&, const WeylFieldParams&) = default;
};

/// Invariants of G(m,p,n) on the quantum Weyl field with parameter q.
WeylFieldParams weyl_parameters_invariants(int m, int p, int n);
/// The quantum OGZ algebra of signature r.
WeylFieldParams weyl_parameters_ogz(const AlgebraSpec& spec);

}  // namespace qogz
