#pragma once

// Generators X_k^+- of the quantum OGZ algebra inside L * M, and checks of
// their symmetry and relations.

#include <optional>
#include <string>
#include <vector>

#include "qogz/report.hpp"
#include "qogz/skew.hpp"
#include "qogz/spec.hpp"

namespace qogz {

struct OgzOptions {
  /// Drop the x_ki^{-(m/p)(r_{k+-1} - r_k)} factor of A_ki (a mutation).
  bool drop_prefactor = false;
  ShiftMutation mutation = ShiftMutation::none;
  int search_radius = 6;
};

/// (x_u/x_v)^{-m/p} ((x_u/x_v)^m - 1) / (q^{-m/p}(q^m - 1)). Throws
/// std::invalid_argument when u == v.
RatFunc build_B(VarIndex u, VarIndex v, const AlgebraSpec& spec);
/// A_ki^{sign}, sign = +1 or -1.
RatFunc build_A(int k, int i, int sign, const AlgebraSpec& spec, const OgzOptions& opts = {});
/// X_k^{sign} = sum_i (delta^{ki})^{sign} A_ki^{sign}, in left form.
SkewElement build_X(int k, int sign, const AlgebraSpec& spec, const OgzOptions& opts = {});

struct OgzGenerators {
  std::vector<SkewElement> X_plus;   // index k-1
  std::vector<SkewElement> X_minus;  // index k-1
  std::vector<GammaGenerator> gammas;
};
OgzGenerators build_generators(const AlgebraSpec& spec, const OgzOptions& opts = {});

/// [X_k^+, X_k^-].
SkewElement cartan_commutator(int k, const AlgebraSpec& spec, const OgzOptions& opts = {});

Report verify_invariance(const AlgebraSpec& spec, const OgzOptions& opts = {});
Report verify_galois_support(const AlgebraSpec& spec, const OgzOptions& opts = {});
/// Asserted for r = (1,...,n); report-only otherwise.
Report verify_serre_and_cross(const AlgebraSpec& spec, const OgzOptions& opts = {});

struct HeisenbergSolution {
  Exponents mu_x, mu_y, mu_k;  // monomials of X^, Y^, K^
  Scalar c_x, c_y, c_k;
  SkewElement X, Y, K, K_inv, L;
};

/// Quantized Heisenberg relations: KK^-1 = K^-1K = 1, KXK^-1 = qX,
/// KYK^-1 = q^-1 Y and
///   yx_form: YX = (K - K^-1)/(q - q^-1),  XY = (qK - q^-1 K^-1)/(q - q^-1)
///   xy_form: the same two right-hand sides with XY and YX exchanged.
/// The yx_form set forces (K + K^-1)X = 0, so it has no solution in a domain.
enum class HeisenbergPresentation { yx_form, xy_form };

/// Search for X^ = X_1^+ c_x x^mu_x, Y^ = X_1^- c_y x^mu_y, K^ = c_k x^mu_k,
/// L^ = x_21^{m/p} satisfying the relations, L^ central, and mutual
/// generation with X_1^+-, gamma^+-1. Requires r = (1,1).
std::optional<HeisenbergSolution> heisenberg_search(const AlgebraSpec& spec, HeisenbergPresentation pres,
                                                    const OgzOptions& opts = {});
/// Both presentations; asserted for (m,p) = (2,2), report-only otherwise.
Report verify_heisenberg(const AlgebraSpec& spec, const OgzOptions& opts = {});

}  // namespace qogz
