#include "qogz/noether.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "qogz/errors.hpp"

namespace qogz {

QuantumTorus::QuantumTorus(int n, int qpower) : n_(n), zero_(VarLayout({n}), qpower) {}

SkewElement QuantumTorus::one() const { return SkewElement::scalar(zero_, RatFunc(1)); }

SkewElement QuantumTorus::x(int i, int power) const {
  return SkewElement::scalar(zero_, RatFunc(LaurentPoly::variable(layout(), {1, i}, power)));
}

SkewElement QuantumTorus::y(int i, int power) const { return SkewElement::delta(zero_, {1, i}, -power); }

SkewElement QuantumTorus::monomial(const Exponents& a, const Exponents& b, const Scalar& c) const {
  Exponents xe;
  DeltaMonomial u;
  for (int i = 1; i <= n_; ++i) {
    xe[i] = a[i];
    u.u[i] = -b[i];
  }
  return SkewElement::term(zero_, u, RatFunc(LaurentPoly::monomial(xe, c)));
}

SkewElement QuantumTorus::scalar(const RatFunc& c) const { return SkewElement::scalar(zero_, c); }

std::string QuantumTorus::to_string(const SkewElement& a) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (const auto& [u, c] : a.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(layout()) + ")";
    for (int i = 1; i <= n_; ++i)
      if (u.u[i]) out += "*y[" + std::to_string(i) + "]^" + std::to_string(-u.u[i]);
  }
  return out;
}

namespace {

void check_torus(const SkewElement& a, int n) {
  const VarLayout& l = a.layout();
  if (l.rows() != 1 || l.row_length(1) != n)
    throw ParameterMismatch("quantum torus element does not have " + std::to_string(n) + " variable pairs");
}

int torus_size(const SkewElement& a) {
  if (a.layout().rows() != 1) throw ParameterMismatch("quantum torus elements live on a one-row layout");
  return a.layout().row_length(1);
}

Exponents diagonal(int n, int power) {
  Exponents e;
  for (int i = 1; i <= n; ++i) e[i] = power;
  return e;
}

SkewElement times_diagonal(const SkewElement& a, int power) {
  const int n = torus_size(a);
  return a * SkewElement::scalar(a, RatFunc(LaurentPoly::monomial(diagonal(n, power))));
}

bool has_polynomial_coefficients(const SkewElement& a) {
  for (const auto& [u, c] : a.terms()) {
    auto lp = c.as_laurent();
    if (!lp) return false;
    for (const auto& [e, s] : lp->terms())
      for (int i = 1; i < kMaxVars; ++i)
        if (e[i] < 0) return false;
  }
  return true;
}

}  // namespace

SkewElement qtorus_act(const GroupElement& g, const SkewElement& a) {
  check_torus(a, g.n());
  return act_on_skew(ProductGroupElement{{g}}, a);
}

SkewElement power_map_step1(const SkewElement& a, int m) {
  if (a.qpower() != m)
    throw ParameterMismatch("power map source must have parameter q^" + std::to_string(m) + ", got q^" +
                            std::to_string(a.qpower()));
  const int n = torus_size(a);
  auto scale = [n, m](Term& t) {
    for (int i = 1; i <= n; ++i) t.exp[i] *= m;
  };
  SkewElement out(a.layout(), 1, a.mutation());
  for (const auto& [u, c] : a.terms()) {
    const detail::Frac& f = c.frac();
    RatFunc image = RatFunc::from_frac(detail::frac_make(f.num.map_terms(scale), f.den.map_terms(scale)));
    out += SkewElement::term(out, u, image);
  }
  return out;
}

bool qtorus_is_invariant(const SkewElement& a, int m, int p) {
  const int n = torus_size(a);
  for (const auto& g : generating_set(m, p, n))
    if (qtorus_act(g, a) != a) return false;
  return true;
}

std::vector<SkewElement> eigenspace_decompose(const SkewElement& f, int m, int p) {
  const int n = torus_size(f);
  if (m < 1 || p < 1 || m % p) throw std::invalid_argument("eigenspace_decompose needs p | m");
  if (!qtorus_is_invariant(f, m, p)) throw std::invalid_argument("input is not G(m,p,n)-invariant");
  auto [alpha, eps] = coset_rep_and_epsilon(m, p, n);
  std::vector<SkewElement> orbit{f};
  for (int j = 1; j < p; ++j) orbit.push_back(qtorus_act(alpha, orbit.back()));
  const bool polynomial = has_polynomial_coefficients(f);
  const Scalar inv_p = Scalar(1) / Scalar(p);
  std::vector<SkewElement> parts;
  for (int k = 0; k < p; ++k) {
    SkewElement proj(f.layout(), f.qpower(), f.mutation());
    for (int j = 0; j < p; ++j) proj += RatFunc(inv_p * eps.pow(-k * j)) * orbit[j];
    SkewElement part = times_diagonal(proj, -k * (m / p));
    if (polynomial && !has_polynomial_coefficients(part))
      throw std::logic_error("eigenspace component " + std::to_string(k) + " is not divisible by (x_1...x_n)^" +
                             std::to_string(k * (m / p)));
    parts.push_back(std::move(part));
  }
  return parts;
}

SkewElement eigenspace_reconstruct(const std::vector<SkewElement>& parts, int m, int p) {
  if (parts.empty()) throw std::invalid_argument("empty decomposition");
  SkewElement out(parts.front().layout(), parts.front().qpower(), parts.front().mutation());
  for (std::size_t k = 0; k < parts.size(); ++k) out += times_diagonal(parts[k], static_cast<int>(k) * (m / p));
  return out;
}

std::string render_decomposition(const QuantumTorus& torus, const std::vector<SkewElement>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ", ";
    out += "(" + std::to_string(k) + ", " + torus.to_string(parts[k]) + ")";
  }
  return out;
}

SkewElement reynolds_average(const SkewElement& f, const std::vector<GroupElement>& group) {
  if (group.empty()) throw std::invalid_argument("empty group");
  SkewElement sum(f.layout(), f.qpower(), f.mutation());
  for (const auto& g : group) sum += qtorus_act(g, f);
  return RatFunc(Scalar(1) / Scalar(static_cast<long>(group.size()))) * sum;
}

SkewElement random_torus_element(const QuantumTorus& torus, std::mt19937_64& rng, const RandomTorusOptions& opts) {
  auto draw = [&rng](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  SkewElement out = torus.zero();
  for (int t = 0; t < opts.terms; ++t) {
    Exponents a, b;
    const int base = opts.modulus > 0 ? opts.step * draw(0, opts.modulus / opts.step - 1) : 0;
    for (int i = 1; i <= torus.n(); ++i) {
      a[i] = opts.modulus > 0 ? base + opts.modulus * draw(opts.x_min, opts.x_max) : draw(opts.x_min, opts.x_max);
      b[i] = draw(opts.y_min, opts.y_max);
    }
    int c = draw(1, opts.coef_bound) * (draw(0, 1) ? 1 : -1);
    out += torus.monomial(a, b, Scalar(c) * Scalar::q(draw(-opts.q_bound, opts.q_bound)));
  }
  return out;
}

SkewElement psi_map(const SkewElement& a, int k, const AlgebraSpec& spec) {
  if (k < 1 || k >= spec.n()) throw std::out_of_range("psi needs 1 <= k < n");
  check_torus(a, spec.row(k));
  const VarLayout target = spec.layout();
  SubstitutionMap map;
  for (int i = 1; i <= spec.row(k); ++i) map[i] = {Scalar(1), target.slot(k, i)};
  SkewElement out(target, a.qpower(), a.mutation());
  for (const auto& [u, c] : a.terms()) {
    DeltaMonomial v;
    for (int i = 1; i <= spec.row(k); ++i) v.u[target.slot(k, i)] = u.u[i];
    out += SkewElement::term(out, v, monomial_substitute(c, map));
  }
  return out;
}

namespace {

CheckRecord psi_record(const AlgebraSpec& spec, std::string id, const SkewElement& residue) {
  CheckRecord c;
  c.suite = "psi-equivariance";
  c.spec = spec.to_string();
  c.check_id = std::move(id);
  c.status = residue.is_zero() ? Status::pass : Status::fail;
  if (!residue.is_zero()) c.witness = residue.to_string();
  return c;
}

std::string idx(int k, int i) { return "[" + std::to_string(k) + "," + std::to_string(i) + "]"; }

}  // namespace

Report psi_iso_check(int k, const AlgebraSpec& spec) {
  if (k < 1 || k >= spec.n()) throw std::out_of_range("psi needs 1 <= k < n");
  const int r = spec.row(k);
  const QuantumTorus torus(r);
  auto psi = [&](const SkewElement& a) { return psi_map(a, k, spec); };
  const SkewElement one = psi(torus.one());
  const RatFunc q(Scalar::q());
  const std::string pre = "k=" + std::to_string(k) + "/";
  Report out;
  for (int i = 1; i <= r; ++i) {
    const SkewElement xi = psi(torus.x(i)), yi = psi(torus.y(i));
    out.push_back(psi_record(spec, pre + "x-inverse[" + std::to_string(i) + "]", xi * psi(torus.x(i, -1)) - one));
    out.push_back(psi_record(spec, pre + "y-inverse[" + std::to_string(i) + "]", yi * psi(torus.y(i, -1)) - one));
    for (int j = 1; j <= r; ++j) {
      const SkewElement xj = psi(torus.x(j)), yj = psi(torus.y(j));
      const RatFunc twist = i == j ? q : RatFunc(1);
      out.push_back(psi_record(spec, pre + "yx" + idx(i, j), yi * xj - twist * (xj * yi)));
      out.push_back(psi_record(spec, pre + "hom-yx" + idx(i, j), psi(torus.y(i) * torus.x(j)) - yi * xj));
      if (i < j) {
        out.push_back(psi_record(spec, pre + "xx" + idx(i, j), commutator(xi, xj)));
        out.push_back(psi_record(spec, pre + "yy" + idx(i, j), commutator(yi, yj)));
      }
    }
  }
  const auto gens = generating_set(spec.m, spec.p, r);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const ProductGroupElement g = ProductGroupElement::embed(spec, k, gens[j]);
    for (int i = 1; i <= r; ++i) {
      const std::vector<std::pair<std::string, SkewElement>> probes{
          {"x", torus.x(i)}, {"x^-1", torus.x(i, -1)}, {"y", torus.y(i)}, {"y^-1", torus.y(i, -1)}};
      for (const auto& [name, a] : probes)
        out.push_back(psi_record(spec, pre + "equivariant/g[" + std::to_string(j + 1) + "]/" + name + "[" + std::to_string(i) + "]",
                                 psi(qtorus_act(gens[j], a)) - act_on_skew(g, psi(a))));
    }
  }
  return out;
}

std::vector<int> WeylFieldParams::exponents() const {
  std::vector<int> e(low_count, low);
  e.insert(e.end(), high_count, high);
  return e;
}

std::string WeylFieldParams::to_string() const {
  return "q^" + std::to_string(low) + " x" + std::to_string(low_count) + ", q^" + std::to_string(high) + " x" +
         std::to_string(high_count) + ", base " + std::to_string(base_degree);
}

WeylFieldParams weyl_parameters_invariants(int m, int p, int n) {
  if (m < 1 || p < 1 || m % p || n < 1) throw std::invalid_argument("weyl_parameters_invariants needs p | m and n >= 1");
  return {.low = m / p, .low_count = 1, .high = m, .high_count = n - 1, .base_degree = 0};
}

WeylFieldParams weyl_parameters_ogz(const AlgebraSpec& spec) {
  const int n = spec.n();
  int sum = 0;
  for (int k = 1; k < n; ++k) sum += spec.row(k);
  return {.low = spec.ratio(), .low_count = n - 1, .high = spec.m, .high_count = sum - (n - 1), .base_degree = spec.row(n)};
}

}  // namespace qogz
