#include "qogz/ogz.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace qogz {

namespace {

void check_row(int k, const AlgebraSpec& spec) {
  if (k < 1 || k > spec.n() - 1)
    throw std::out_of_range("row " + std::to_string(k) + " outside [1, n-1] for " + spec.to_string());
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

std::string sign_char(int sign) { return sign > 0 ? "+" : "-"; }

LaurentPoly xvar(const VarLayout& layout, VarIndex v, int power = 1) { return LaurentPoly::variable(layout, v, power); }

CheckRecord record(const std::string& suite, const AlgebraSpec& spec, std::string id, bool ok, bool asserted,
                   const std::string& residue) {
  CheckRecord c;
  c.suite = suite;
  c.spec = spec.to_string();
  c.check_id = std::move(id);
  if (asserted) {
    c.status = ok ? Status::pass : Status::fail;
    if (!ok) c.witness = residue;
  } else {
    c.status = Status::report;
    c.witness = ok ? "holds" : "residue " + residue;
  }
  return c;
}

std::string short_label(int row, int j) { return "g[" + std::to_string(row) + "," + std::to_string(j) + "]"; }

struct LabeledGenerator {
  std::string label;
  ProductGroupElement g;
};

std::vector<LabeledGenerator> labeled_generators(const AlgebraSpec& spec) {
  std::vector<LabeledGenerator> out;
  for (int k = 1; k <= spec.n(); ++k) {
    auto gens = generating_set(spec.m, spec.p, spec.row(k));
    for (std::size_t j = 0; j < gens.size(); ++j)
      out.push_back({short_label(k, static_cast<int>(j) + 1), ProductGroupElement::embed(spec, k, gens[j])});
  }
  return out;
}

}  // namespace

RatFunc build_B(VarIndex u, VarIndex v, const AlgebraSpec& spec) {
  if (u == v) throw std::invalid_argument("build_B needs distinct variables");
  const VarLayout layout = spec.layout();
  const int h = spec.ratio();
  LaurentPoly t = xvar(layout, u) * xvar(layout, v, -1);
  LaurentPoly num = t.pow(spec.m - h) - t.pow(-h);
  Scalar den = Scalar::q(-h) * (Scalar::q(spec.m) - 1);
  return RatFunc(LaurentPoly(den.inverse()) * num);
}

RatFunc build_A(int k, int i, int sign, const AlgebraSpec& spec, const OgzOptions& opts) {
  check_row(k, spec);
  check_sign(sign);
  if (i < 1 || i > spec.row(k)) throw std::out_of_range("column " + std::to_string(i) + " outside row " + std::to_string(k));
  const VarLayout layout = spec.layout();
  const int kk = k + sign;
  const int h = spec.ratio();
  RatFunc a(-sign);
  if (!opts.drop_prefactor) a *= RatFunc(xvar(layout, {k, i}, -h * (spec.row(kk) - spec.row(k))));
  for (int j = 1; j <= spec.row(kk); ++j) a *= build_B({kk, j}, {k, i}, spec);
  RatFunc den(1);
  for (int j = 1; j <= spec.row(k); ++j)
    if (j != i) den *= build_B({k, j}, {k, i}, spec);
  return a / den;
}

SkewElement build_X(int k, int sign, const AlgebraSpec& spec, const OgzOptions& opts) {
  check_row(k, spec);
  check_sign(sign);
  const VarLayout layout = spec.layout();
  SkewElement x(layout, 1, opts.mutation);
  for (int i = 1; i <= spec.row(k); ++i)
    x += SkewElement::right_term(x, DeltaMonomial::unit(layout, {k, i}, sign), build_A(k, i, sign, spec, opts));
  return x;
}

OgzGenerators build_generators(const AlgebraSpec& spec, const OgzOptions& opts) {
  OgzGenerators g;
  for (int k = 1; k < spec.n(); ++k) {
    g.X_plus.push_back(build_X(k, 1, spec, opts));
    g.X_minus.push_back(build_X(k, -1, spec, opts));
  }
  g.gammas = gamma_generators(spec);
  return g;
}

SkewElement cartan_commutator(int k, const AlgebraSpec& spec, const OgzOptions& opts) {
  return commutator(build_X(k, 1, spec, opts), build_X(k, -1, spec, opts));
}

Report verify_invariance(const AlgebraSpec& spec, const OgzOptions& opts) {
  const std::string suite = "invariance";
  const VarLayout layout = spec.layout();
  Report out;
  auto gens = labeled_generators(spec);
  for (int k = 1; k < spec.n(); ++k) {
    for (int sign : {1, -1}) {
      SkewElement x = build_X(k, sign, spec, opts);
      std::vector<RatFunc> a;
      for (int i = 1; i <= spec.row(k); ++i) a.push_back(build_A(k, i, sign, spec, opts));
      const std::string tag = std::to_string(k) + "," + sign_char(sign);
      for (const auto& [label, g] : gens) {
        SkewElement gx = act_on_skew(g, x);
        bool ok = gx == x;
        out.push_back(record(suite, spec, "X[" + tag + "]/" + label, ok, true,
                             ok ? "" : g.to_string() + ": g(X) - X = " + (gx - x).to_string()));
        for (int i = 1; i <= spec.row(k); ++i) {
          RatFunc ga = act_on_poly(g, a[i - 1], layout);
          const RatFunc& target = a[g.row(k).sigma(i) - 1];
          bool ok_a = ga == target;
          out.push_back(record(suite, spec, "A[" + std::to_string(k) + "," + std::to_string(i) + "," + sign_char(sign) + "]/" + label,
                               ok_a, true, ok_a ? "" : g.to_string() + ": " + (ga - target).to_string(layout)));
        }
      }
    }
  }
  return out;
}

Report verify_galois_support(const AlgebraSpec& spec, const OgzOptions& opts) {
  const std::string suite = "galois-support";
  const VarLayout layout = spec.layout();
  Report out;
  std::set<DeltaMonomial> all, expected;
  for (int k = 1; k < spec.n(); ++k) {
    for (int sign : {1, -1}) {
      std::set<DeltaMonomial> want;
      for (int i = 1; i <= spec.row(k); ++i) want.insert(DeltaMonomial::unit(layout, {k, i}, sign));
      auto supp = skew_support(build_X(k, sign, spec, opts));
      std::set<DeltaMonomial> got(supp.begin(), supp.end());
      std::string shown;
      for (const auto& d : got) shown += (shown.empty() ? "" : ", ") + d.to_string(layout);
      out.push_back(record(suite, spec, "support-X[" + std::to_string(k) + "," + sign_char(sign) + "]", got == want, true,
                           "support {" + shown + "}"));
      all.insert(got.begin(), got.end());
      expected.insert(want.begin(), want.end());
    }
  }
  out.push_back(record(suite, spec, "support-union", all == expected, true, "union differs from the +-delta set"));
  Tristate gen = monoid_generates(std::vector<DeltaMonomial>(all.begin(), all.end()), layout, opts.search_radius);
  CheckRecord c = record(suite, spec, "monoid-generates-M", gen == Tristate::yes, true, "monoid_generates = " + to_string(gen));
  if (gen == Tristate::unknown) c.status = Status::unknown;
  out.push_back(c);
  return out;
}

Report verify_serre_and_cross(const AlgebraSpec& spec, const OgzOptions& opts) {
  const std::string suite = "gl-relations";
  const bool asserted = spec.is_gl_type();
  Report out;
  OgzGenerators gens = build_generators(spec, opts);
  const int n = spec.n();
  auto X = [&](int k, int sign) -> const SkewElement& { return sign > 0 ? gens.X_plus[k - 1] : gens.X_minus[k - 1]; };
  const RatFunc two(mp_q_number(2, spec.m, spec.p));
  for (int k = 1; k < n; ++k) {
    SkewElement c = commutator(X(k, 1), X(k, -1));
    bool ok = true;
    for (const auto& [u, coef] : c.terms())
      if (!u.is_identity()) ok = false;
    out.push_back(record(suite, spec, "cartan-support[" + std::to_string(k) + "]", ok, asserted, c.to_string()));
  }
  for (int k = 1; k < n; ++k) {
    for (int l = 1; l < n; ++l) {
      if (k == l) continue;
      const std::string kl = std::to_string(k) + "," + std::to_string(l);
      SkewElement c = commutator(X(k, 1), X(l, -1));
      out.push_back(record(suite, spec, "cross[" + kl + "]", c.is_zero(), asserted, c.to_string()));
      for (int sign : {1, -1}) {
        const SkewElement& a = X(k, sign);
        const SkewElement& b = X(l, sign);
        if (std::abs(k - l) == 1) {
          SkewElement aa = a * a;
          SkewElement s = aa * b - two * (a * b * a) + b * aa;
          out.push_back(record(suite, spec, "serre[" + kl + "," + sign_char(sign) + "]", s.is_zero(), asserted, s.to_string()));
        } else if (k < l) {
          SkewElement c2 = commutator(a, b);
          out.push_back(record(suite, spec, "far-commute[" + kl + "," + sign_char(sign) + "]", c2.is_zero(), asserted,
                               c2.to_string()));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- Heisenberg

namespace {

// Square roots of w of the form r * zeta_m^j q^e with r rational.
std::vector<Scalar> square_roots(const Scalar& w, int m) {
  std::vector<Scalar> out;
  auto mono = w.as_monomial();
  if (!mono || mono->second % 2) return out;
  for (int j = 0; j < std::max(m, 1); ++j) {
    Cyclotomic t = mono->first * Cyclotomic::zeta(m, -2 * j);
    if (!t.is_rational()) continue;
    mpq_class r = t.rational_part();
    if (r <= 0) continue;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) continue;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
    Scalar s = Scalar(Cyclotomic(mpq_class(a, b)) * Cyclotomic::zeta(m, j)) * Scalar::q(mono->second / 2);
    out.push_back(s);
    out.push_back(-s);
    break;
  }
  return out;
}

// v = a*b1 + b*b2 over the integers, for a 2-dimensional lattice.
std::optional<std::pair<int, int>> solve2(std::pair<int, int> v, std::pair<int, int> b1, std::pair<int, int> b2) {
  long det = static_cast<long>(b1.first) * b2.second - static_cast<long>(b1.second) * b2.first;
  if (det == 0) return std::nullopt;
  long an = static_cast<long>(v.first) * b2.second - static_cast<long>(v.second) * b2.first;
  long bn = static_cast<long>(b1.first) * v.second - static_cast<long>(b1.second) * v.first;
  if (an % det || bn % det) return std::nullopt;
  return std::make_pair(static_cast<int>(an / det), static_cast<int>(bn / det));
}

struct HeisenbergContext {
  AlgebraSpec spec;
  VarLayout layout;
  SkewElement like;
  SkewElement Xp, Xm;
  int s11, s21;

  SkewElement mono(int a, int b, const Scalar& c = Scalar(1)) const {
    Exponents e;
    e[s11] = a;
    e[s21] = b;
    return SkewElement::scalar(like, RatFunc(LaurentPoly::monomial(e, c)));
  }
  SkewElement power(const SkewElement& x, const SkewElement& x_inv, int k) const {
    SkewElement r = SkewElement::scalar(like, RatFunc(1));
    for (int i = 0; i < std::abs(k); ++i) r = r * (k > 0 ? x : x_inv);
    return r;
  }
};

// Is w a nonzero scalar multiple of target?
bool proportional(const SkewElement& w, const SkewElement& target) {
  if (target.is_zero() || w.size() != target.size()) return false;
  const auto& [u, c] = *target.terms().begin();
  RatFunc ratio = w.coefficient(u) / c;
  auto lp = ratio.as_laurent();
  if (!lp || lp->term_count() != 1 || !lp->terms().front().first.is_zero()) return false;
  return ratio * target == w;
}

struct HeisenbergChecks {
  std::vector<std::pair<std::string, SkewElement>> residues;
  bool generation = false;
  std::string generation_note;
  bool ok() const {
    return generation && std::all_of(residues.begin(), residues.end(), [](const auto& r) { return r.second.is_zero(); });
  }
};

HeisenbergChecks check_solution(const HeisenbergContext& ctx, const HeisenbergSolution& s, HeisenbergPresentation pres) {
  HeisenbergChecks out;
  const SkewElement one = SkewElement::scalar(ctx.like, RatFunc(1));
  const RatFunc q(Scalar::q()), qi(Scalar::q(-1)), qq(Scalar::q() - Scalar::q(-1));
  const bool xy_first = pres == HeisenbergPresentation::xy_form;
  const SkewElement first = xy_first ? s.X * s.Y : s.Y * s.X;
  const SkewElement second = xy_first ? s.Y * s.X : s.X * s.Y;
  out.residues.emplace_back("K*K^-1", s.K * s.K_inv - one);
  out.residues.emplace_back("K^-1*K", s.K_inv * s.K - one);
  out.residues.emplace_back(xy_first ? "XY" : "YX", qq * first - (s.K - s.K_inv));
  out.residues.emplace_back(xy_first ? "YX" : "XY", qq * second - (q * s.K - qi * s.K_inv));
  out.residues.emplace_back("KXK^-1", s.K * s.X * s.K_inv - q * s.X);
  out.residues.emplace_back("KYK^-1", s.K * s.Y * s.K_inv - qi * s.Y);
  out.residues.emplace_back("central-L/X", commutator(s.L, s.X));
  out.residues.emplace_back("central-L/Y", commutator(s.L, s.Y));
  out.residues.emplace_back("central-L/K", commutator(s.L, s.K));

  // Original generators: X_1^+-, gamma_11^+-1 = x11^{+-h}, gamma_21^+-1 = x21^{+-h}.
  const int h = ctx.spec.ratio();
  const std::pair<int, int> nu{s.mu_k[ctx.s11], s.mu_k[ctx.s21]}, ell{0, h};
  const SkewElement L_inv = ctx.mono(0, -h);
  auto word = [&](std::pair<int, int> ab) { return ctx.power(s.K, s.K_inv, ab.first) * ctx.power(s.L, L_inv, ab.second); };
  bool ok = true;
  std::string note;
  auto express = [&](const std::string& name, std::pair<int, int> v, const SkewElement& prefix, const SkewElement& target) {
    auto ab = solve2(v, nu, ell);
    if (!ab) {
      ok = false;
      note += name + " not reachable; ";
      return;
    }
    if (!proportional(prefix * word(*ab), target)) {
      ok = false;
      note += name + " word mismatch; ";
    }
  };
  express("gamma11", {h, 0}, one, ctx.mono(h, 0));
  express("gamma11^-1", {-h, 0}, one, ctx.mono(-h, 0));
  express("X1+", {-s.mu_x[ctx.s11], -s.mu_x[ctx.s21]}, s.X, ctx.Xp);
  express("X1-", {-s.mu_y[ctx.s11], -s.mu_y[ctx.s21]}, s.Y, ctx.Xm);
  // conversely the new generators are words in the original ones when their
  // monomials lie in the gamma exponent lattice (h Z)^2
  for (const auto& [name, e] : {std::pair<std::string, Exponents>{"K", s.mu_k}, {"X^", s.mu_x}, {"Y^", s.mu_y}})
    if (e[ctx.s11] % h || e[ctx.s21] % h) {
      ok = false;
      note += name + " monomial outside the gamma lattice; ";
    }
  out.generation = ok;
  out.generation_note = note;
  return out;
}

HeisenbergContext make_context(const AlgebraSpec& spec, const OgzOptions& opts) {
  if (spec.r != std::vector<int>{1, 1}) throw std::invalid_argument("the Heisenberg search needs r = (1,1)");
  VarLayout layout = spec.layout();
  SkewElement like(layout, 1, opts.mutation);
  return {spec, layout, like, build_X(1, 1, spec, opts), build_X(1, -1, spec, opts), layout.slot(1, 1), layout.slot(2, 1)};
}

std::string presentation_name(HeisenbergPresentation p) {
  return p == HeisenbergPresentation::yx_form ? "yx-form" : "xy-form";
}

}  // namespace

std::optional<HeisenbergSolution> heisenberg_search(const AlgebraSpec& spec, HeisenbergPresentation pres,
                                                    const OgzOptions& opts) {
  const HeisenbergContext ctx = make_context(spec, opts);
  const bool xy_first = pres == HeisenbergPresentation::xy_form;
  const int bound = 2 * spec.m;
  std::vector<std::pair<int, int>> box;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b) box.emplace_back(a, b);
  std::stable_sort(box.begin(), box.end(), [](auto x, auto y) {
    return std::abs(x.first) + std::abs(x.second) < std::abs(y.first) + std::abs(y.second);
  });
  const RatFunc qq(Scalar::q() - Scalar::q(-1));
  // The product equal to (K - K^-1)/(q - q^-1) depends on mu_x + mu_y only up
  // to a q-power, so its two-term shape is screened on the sum first.
  SkewElement base = xy_first ? ctx.Xp * ctx.Xm : ctx.Xm * ctx.Xp;
  if (base.size() != 1 || !base.terms().begin()->first.is_identity()) return std::nullopt;
  const RatFunc base_coef = base.terms().begin()->second * qq;
  auto two_inverse_terms = [&](const RatFunc& f) -> std::optional<std::vector<std::pair<Exponents, Scalar>>> {
    auto lp = f.as_laurent();
    if (!lp) return std::nullopt;
    auto t = lp->terms();
    if (t.size() != 2 || !(t[0].first + t[1].first).is_zero()) return std::nullopt;
    return t;
  };
  for (const auto& m1 : box) {
    for (const auto& m2 : box) {
      Exponents sum;
      sum[ctx.s11] = m1.first + m2.first;
      sum[ctx.s21] = m1.second + m2.second;
      if (!two_inverse_terms(base_coef * RatFunc(LaurentPoly::monomial(sum, Scalar(1))))) continue;
      SkewElement X0 = ctx.Xp * ctx.mono(m1.first, m1.second);
      SkewElement Y0 = ctx.Xm * ctx.mono(m2.first, m2.second);
      SkewElement P = xy_first ? X0 * Y0 : Y0 * X0;
      if (P.size() != 1 || !P.terms().begin()->first.is_identity()) continue;
      auto terms = two_inverse_terms(P.terms().begin()->second * qq);
      if (!terms) continue;
      for (int pick = 0; pick < 2; ++pick) {
        const auto& [ek, a] = (*terms)[pick];
        const Scalar& b = (*terms)[1 - pick].second;
        // s a = c_k and s b = -c_k^-1, so s^2 = -1/(a b)
        for (const Scalar& s : square_roots(-(a * b).inverse(), spec.m)) {
          HeisenbergSolution sol{.mu_x = {}, .mu_y = {}, .mu_k = ek, .c_x = s, .c_y = Scalar(1), .c_k = s * a,
                                 .X = ctx.like, .Y = ctx.like, .K = ctx.like, .K_inv = ctx.like, .L = ctx.like};
          sol.mu_x[ctx.s11] = m1.first;
          sol.mu_x[ctx.s21] = m1.second;
          sol.mu_y[ctx.s11] = m2.first;
          sol.mu_y[ctx.s21] = m2.second;
          sol.X = ctx.Xp * ctx.mono(m1.first, m1.second, s);
          sol.Y = Y0;
          sol.K = SkewElement::scalar(ctx.like, RatFunc(LaurentPoly::monomial(ek, sol.c_k)));
          sol.K_inv = SkewElement::scalar(ctx.like, RatFunc(LaurentPoly::monomial(Exponents{} - ek, sol.c_k.inverse())));
          sol.L = ctx.mono(0, spec.ratio());
          if (check_solution(ctx, sol, pres).ok()) return sol;
        }
      }
    }
  }
  return std::nullopt;
}

Report verify_heisenberg(const AlgebraSpec& spec, const OgzOptions& opts) {
  const std::string suite = "heisenberg";
  const bool asserted = spec.m == 2 && spec.p == 2;
  Report out;
  const HeisenbergContext ctx = make_context(spec, opts);
  const VarLayout& layout = ctx.layout;
  auto show = [&](const Exponents& e, const Scalar& c) { return LaurentPoly::monomial(e, c).to_string(layout); };
  for (auto pres : {HeisenbergPresentation::yx_form, HeisenbergPresentation::xy_form}) {
    const std::string tag = presentation_name(pres) + "/";
    auto sol = heisenberg_search(spec, pres, opts);
    if (!sol) {
      std::string why = "no solution with exponents in [-2m,2m]";
      if (pres == HeisenbergPresentation::yx_form)
        why += "; X(YX) = (XY)X and KX = qXK force (q - q^-1)(K + K^-1)X = 0";
      out.push_back(record(suite, spec, tag + "search", false, asserted, why));
      continue;
    }
    CheckRecord found = record(suite, spec, tag + "search", true, asserted, "");
    found.witness = "K=" + show(sol->mu_k, sol->c_k) + " X=X1+*" + show(sol->mu_x, sol->c_x) + " Y=X1-*" + show(sol->mu_y, sol->c_y);
    out.push_back(found);
    HeisenbergChecks checks = check_solution(ctx, *sol, pres);
    for (const auto& [id, r] : checks.residues) out.push_back(record(suite, spec, tag + id, r.is_zero(), asserted, r.to_string()));
    out.push_back(record(suite, spec, tag + "generation", checks.generation, asserted, checks.generation_note));
  }
  return out;
}

}  // namespace qogz
