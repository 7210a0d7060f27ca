#include "qogz/laurent.hpp"

#include <stdexcept>

#include "qogz/detail/expr_parser.hpp"
#include "qogz/detail/render.hpp"
#include "qogz/errors.hpp"

namespace qogz {

// ---------------------------------------------------------------- layout

VarLayout::VarLayout(std::vector<int> row_lengths) : r_(std::move(row_lengths)) {
  offset_.reserve(r_.size());
  for (int len : r_) {
    if (len < 1) throw std::invalid_argument("row lengths must be positive");
    offset_.push_back(total_);
    total_ += len;
  }
  if (total_ > kMaxVars - 1)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars - 1) + " variables are supported");
}

int VarLayout::row_length(int k) const {
  if (k < 1 || k > rows()) throw std::out_of_range("row " + std::to_string(k) + " out of range");
  return r_[k - 1];
}

bool VarLayout::contains(VarIndex v) const {
  return v.row >= 1 && v.row <= rows() && v.col >= 1 && v.col <= r_[v.row - 1];
}

int VarLayout::slot(int k, int i) const {
  if (!contains({k, i}))
    throw std::out_of_range("variable x[" + std::to_string(k) + "," + std::to_string(i) + "] out of range");
  return 1 + offset_[k - 1] + (i - 1);
}

VarIndex VarLayout::index_of(int slot) const {
  if (slot < 1 || slot > total_) throw std::out_of_range("slot " + std::to_string(slot) + " out of range");
  int k = 0;
  while (k + 1 < rows() && offset_[k + 1] < slot) ++k;
  return {k + 1, slot - offset_[k]};
}

// ---------------------------------------------------------------- fractions

namespace detail {

namespace {

void make_den_monic(Frac& f) {
  const Cyclotomic& lc = f.den.leading().coef;
  if (lc.is_one()) return;
  Cyclotomic inv = lc.inverse();
  f.num = f.num.scaled(inv);
  f.den = f.den.scaled(inv);
}

Poly exact(const Poly& a, const Poly& b) {
  if (b.is_one()) return a;
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("inexact division in fraction arithmetic");
  return *std::move(q);
}

}  // namespace

Frac frac_make(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero("fraction with zero denominator");
  Frac f;
  if (num.is_zero()) return f;
  Poly n = num, d = den;
  Exponents en = n.strip_monomial();
  Exponents ed = d.strip_monomial();
  if (!d.is_constant()) {
    Poly g = gcd(n, d);
    if (!g.is_one()) {
      n = exact(n, g);
      d = exact(d, g);
    }
  }
  f.num = n.shifted(en - ed);
  f.den = std::move(d);
  make_den_monic(f);
  return f;
}

void frac_fix_den(Frac& f) {
  Exponents e = f.den.strip_monomial();
  if (!e.is_zero()) {
    Exponents neg;
    neg -= e;
    f.num = f.num.shifted(neg);
  }
  make_den_monic(f);
}

Frac frac_add(const Frac& a, const Frac& b) {
  if (a.num.is_zero()) return b;
  if (b.num.is_zero()) return a;
  if (a.den.is_one() && b.den.is_one()) return {a.num + b.num, Poly(1)};
  if (a.den == b.den) {
    Poly t = a.num + b.num;
    if (t.is_zero()) return {};
    Poly h = gcd(t, a.den);
    return {exact(t, h), exact(a.den, h)};
  }
  Poly g = (a.den.is_one() || b.den.is_one()) ? Poly(1) : gcd(a.den, b.den);
  if (g.is_one()) {
    Poly t = a.num * b.den + b.num * a.den;
    if (t.is_zero()) return {};
    return {std::move(t), a.den * b.den};
  }
  // Henrici: only factors of g can cancel.
  Poly bp = exact(a.den, g);
  Poly dp = exact(b.den, g);
  Poly t = a.num * dp + b.num * bp;
  if (t.is_zero()) return {};
  Poly h = gcd(t, g);
  Frac f{exact(t, h), exact(a.den * dp, h)};
  make_den_monic(f);
  return f;
}

Frac frac_mul(const Frac& a, const Frac& b) {
  if (a.num.is_zero() || b.num.is_zero()) return {};
  if (a.den.is_one() && b.den.is_one()) return {a.num * b.num, Poly(1)};
  Poly n1 = a.num, d1 = a.den, n2 = b.num, d2 = b.den;
  if (!d2.is_one()) {
    Poly g = gcd(n1, d2);
    if (!g.is_one()) {
      n1 = exact(n1, g);
      d2 = exact(d2, g);
    }
  }
  if (!d1.is_one()) {
    Poly g = gcd(n2, d1);
    if (!g.is_one()) {
      n2 = exact(n2, g);
      d1 = exact(d1, g);
    }
  }
  Frac f{n1 * n2, d1 * d2};
  make_den_monic(f);
  return f;
}

Frac frac_inv(const Frac& a) {
  if (a.num.is_zero()) throw DivisionByZero("inverse of zero fraction");
  Frac f{a.den, a.num};
  frac_fix_den(f);
  return f;
}

Frac frac_q_shift(const Frac& f, const Exponents& u, int qpower) {
  bool trivial = true;
  for (int s = 1; s < kMaxVars; ++s)
    if (u[s]) trivial = false;
  if (trivial) return f;
  auto shift = [&](Term& t) {
    long d = 0;
    for (int s = 1; s < kMaxVars; ++s) d += static_cast<long>(u[s]) * t.exp[s];
    t.exp[0] -= static_cast<int32_t>(qpower * d);
  };
  Frac r{f.num.map_terms_ordered(shift), f.den.map_terms_ordered(shift)};
  frac_fix_den(r);
  return r;
}

}  // namespace detail

namespace {

detail::Frac scalar_frac(const Scalar& c) {
  detail::Frac f{c.numerator(), c.denominator()};
  detail::frac_fix_den(f);
  return f;
}

bool x_free(const Poly& p) { return (p.used_vars() & ~1u) == 0; }

Exponents x_part(Exponents e) {
  e[0] = 0;
  return e;
}

Exponents q_part(const Exponents& e) {
  Exponents r;
  r[0] = e[0];
  return r;
}

// Group the terms of p by x monomial; p's order keeps groups contiguous.
std::vector<std::pair<Exponents, Poly>> group_by_x(const Poly& p) {
  std::vector<std::pair<Exponents, Poly>> out;
  std::vector<Term> cur;
  Exponents key;
  for (const auto& t : p.terms()) {
    Exponents k = x_part(t.exp);
    if (!cur.empty() && k != key) {
      out.emplace_back(key, Poly::from_terms(std::move(cur)));
      cur.clear();
    }
    key = k;
    cur.push_back({q_part(t.exp), t.coef});
  }
  if (!cur.empty()) out.emplace_back(key, Poly::from_terms(std::move(cur)));
  return out;
}

Cyclotomic cyclo_pow(const Cyclotomic& c, int e) {
  Cyclotomic base = e < 0 ? c.inverse() : c;
  Cyclotomic r(1);
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

}  // namespace

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Scalar& c) : f_(scalar_frac(c)) {}

LaurentPoly LaurentPoly::from_frac(detail::Frac f) {
  if (!x_free(f.den)) throw std::invalid_argument("Laurent polynomial denominator must be free of x");
  LaurentPoly p;
  p.f_ = std::move(f);
  return p;
}

LaurentPoly LaurentPoly::variable(int slot, int power) {
  if (slot < 1 || slot >= kMaxVars) throw std::out_of_range("variable slot out of range");
  LaurentPoly p;
  p.f_.num = Poly::variable(slot, power);
  return p;
}

LaurentPoly LaurentPoly::variable(const VarLayout& layout, VarIndex v, int power) {
  return variable(layout.slot(v), power);
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const Scalar& c) {
  LaurentPoly p(c);
  Exponents x = x_part(e);
  p.f_.num = p.f_.num.shifted(x);
  return p;
}

std::vector<std::pair<Exponents, Scalar>> LaurentPoly::terms() const {
  std::vector<std::pair<Exponents, Scalar>> out;
  for (auto& [x, qp] : group_by_x(f_.num)) out.emplace_back(x, Scalar::fraction(qp, f_.den));
  return out;
}

Scalar LaurentPoly::coefficient(const Exponents& x_exps) const {
  Exponents key = x_part(x_exps);
  for (auto& [x, qp] : group_by_x(f_.num))
    if (x == key) return Scalar::fraction(qp, f_.den);
  return Scalar();
}

std::size_t LaurentPoly::term_count() const { return group_by_x(f_.num).size(); }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  f_ = detail::frac_add(f_, o.f_);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  f_ = detail::frac_mul(f_, o.f_);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  r.f_.num = -r.f_.num;
  return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
  if (k < 0) {
    if (term_count() != 1) throw std::invalid_argument("negative power of a Laurent polynomial with several terms");
    return from_frac(detail::frac_inv(f_)).pow(-k);
  }
  LaurentPoly r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string render_x_monomial(const Exponents& e, const VarLayout& layout) {
  std::string out;
  for (int s = 1; s < kMaxVars; ++s) {
    if (!e[s]) continue;
    if (!out.empty()) out += "*";
    if (s <= layout.size()) {
      VarIndex v = layout.index_of(s);
      out += "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]^" + std::to_string(e[s]);
    } else {
      out += "v" + std::to_string(s) + "^" + std::to_string(e[s]);
    }
  }
  return out;
}

std::string LaurentPoly::to_string(const VarLayout& layout) const {
  std::vector<detail::RenderTerm> out;
  for (auto& [x, s] : terms()) {
    detail::RenderTerm rt;
    rt.mono = render_x_monomial(x, layout);
    auto mono = s.as_monomial();
    if (mono && mono->first.weight() == 1) {
      Cyclotomic c = mono->first;
      for (const auto& v : c.coeffs())
        if (v < 0) rt.negative = true;
      if (rt.negative) c = -c;
      Exponents qe;
      qe[0] = mono->second;
      rt.coef = render_q_poly(Poly::monomial(qe, c));
    } else {
      rt.coef = s.to_string();
      rt.coef_compound = true;
    }
    out.push_back(std::move(rt));
  }
  return detail::join_terms(out);
}

// ---------------------------------------------------------------- RatFunc

RatFunc::RatFunc(const Scalar& c) : f_(scalar_frac(c)) {}

RatFunc RatFunc::from_frac(detail::Frac f) {
  RatFunc r;
  r.f_ = std::move(f);
  return r;
}

RatFunc RatFunc::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  return from_frac(detail::frac_mul(num.frac(), detail::frac_inv(den.frac())));
}

RatFunc frac_normalize(const LaurentPoly& num, const LaurentPoly& den) { return RatFunc::fraction(num, den); }

LaurentPoly RatFunc::numerator() const {
  if (x_free(f_.den)) return LaurentPoly::from_frac(f_);
  Poly lead = group_by_x(f_.den).front().second;
  return LaurentPoly::from_frac(detail::frac_make(f_.num, lead));
}

LaurentPoly RatFunc::denominator() const {
  if (x_free(f_.den)) return LaurentPoly(1);
  auto groups = group_by_x(f_.den);
  const Poly& lead = groups.front().second;
  return LaurentPoly::from_frac(detail::frac_make(f_.den, lead));
}

std::optional<LaurentPoly> RatFunc::as_laurent() const {
  if (!x_free(f_.den)) return std::nullopt;
  return LaurentPoly::from_frac(f_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  f_ = detail::frac_add(f_, o.f_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  f_ = detail::frac_mul(f_, o.f_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  f_ = detail::frac_mul(f_, detail::frac_inv(o.f_));
  return *this;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.f_.num = -r.f_.num;
  return r;
}

RatFunc RatFunc::inverse() const { return from_frac(detail::frac_inv(f_)); }

RatFunc RatFunc::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RatFunc r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

RatFunc RatFunc::q_shifted(const Exponents& u, int qpower) const {
  return from_frac(detail::frac_q_shift(f_, u, qpower));
}

std::string RatFunc::to_string(const VarLayout& layout) const {
  if (auto lp = as_laurent()) return lp->to_string(layout);
  auto wrap = [&](const LaurentPoly& p) { return "(" + p.to_string(layout) + ")"; };
  return wrap(numerator()) + "/" + wrap(denominator());
}

RatFunc RatFunc::parse(std::string_view text, const VarLayout& layout, int m) {
  auto atom = [&layout, m](std::string_view s, std::size_t& pos) -> RatFunc {
    char c = s[pos];
    if (c == 'q') {
      ++pos;
      return RatFunc(Scalar::q());
    }
    if (c == 'z') {
      ++pos;
      return RatFunc(Scalar::zeta(m));
    }
    if (c == 'x') {
      ++pos;
      int k = 0, i = 0;
      auto expect = [&](char ch) {
        if (pos >= s.size() || s[pos] != ch)
          throw ParseError(std::string("expected '") + ch + "' in \"" + std::string(s) + "\"");
        ++pos;
      };
      auto number = [&]() {
        int v = 0;
        bool any = false;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          v = v * 10 + (s[pos++] - '0');
          any = true;
        }
        if (!any) throw ParseError("expected index in \"" + std::string(s) + "\"");
        return v;
      };
      expect('[');
      k = number();
      expect(',');
      i = number();
      expect(']');
      if (!layout.contains({k, i})) throw ParseError("variable x[" + std::to_string(k) + "," + std::to_string(i) + "] outside the layout");
      return RatFunc(LaurentPoly::variable(layout, {k, i}));
    }
    throw ParseError("unknown symbol '" + std::string(1, c) + "' in \"" + std::string(s) + "\"");
  };
  detail::ExprParser<RatFunc> parser(text, atom, [](long v) { return RatFunc(v); });
  return parser.parse();
}

// ---------------------------------------------------------------- operations

LaurentPoly elementary_symmetric(int d, const std::vector<LaurentPoly>& args) {
  if (d < 0 || d > static_cast<int>(args.size()))
    throw std::out_of_range("elementary_symmetric: degree " + std::to_string(d) + " out of range");
  std::vector<LaurentPoly> e(d + 1);
  e[0] = LaurentPoly(1);
  for (std::size_t i = 0; i < args.size(); ++i)
    for (int j = std::min<int>(d, static_cast<int>(i) + 1); j >= 1; --j) e[j] += e[j - 1] * args[i];
  return e[d];
}

namespace {

void check_mapped(const Poly& p, const SubstitutionMap& map) {
  uint32_t used = p.used_vars() & ~1u;
  for (int s = 1; s < kMaxVars; ++s)
    if ((used >> s & 1) && !map.count(s))
      throw std::invalid_argument("monomial_substitute: unmapped variable slot " + std::to_string(s));
}

struct UnitImage {
  Cyclotomic c;
  int qexp = 0;
  int target = 0;
};

// Unit coefficients and injective targets make the map an automorphism of
// the Laurent ring, so coprimality survives and only the denominator's
// monomial factor and leading coefficient need fixing.
std::optional<std::map<int, UnitImage>> unit_images(const SubstitutionMap& map, uint32_t used) {
  std::map<int, UnitImage> out;
  uint32_t targets = 0;
  for (const auto& [slot, img] : map) {
    if (!(used >> slot & 1)) continue;
    auto mono = img.first.as_monomial();
    if (!mono) return std::nullopt;
    if (img.second < 1 || img.second >= kMaxVars) throw std::out_of_range("substitution target out of range");
    if (targets >> img.second & 1) return std::nullopt;
    targets |= 1u << img.second;
    out[slot] = {mono->first, mono->second, img.second};
  }
  return out;
}

Poly apply_units(const Poly& p, const std::map<int, UnitImage>& img) {
  return p.map_terms([&](Term& t) {
    Exponents e;
    e[0] = t.exp[0];
    for (const auto& [s, u] : img) {
      int k = t.exp[s];
      if (!k) continue;
      e[u.target] += k;
      e[0] += u.qexp * k;
      if (!u.c.is_one()) t.coef *= cyclo_pow(u.c, k);
    }
    t.exp = e;
  });
}

// General path: Scalar arithmetic per term.
LaurentPoly apply_general(const Poly& p, const SubstitutionMap& map) {
  LaurentPoly out;
  for (const auto& t : p.terms()) {
    Exponents e;
    Scalar c = Scalar(t.coef) * Scalar::q(t.exp[0]);
    for (int s = 1; s < kMaxVars; ++s) {
      int k = t.exp[s];
      if (!k) continue;
      const auto& [coef, target] = map.at(s);
      if (target < 1 || target >= kMaxVars) throw std::out_of_range("substitution target out of range");
      e[target] += k;
      c *= coef.pow(k);
    }
    out += LaurentPoly::monomial(e, c);
  }
  return out;
}

detail::Frac substitute_frac(const detail::Frac& f, const SubstitutionMap& map) {
  check_mapped(f.num, map);
  check_mapped(f.den, map);
  uint32_t used = (f.num.used_vars() | f.den.used_vars()) & ~1u;
  if (auto img = unit_images(map, used)) {
    detail::Frac r{apply_units(f.num, *img), apply_units(f.den, *img)};
    detail::frac_fix_den(r);
    return r;
  }
  LaurentPoly n = apply_general(f.num, map);
  LaurentPoly d = apply_general(f.den, map);
  return detail::frac_mul(n.frac(), detail::frac_inv(d.frac()));
}

}  // namespace

LaurentPoly monomial_substitute(const LaurentPoly& f, const SubstitutionMap& map) {
  return LaurentPoly::from_frac(substitute_frac(f.frac(), map));
}

RatFunc monomial_substitute(const RatFunc& f, const SubstitutionMap& map) {
  return RatFunc::from_frac(substitute_frac(f.frac(), map));
}

}  // namespace qogz
