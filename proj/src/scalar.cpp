#include "qogz/scalar.hpp"

#include <stdexcept>

#include "qogz/detail/expr_parser.hpp"
#include "qogz/detail/render.hpp"
#include "qogz/errors.hpp"

namespace qogz {

namespace {

bool only_q(const Poly& p) { return (p.used_vars() & ~1u) == 0; }

Poly q_power(int k) { return Poly::variable(0, k); }

}  // namespace

Scalar Scalar::q(int power) {
  if (power >= 0) {
    Scalar s;
    s.num_ = q_power(power);
    return s;
  }
  Scalar s(1);
  s.den_ = q_power(-power);
  return s;
}

Scalar Scalar::zeta(int m, long k) { return Scalar(Cyclotomic::zeta(m, k)); }

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw DivisionByZero("scalar with zero denominator");
  if (!only_q(num) || !only_q(den)) throw std::invalid_argument("scalar fraction may only involve q");
  Scalar s;
  if (num.is_zero()) return s;
  Poly n = num, d = den;
  int k = n.strip_monomial()[0] - d.strip_monomial()[0];
  Poly g = gcd(n, d);
  if (!g.is_one()) {
    n = *divide_exact(n, g);
    d = *divide_exact(d, g);
  }
  if (k > 0) n = n.shifted(q_power(k).leading().exp);
  if (k < 0) d = d.shifted(q_power(-k).leading().exp);
  Cyclotomic lc = d.leading().coef;
  if (!lc.is_one()) {
    Cyclotomic inv = lc.inverse();
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  s.num_ = std::move(n);
  s.den_ = std::move(d);
  return s;
}

std::optional<std::pair<Cyclotomic, int>> Scalar::as_monomial() const {
  if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
  return std::make_pair(num_.leading().coef, num_.leading().exp[0] - den_.leading().exp[0]);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = fraction(num_ + o.num_, den_);
  return *this = fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero() || o.is_zero()) return *this = Scalar();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  return fraction(den_, num_);
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1), b = *this;
  while (k) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

std::string render_q_poly(const Poly& p) {
  std::vector<detail::RenderTerm> out;
  for (const auto& t : p.terms()) {
    detail::RenderTerm rt;
    int k = t.exp[0];
    if (k == 1) {
      rt.mono = "q";
    } else if (k != 0) {
      rt.mono = "q^" + std::to_string(k);
    }
    Cyclotomic c = t.coef;
    if (c.weight() == 1) {
      bool neg = false;
      for (const auto& x : c.coeffs())
        if (x < 0) neg = true;
      if (neg) {
        rt.negative = true;
        c = -c;
      }
    } else {
      rt.coef_compound = true;
    }
    rt.coef = c.to_string();
    out.push_back(std::move(rt));
  }
  return detail::join_terms(out);
}

std::string Scalar::to_string() const {
  if (den_.is_one()) return render_q_poly(num_);
  auto wrap = [](const Poly& p) {
    std::string s = render_q_poly(p);
    bool simple = p.size() == 1 && p.leading().coef.weight() == 1 && p.leading().coef.rational_part() >= 0;
    return simple ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

Scalar Scalar::parse(std::string_view text, int m) {
  auto atom = [m](std::string_view s, std::size_t& pos) -> Scalar {
    char c = s[pos];
    if (c == 'q') {
      ++pos;
      return Scalar::q();
    }
    if (c == 'z') {
      ++pos;
      return Scalar::zeta(m);
    }
    throw ParseError("unknown symbol '" + std::string(1, c) + "' in scalar \"" + std::string(s) + "\"");
  };
  detail::ExprParser<Scalar> parser(text, atom, [](long v) { return Scalar(v); });
  return parser.parse();
}

Scalar mp_q_number(long x, int m, int p) {
  if (m < 1 || p < 1 || m % p) throw std::invalid_argument("mp_q_number: need p | m");
  if (x == 0) return Scalar();
  const long h = m / p;
  Scalar num = Scalar::q(static_cast<int>(-x * h)) * (Scalar::q(static_cast<int>(x * m)) - Scalar(1));
  Scalar den = Scalar::q(static_cast<int>(-h)) * (Scalar::q(m) - Scalar(1));
  return num / den;
}

}  // namespace qogz
