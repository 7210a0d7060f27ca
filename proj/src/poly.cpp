#include "qogz/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "qogz/errors.hpp"

namespace qogz {

bool Exponents::is_zero() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

int Exponents::x_degree() const {
  int d = 0;
  for (int i = 1; i < kMaxVars; ++i) d += e[i];
  return d;
}

std::size_t ExponentsHash::operator()(const Exponents& x) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : x.e) {
    h ^= static_cast<std::size_t>(static_cast<uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

int compare_monomials(const Exponents& a, const Exponents& b) {
  int da = a.x_degree(), db = b.x_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 1; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  if (a[0] != b[0]) return a[0] < b[0] ? -1 : 1;
  return 0;
}

namespace {

bool desc(const Term& x, const Term& y) { return compare_monomials(x.exp, y.exp) > 0; }

}  // namespace

Poly::Poly(Cyclotomic c) {
  if (!c.is_zero()) t_.push_back({Exponents{}, std::move(c)});
}

Poly Poly::monomial(const Exponents& e, Cyclotomic c) {
  Poly p;
  if (!c.is_zero()) p.t_.push_back({e, std::move(c)});
  return p;
}

Poly Poly::variable(int slot, int power) {
  Exponents e;
  e[slot] = power;
  return monomial(e);
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.t_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Poly::canonicalize() {
  std::sort(t_.begin(), t_.end(), desc);
  std::size_t out = 0;
  for (std::size_t i = 0; i < t_.size();) {
    Term acc = std::move(t_[i]);
    std::size_t j = i + 1;
    while (j < t_.size() && t_[j].exp == acc.exp) acc.coef += t_[j++].coef;
    if (!acc.coef.is_zero()) t_[out++] = std::move(acc);
    i = j;
  }
  t_.resize(out);
}

bool Poly::is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].exp.is_zero()); }

bool Poly::is_one() const { return t_.size() == 1 && t_[0].exp.is_zero() && t_[0].coef.is_one(); }

Cyclotomic Poly::constant_value() const {
  for (const auto& t : t_)
    if (t.exp.is_zero()) return t.coef;
  return Cyclotomic(0);
}

int Poly::degree(int slot) const {
  if (t_.empty()) return 0;
  int d = t_[0].exp[slot];
  for (const auto& t : t_) d = std::max(d, t.exp[slot]);
  return d;
}

int Poly::min_degree(int slot) const {
  if (t_.empty()) return 0;
  int d = t_[0].exp[slot];
  for (const auto& t : t_) d = std::min(d, t.exp[slot]);
  return d;
}

Exponents Poly::min_exponents() const {
  Exponents m;
  if (t_.empty()) return m;
  m = t_[0].exp;
  for (const auto& t : t_)
    for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

Exponents Poly::max_exponents() const {
  Exponents m;
  if (t_.empty()) return m;
  m = t_[0].exp;
  for (const auto& t : t_)
    for (int i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], t.exp[i]);
  return m;
}

bool Poly::is_polynomial() const {
  for (const auto& t : t_)
    for (auto x : t.exp.e)
      if (x < 0) return false;
  return true;
}

uint32_t Poly::used_vars() const {
  uint32_t mask = 0;
  for (const auto& t : t_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.exp[i]) mask |= 1u << i;
  return mask;
}

int Poly::nvars() const {
  uint32_t mask = used_vars();
  int n = 0;
  while (mask) {
    ++n;
    mask >>= 1;
  }
  return n;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.t_.empty()) return *this;
  if (t_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(t_.size() + o.t_.size());
  std::size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = compare_monomials(t_[i].exp, o.t_[j].exp);
    if (c > 0) {
      out.push_back(std::move(t_[i++]));
    } else if (c < 0) {
      out.push_back(o.t_[j++]);
    } else {
      Term t = std::move(t_[i++]);
      t.coef += o.t_[j++].coef;
      if (!t.coef.is_zero()) out.push_back(std::move(t));
    }
  }
  for (; i < t_.size(); ++i) out.push_back(std::move(t_[i]));
  for (; j < o.t_.size(); ++j) out.push_back(o.t_[j]);
  t_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.coef = -t.coef;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return Poly();
  if (a.t_.size() == 1 || b.t_.size() == 1) {
    // The monomial order is compatible with multiplication.
    const Poly& mono = a.t_.size() == 1 ? a : b;
    const Poly& other = a.t_.size() == 1 ? b : a;
    Poly r;
    r.t_.reserve(other.t_.size());
    const Term& m = mono.t_[0];
    for (const auto& t : other.t_) {
      Cyclotomic c = t.coef * m.coef;
      if (!c.is_zero()) r.t_.push_back({t.exp + m.exp, std::move(c)});
    }
    return r;
  }
  std::unordered_map<Exponents, Cyclotomic, ExponentsHash> acc;
  acc.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_) {
    for (const auto& y : b.t_) {
      Exponents e = x.exp + y.exp;
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(e, x.coef * y.coef);
      } else {
        it->second += x.coef * y.coef;
      }
    }
  }
  Poly r;
  r.t_.reserve(acc.size());
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.t_.push_back({e, std::move(c)});
  std::sort(r.t_.begin(), r.t_.end(), desc);
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].exp != b.t_[i].exp || a.t_[i].coef != b.t_[i].coef) return false;
  return true;
}

Poly Poly::scaled(const Cyclotomic& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.t_) t.coef *= c;
  return r;
}

Poly Poly::shifted(const Exponents& e) const {
  Poly r = *this;
  for (auto& t : r.t_) t.exp += e;
  return r;
}

Exponents Poly::strip_monomial() {
  Exponents m = min_exponents();
  if (!m.is_zero())
    for (auto& t : t_) t.exp -= m;
  return m;
}

std::vector<Poly> Poly::coefficients_in(int v) const {
  std::vector<std::vector<Term>> buckets(std::max(degree(v), 0) + 1);
  for (const auto& t : t_) {
    Term s = t;
    s.exp[v] = 0;
    buckets.at(t.exp[v]).push_back(std::move(s));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(const std::vector<Poly>& coeffs, int v) {
  std::vector<Term> all;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& t : coeffs[d].t_) {
      Term s = t;
      s.exp[v] += static_cast<int32_t>(d);
      all.push_back(std::move(s));
    }
  }
  return from_terms(std::move(all));
}

Poly Poly::map_terms(const std::function<void(Term&)>& f) const {
  std::vector<Term> out = t_;
  for (auto& t : out) f(t);
  return from_terms(std::move(out));
}

Poly Poly::map_terms_ordered(const std::function<void(Term&)>& f) const {
  Poly r = *this;
  for (auto& t : r.t_) f(t);
  return r;
}

std::string Poly::debug_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i) os << " + ";
    os << "(" << t_[i].coef.to_string() << ")";
    for (int v = 0; v < kMaxVars; ++v)
      if (t_[i].exp[v]) os << "*v" << v << "^" << t_[i].exp[v];
  }
  return os.str();
}

Poly pow(const Poly& a, int k) {
  if (k < 0) {
    if (!a.is_monomial()) throw std::invalid_argument("negative power of a non-monomial polynomial");
    const Term& t = a.leading();
    Exponents e;
    for (int i = 0; i < kMaxVars; ++i) e[i] = t.exp[i] * k;
    Cyclotomic c = t.coef.inverse();
    Cyclotomic r(1);
    for (int i = 0; i < -k; ++i) r *= c;
    return Poly::monomial(e, r);
  }
  Poly result(1);
  Poly base = a;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly make_monic(const Poly& a) {
  if (a.is_zero() || a.leading().coef.is_one()) return a;
  return a.scaled(a.leading().coef.inverse());
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_monomial()) {
    const Term& m = b.leading();
    Exponents neg;
    neg -= m.exp;
    return a.shifted(neg).scaled(m.coef.inverse());
  }
  Poly A = a, B = b;
  Exponents ea = A.strip_monomial();
  Exponents eb = B.strip_monomial();
  Exponents da = A.max_exponents(), db = B.max_exponents();
  Exponents bound;
  for (int i = 0; i < kMaxVars; ++i) {
    if (da[i] < db[i]) return std::nullopt;
    bound[i] = da[i] - db[i];
  }
  const Term& lb = B.leading();
  Cyclotomic lb_inv = lb.coef.inverse();
  std::vector<Term> quo;
  Poly r = std::move(A);
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exponents e = lr.exp - lb.exp;
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] < 0 || e[i] > bound[i]) return std::nullopt;
    Cyclotomic c = lr.coef * lb_inv;
    r -= B.shifted(e).scaled(c);
    quo.push_back({e, std::move(c)});
  }
  Poly q = Poly::from_terms(std::move(quo));
  return q.shifted(ea - eb);
}

Poly pseudo_remainder(const Poly& a, const Poly& b, int v) {
  std::vector<Poly> A = a.coefficients_in(v);
  std::vector<Poly> B = b.coefficients_in(v);
  while (!A.empty() && A.back().is_zero()) A.pop_back();
  while (!B.empty() && B.back().is_zero()) B.pop_back();
  if (B.empty()) throw DivisionByZero("pseudo-remainder by zero");
  const Poly& lb = B.back();
  while (A.size() >= B.size()) {
    Poly la = A.back();
    std::size_t shift = A.size() - B.size();
    for (auto& c : A) c = c * lb;
    for (std::size_t j = 0; j < B.size(); ++j) A[j + shift] -= la * B[j];
    while (!A.empty() && A.back().is_zero()) A.pop_back();
  }
  return Poly::from_coefficients(A, v);
}

namespace {

Poly gcd_core(Poly a, Poly b);

// gcd of `seed` with every coefficient of a in slot v.
Poly content_with(const Poly& a, int v, Poly seed) {
  std::vector<Poly> cs = a.coefficients_in(v);
  std::sort(cs.begin(), cs.end(), [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
  Poly g = std::move(seed);
  for (auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : gcd_core(std::move(g), c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly content(const Poly& a, int v) { return content_with(a, v, Poly()); }

Poly primitive_part(const Poly& a, int v) {
  Poly c = content(a, v);
  if (c.is_constant()) return make_monic(a);
  return make_monic(*divide_exact(a, c));
}

Poly gcd_core(Poly a, Poly b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  Exponents ma = a.strip_monomial();
  Exponents mb = b.strip_monomial();
  Exponents gm;
  for (int i = 0; i < kMaxVars; ++i) gm[i] = std::min(ma[i], mb[i]);
  Poly mono = Poly::monomial(gm);
  if (a.is_constant() || b.is_constant()) return mono;

  const uint32_t ua = a.used_vars(), ub = b.used_vars();
  if (ua & ~ub) {
    int v = __builtin_ctz(ua & ~ub);
    return mono * content_with(a, v, std::move(b));
  }
  if (ub & ~ua) {
    int v = __builtin_ctz(ub & ~ua);
    return mono * content_with(b, v, std::move(a));
  }

  if (b.size() > a.size()) std::swap(a, b);
  if (auto q = divide_exact(a, b)) return mono * make_monic(b);

  int best = -1, best_deg = 0;
  for (int v = 0; v < kMaxVars; ++v) {
    if (!(ua >> v & 1)) continue;
    int d = std::max(a.degree(v), b.degree(v));
    if (best < 0 || d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  const int v = best;
  Poly ca = content(a, v), cb = content(b, v);
  Poly c = gcd_core(ca, cb);
  Poly pa = ca.is_constant() ? make_monic(a) : make_monic(*divide_exact(a, ca));
  Poly pb = cb.is_constant() ? make_monic(b) : make_monic(*divide_exact(b, cb));
  if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
  Poly g;
  while (true) {
    Poly r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree(v) == 0) {
      g = Poly(1);
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r, v);
  }
  return make_monic(mono * c * g);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) return Poly();
  Poly g = gcd_core(a, b);
  g.strip_monomial();
  return make_monic(g);
}

}  // namespace qogz
