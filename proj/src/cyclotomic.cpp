#include "qogz/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qogz/errors.hpp"

namespace qogz {

namespace {

using QPoly = std::vector<mpq_class>;  // dense, constant term first

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials, divisor monic.
std::vector<mpz_class> div_monic(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<mpz_class> quo(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    quo[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quo;
}

// Reduce p modulo the monic integer polynomial phi.
void reduce_mod(QPoly& p, const std::vector<mpz_class>& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > d;) {
    if (p[i] == 0) continue;
    mpq_class c = p[i];
    for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= c * phi[j];
  }
  p.resize(d);
}

// Quotient and remainder over Q.
void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  rem = a;
  trim(rem);
  const std::size_t db = b.size() - 1;
  if (rem.size() < b.size()) {
    quo.clear();
    return;
  }
  quo.assign(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    mpq_class c = rem[i] / b.back();
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  rem.resize(db);
  trim(rem);
  trim(quo);
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<mpz_class>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  std::vector<mpz_class> num(m + 1);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    num = div_monic(std::move(num), cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, std::move(num)).first->second;
}

Cyclotomic Cyclotomic::from_powers(const std::vector<mpq_class>& coeffs, int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  QPoly p = coeffs;
  if (p.empty()) p.push_back(0);
  const auto& phi = cyclotomic_polynomial(m);
  if (p.size() < phi.size() - 1) p.resize(phi.size() - 1);
  reduce_mod(p, phi);
  Cyclotomic r(m, std::move(p));
  r.normalize_order();
  return r;
}

Cyclotomic Cyclotomic::zeta(int m, long k) {
  if (m < 1) throw std::invalid_argument("cyclotomic order must be positive");
  long e = ((k % m) + m) % m;
  std::vector<mpq_class> p(e + 1);
  p[e] = 1;
  return from_powers(p, m);
}

Cyclotomic cyclo_reduce(const std::vector<long>& poly_in_zeta, int m) {
  std::vector<mpq_class> p(poly_in_zeta.begin(), poly_in_zeta.end());
  return Cyclotomic::from_powers(p, m);
}

void Cyclotomic::normalize_order() {
  if (m_ <= 2) {
    m_ = 1;
    c_.resize(1);
    return;
  }
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return;
  m_ = 1;
  c_.resize(1);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return m_ == 1 && c_[0] == 1; }

bool Cyclotomic::is_rational() const { return m_ == 1; }

int Cyclotomic::weight() const {
  int w = 0;
  for (const auto& c : c_) w += (c != 0);
  return w;
}

Cyclotomic Cyclotomic::promoted(int m) const {
  if (m == m_) return *this;
  if (m_ != 1) throw ParameterMismatch("cannot promote Q(zeta_" + std::to_string(m_) + ") element to order " + std::to_string(m));
  std::vector<mpq_class> p(euler_phi(m));
  p[0] = c_[0];
  return Cyclotomic(m, std::move(p));
}

void Cyclotomic::align_with(Cyclotomic& o) {
  if (m_ == o.m_) return;
  if (m_ == 1) {
    *this = promoted(o.m_);
  } else if (o.m_ == 1) {
    o = o.promoted(m_);
  } else {
    throw ParameterMismatch("mixed cyclotomic orders " + std::to_string(m_) + " and " + std::to_string(o.m_));
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (m_ == 1 && o.m_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  Cyclotomic b = o;
  align_with(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  normalize_order();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (m_ == 1 && o.m_ == 1) {
    c_[0] -= o.c_[0];
    return *this;
  }
  Cyclotomic b = o;
  align_with(b);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  normalize_order();
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (m_ == 1 && o.m_ == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  if (o.m_ == 1) {
    for (auto& c : c_) c *= o.c_[0];
    normalize_order();
    return *this;
  }
  if (m_ == 1) {
    mpq_class s = c_[0];
    *this = o;
    for (auto& c : c_) c *= s;
    normalize_order();
    return *this;
  }
  if (m_ != o.m_)
    throw ParameterMismatch("mixed cyclotomic orders " + std::to_string(m_) + " and " + std::to_string(o.m_));
  QPoly p = mul(c_, o.c_);
  reduce_mod(p, cyclotomic_polynomial(m_));
  c_ = std::move(p);
  normalize_order();
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (m_ == 1) return Cyclotomic(1 / c_[0]);
  // Extended Euclid: track s with s * a == r (mod Phi).
  const auto& phi_z = cyclotomic_polynomial(m_);
  QPoly phi(phi_z.begin(), phi_z.end());
  QPoly r0 = phi, r1 = c_;
  trim(r1);
  QPoly s0, s1{1};
  while (r1.size() > 1) {
    QPoly quo, rem;
    divmod(r0, r1, quo, rem);
    QPoly s2 = sub(s0, mul(quo, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi is irreducible.
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return from_powers(s1, m_);
}

void Cyclotomic::mul_zeta_power(int m, long k) {
  *this *= zeta(m, k);
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.m_ == b.m_ && a.c_ == b.c_;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const mpq_class& c = c_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = static_cast<std::size_t>(m_);
  for (const auto& c : c_) {
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(c.get_num_mpz_t()));
    h = h * 1000003u ^ static_cast<std::size_t>(mpz_get_si(c.get_den_mpz_t()));
  }
  return h;
}

}  // namespace qogz
