#include "qogz/skew.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qogz/errors.hpp"

namespace qogz {

DeltaMonomial DeltaMonomial::unit(const VarLayout& layout, VarIndex v, int power) {
  DeltaMonomial d;
  d.u[layout.slot(v)] = power;
  return d;
}

DeltaMonomial DeltaMonomial::operator-() const {
  DeltaMonomial d;
  d.u -= u;
  return d;
}

std::string DeltaMonomial::to_string(const VarLayout& layout) const {
  std::string out;
  for (int s = 1; s < kMaxVars; ++s) {
    if (!u[s]) continue;
    if (!out.empty()) out += "*";
    if (s <= layout.size()) {
      VarIndex v = layout.index_of(s);
      out += "d[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]^" + std::to_string(u[s]);
    } else {
      out += "d#" + std::to_string(s) + "^" + std::to_string(u[s]);
    }
  }
  return out.empty() ? "1" : out;
}

SkewElement::SkewElement(VarLayout layout, int qpower, ShiftMutation mutation)
    : layout_(std::move(layout)), qpower_(qpower), mutation_(mutation) {}

SkewElement SkewElement::term(const SkewElement& like, const DeltaMonomial& u, const RatFunc& c) {
  SkewElement r(like.layout_, like.qpower_, like.mutation_);
  r.add_term(u, c);
  return r;
}

SkewElement SkewElement::right_term(const SkewElement& like, const DeltaMonomial& u, const RatFunc& c) {
  return term(like, u, like.shift(u, c));
}

SkewElement SkewElement::scalar(const SkewElement& like, const RatFunc& c) { return term(like, DeltaMonomial{}, c); }

SkewElement SkewElement::delta(const SkewElement& like, VarIndex v, int power) {
  return term(like, DeltaMonomial::unit(like.layout_, v, power), RatFunc(1));
}

RatFunc SkewElement::coefficient(const DeltaMonomial& u) const {
  auto it = t_.find(u);
  return it == t_.end() ? RatFunc() : it->second;
}

RatFunc SkewElement::shift(const DeltaMonomial& u, const RatFunc& c) const {
  switch (mutation_) {
    case ShiftMutation::none:
      return c.q_shifted(u.u, qpower_);
    case ShiftMutation::flipped_sign:
      return c.q_shifted(u.u, -qpower_);
    case ShiftMutation::inverse_sign_bug: {
      Exponents a;
      for (int s = 1; s < kMaxVars; ++s) a[s] = std::abs(u.u[s]);
      return c.q_shifted(a, qpower_);
    }
  }
  return c;
}

void SkewElement::check_compatible(const SkewElement& o) const {
  if (!(layout_ == o.layout_) || qpower_ != o.qpower_ || mutation_ != o.mutation_)
    throw ParameterMismatch("skew elements over different algebras");
}

void SkewElement::add_term(const DeltaMonomial& u, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(u, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  check_compatible(o);
  for (const auto& [u, c] : o.t_) add_term(u, c);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  check_compatible(o);
  for (const auto& [u, c] : o.t_) add_term(u, -c);
  return *this;
}

SkewElement SkewElement::operator-() const {
  SkewElement r = *this;
  for (auto& [u, c] : r.t_) c = -c;
  return r;
}

// (c phi)(d psi) = c shift_phi(d) phi psi
SkewElement operator*(const SkewElement& a, const SkewElement& b) {
  a.check_compatible(b);
  SkewElement r(a.layout_, a.qpower_, a.mutation_);
  for (const auto& [phi, c] : a.t_)
    for (const auto& [psi, d] : b.t_) r.add_term(phi + psi, c * a.shift(phi, d));
  return r;
}

SkewElement operator*(const RatFunc& c, const SkewElement& a) {
  SkewElement r(a.layout_, a.qpower_, a.mutation_);
  if (c.is_zero()) return r;
  for (const auto& [u, d] : a.t_) r.t_.emplace(u, c * d);
  return r;
}

std::string SkewElement::to_string() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [u, c] : t_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string(layout_) + ")";
    if (!u.is_identity()) out += "*" + u.to_string(layout_);
  }
  return out;
}

SkewElement skew_mul(const SkewElement& a, const SkewElement& b) { return a * b; }

std::vector<DeltaMonomial> skew_support(const SkewElement& a) {
  std::vector<DeltaMonomial> out;
  for (const auto& [u, c] : a.terms()) out.push_back(u);
  return out;
}

SkewElement act_on_skew(const ProductGroupElement& g, const SkewElement& a) {
  const VarLayout& layout = a.layout();
  SubstitutionMap map = action_map(g, layout);
  SkewElement r(layout, a.qpower(), a.mutation());
  for (const auto& [u, c] : a.terms()) {
    DeltaMonomial v;
    for (int s = 1; s <= layout.size(); ++s)
      if (u.u[s]) v.u[map.at(s).second] += u.u[s];
    r += SkewElement::term(a, v, monomial_substitute(c, map));
  }
  return r;
}

SkewElement commutator(const SkewElement& a, const SkewElement& b) { return a * b - b * a; }

std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::yes:
      return "true";
    case Tristate::no:
      return "false";
    case Tristate::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// Row-style Hermite reduction; true iff the rows span Z^dim.
bool spans_lattice(const std::vector<std::vector<long>>& S, int dim) {
  std::vector<std::vector<mpz_class>> rows;
  for (const auto& s : S) rows.emplace_back(s.begin(), s.end());
  std::size_t top = 0;
  for (int j = 0; j < dim; ++j) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i)
        if (rows[i][j] != 0 && (best == rows.size() || abs(rows[i][j]) < abs(rows[best][j]))) best = i;
      if (best == rows.size()) return false;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][j] == 0) continue;
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), rows[i][j].get_mpz_t(), rows[top][j].get_mpz_t());
        for (int c = j; c < dim; ++c) rows[i][c] -= f * rows[top][c];
        if (rows[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (abs(rows[top][j]) != 1) return false;
    ++top;
  }
  return true;
}

long dot(const std::vector<long>& a, const std::vector<long>& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// A nonzero functional that is nonnegative on S confines the monoid to a half-space.
bool half_space_certificate(const std::vector<std::vector<long>>& S, int dim) {
  auto works = [&](const std::vector<long>& w) {
    for (const auto& s : S)
      if (dot(w, s) < 0) return false;
    return true;
  };
  std::vector<std::vector<long>> candidates;
  for (int j = 0; j < dim; ++j)
    for (long sign : {1L, -1L}) {
      std::vector<long> w(dim, 0);
      w[j] = sign;
      candidates.push_back(w);
    }
  std::vector<long> total(dim, 0);
  for (const auto& s : S)
    for (int j = 0; j < dim; ++j) total[j] += s[j];
  candidates.push_back(total);
  if (dim <= 8) {
    std::vector<long> w(dim, -1);
    while (true) {
      candidates.push_back(w);
      int j = 0;
      while (j < dim && ++w[j] == 2) w[j++] = -1;
      if (j == dim) break;
    }
  }
  for (const auto& w : candidates) {
    bool nonzero = std::any_of(w.begin(), w.end(), [](long v) { return v != 0; });
    if (nonzero && works(w)) return true;
  }
  return false;
}

}  // namespace

Tristate monoid_generates(const std::vector<std::vector<long>>& S, int dim, int radius) {
  for (const auto& s : S)
    if (static_cast<int>(s.size()) != dim) throw std::invalid_argument("monoid_generates: element of wrong dimension");
  if (dim == 0) return Tristate::yes;
  if (!spans_lattice(S, dim)) return Tristate::no;
  std::set<std::vector<long>> elems(S.begin(), S.end());
  std::vector<std::vector<long>> missing;
  for (const auto& s : S) {
    std::vector<long> neg(s);
    for (auto& v : neg) v = -v;
    if (!elems.count(neg)) missing.push_back(neg);
  }
  if (missing.empty()) return Tristate::yes;
  std::set<std::vector<long>> reached(S.begin(), S.end());
  std::vector<std::vector<long>> frontier(reached.begin(), reached.end());
  for (int step = 1; step < radius && !frontier.empty(); ++step) {
    std::vector<std::vector<long>> next;
    for (const auto& x : frontier)
      for (const auto& s : S) {
        std::vector<long> y(x);
        for (int j = 0; j < dim; ++j) y[j] += s[j];
        if (reached.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  if (std::all_of(missing.begin(), missing.end(), [&](const auto& v) { return reached.count(v) > 0; })) return Tristate::yes;
  if (half_space_certificate(S, dim)) return Tristate::no;
  return Tristate::unknown;
}

Tristate monoid_generates(const std::vector<DeltaMonomial>& S, const VarLayout& layout, int radius) {
  const int last = layout.rows();
  const int dim = layout.size() - layout.row_length(last);
  std::vector<std::vector<long>> vecs;
  for (const auto& d : S) {
    std::vector<long> v(dim);
    for (int s = 1; s < kMaxVars; ++s) {
      if (!d.u[s]) continue;
      if (s > dim) throw std::invalid_argument("monoid_generates: " + d.to_string(layout) + " is not in M");
      v[s - 1] = d.u[s];
    }
    vecs.push_back(std::move(v));
  }
  return monoid_generates(vecs, dim, radius);
}

}  // namespace qogz
