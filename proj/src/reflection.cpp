#include "qogz/reflection.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qogz/errors.hpp"

namespace qogz {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

void check_same(const GroupElement& g, const GroupElement& h) {
  if (g.m() != h.m() || g.p() != h.p() || g.n() != h.n())
    throw ParameterMismatch("group elements from different groups: " + g.to_string() + " and " + h.to_string());
}

}  // namespace

GroupElement::GroupElement(std::vector<int> perm, std::vector<long> a, int m, int p) : m_(m), p_(p), perm_(std::move(perm)) {
  if (m < 1 || p < 1 || m % p) throw std::invalid_argument("G(m,p,n) needs p | m");
  const int n = static_cast<int>(perm_.size());
  if (static_cast<int>(a.size()) != n) throw std::invalid_argument("exponent vector length differs from n");
  std::vector<char> seen(n + 1, 0);
  for (int v : perm_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation: " + join(perm_));
    seen[v] = 1;
  }
  long sum = 0;
  a_.reserve(n);
  for (long v : a) {
    long r = ((v % m) + m) % m;
    a_.push_back(static_cast<int>(r));
    sum += r;
  }
  if (sum % p) throw std::invalid_argument("exponent sum not divisible by p: " + to_string());
}

GroupElement GroupElement::identity(int m, int p, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  return GroupElement(std::move(perm), std::vector<long>(n, 0), m, p);
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (perm_[i] != i + 1 || a_[i]) return false;
  return true;
}

std::string GroupElement::to_string() const {
  return "perm=" + join(perm_) + " exps=" + join(a_) + " (" + std::to_string(m_) + "," + std::to_string(p_) + "," +
         std::to_string(n()) + ")";
}

GroupElement group_make(std::vector<int> perm, std::vector<long> a, int m, int p) {
  return GroupElement(std::move(perm), std::move(a), m, p);
}

// (gh)(x_i) = g(zeta^{b_i} x_{tau(i)}) = zeta^{b_i + a_{tau(i)}} x_{sigma(tau(i))}
GroupElement group_mul(const GroupElement& g, const GroupElement& h) {
  check_same(g, h);
  const int n = g.n();
  std::vector<int> perm(n);
  std::vector<long> a(n);
  for (int i = 1; i <= n; ++i) {
    perm[i - 1] = g.sigma(h.sigma(i));
    a[i - 1] = h.exp(i) + g.exp(h.sigma(i));
  }
  return GroupElement(std::move(perm), std::move(a), g.m(), g.p());
}

GroupElement group_inv(const GroupElement& g) {
  const int n = g.n();
  std::vector<int> perm(n);
  std::vector<long> a(n);
  for (int i = 1; i <= n; ++i) {
    perm[g.sigma(i) - 1] = i;
    a[g.sigma(i) - 1] = -g.exp(i);
  }
  return GroupElement(std::move(perm), std::move(a), g.m(), g.p());
}

std::uint64_t group_order(int m, int p, int n) {
  if (m < 1 || p < 1 || m % p || n < 0) throw std::invalid_argument("G(m,p,n) needs p | m");
  long double approx = 1;
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) {
    approx *= static_cast<long double>(m) * (i + 1);
    order *= static_cast<std::uint64_t>(m) * (i + 1);
  }
  if (approx > 1.8e19L) throw SizeLimitExceeded("group order overflows");
  return order / p;
}

std::vector<GroupElement> generating_set(int m, int p, int n) {
  std::vector<GroupElement> gens;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  for (int i = 1; i < n; ++i) {
    auto perm = id;
    std::swap(perm[i - 1], perm[i]);
    gens.emplace_back(perm, std::vector<long>(n, 0), m, p);
  }
  if (p < m && n >= 1) {
    std::vector<long> a(n, 0);
    a[0] = p;
    gens.emplace_back(id, a, m, p);
  }
  if (p > 1 && n >= 2) {
    auto perm = id;
    std::swap(perm[0], perm[1]);
    std::vector<long> a(n, 0);
    a[0] = 1;
    a[1] = -1;
    gens.emplace_back(perm, a, m, p);
  }
  return gens;
}

std::vector<GroupElement> enumerate_group(int m, int p, int n, std::uint64_t max_size) {
  std::uint64_t order = group_order(m, p, n);
  if (order > max_size)
    throw SizeLimitExceeded("|G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) +
                            ")| = " + std::to_string(order) + " exceeds the limit " + std::to_string(max_size));
  std::vector<GroupElement> out;
  out.reserve(order);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    std::vector<long> a(n, 0);
    while (true) {
      long sum = std::accumulate(a.begin(), a.end(), 0L);
      if (sum % p == 0) out.emplace_back(perm, a, m, p);
      int i = 0;
      while (i < n && ++a[i] == m) a[i++] = 0;
      if (i == n) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupElement> group_closure(const std::vector<GroupElement>& gens, int m, int p, int n,
                                        std::uint64_t max_size) {
  std::set<GroupElement> seen{GroupElement::identity(m, p, n)};
  std::vector<GroupElement> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        GroupElement y = g * x;
        if (seen.insert(y).second) {
          if (seen.size() > max_size) throw SizeLimitExceeded("group closure exceeds the size limit");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

ProductGroupElement ProductGroupElement::identity(const AlgebraSpec& spec) {
  ProductGroupElement g;
  for (int k = 1; k <= spec.n(); ++k) g.components.push_back(GroupElement::identity(spec.m, spec.p, spec.row(k)));
  return g;
}

ProductGroupElement ProductGroupElement::embed(const AlgebraSpec& spec, int k, const GroupElement& h) {
  ProductGroupElement g = identity(spec);
  check_same(g.components.at(k - 1), h);
  g.components[k - 1] = h;
  return g;
}

std::string ProductGroupElement::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (components[k].is_identity()) continue;
    if (!s.empty()) s += "; ";
    s += "row " + std::to_string(k + 1) + ": " + components[k].to_string();
  }
  return s.empty() ? "identity" : s;
}

ProductGroupElement operator*(const ProductGroupElement& g, const ProductGroupElement& h) {
  if (g.components.size() != h.components.size()) throw ParameterMismatch("product group elements of different shape");
  ProductGroupElement r;
  for (std::size_t k = 0; k < g.components.size(); ++k) r.components.push_back(g.components[k] * h.components[k]);
  return r;
}

ProductGroupElement group_inv(const ProductGroupElement& g) {
  ProductGroupElement r;
  for (const auto& c : g.components) r.components.push_back(group_inv(c));
  return r;
}

std::vector<ProductGroupElement> generating_set(const AlgebraSpec& spec) {
  std::vector<ProductGroupElement> out;
  for (int k = 1; k <= spec.n(); ++k)
    for (const auto& g : generating_set(spec.m, spec.p, spec.row(k))) out.push_back(ProductGroupElement::embed(spec, k, g));
  return out;
}

SubstitutionMap action_map(const GroupElement& g, const VarLayout& layout, int row) {
  if (row < 1 || row > layout.rows() || layout.row_length(row) != g.n())
    throw std::out_of_range("group element " + g.to_string() + " does not fit row " + std::to_string(row));
  SubstitutionMap map;
  for (int i = 1; i <= g.n(); ++i)
    map[layout.slot(row, i)] = {Scalar::zeta(g.m(), g.exp(i)), layout.slot(row, g.sigma(i))};
  return map;
}

SubstitutionMap action_map(const ProductGroupElement& g, const VarLayout& layout) {
  if (static_cast<int>(g.components.size()) != layout.rows())
    throw std::out_of_range("product group element does not match the layout");
  SubstitutionMap map;
  for (int k = 1; k <= layout.rows(); ++k) map.merge(action_map(g.row(k), layout, k));
  return map;
}

namespace {

// Variables outside the acted-on row are fixed.
SubstitutionMap complete(SubstitutionMap map, const VarLayout& layout) {
  for (int s = 1; s <= layout.size(); ++s) map.try_emplace(s, Scalar(1), s);
  return map;
}

}  // namespace

LaurentPoly act_on_poly(const GroupElement& g, const LaurentPoly& f, const VarLayout& layout, int row) {
  return monomial_substitute(f, complete(action_map(g, layout, row), layout));
}

RatFunc act_on_poly(const GroupElement& g, const RatFunc& f, const VarLayout& layout, int row) {
  return monomial_substitute(f, complete(action_map(g, layout, row), layout));
}

LaurentPoly act_on_poly(const ProductGroupElement& g, const LaurentPoly& f, const VarLayout& layout) {
  return monomial_substitute(f, action_map(g, layout));
}

RatFunc act_on_poly(const ProductGroupElement& g, const RatFunc& f, const VarLayout& layout) {
  return monomial_substitute(f, action_map(g, layout));
}

bool is_invariant(const RatFunc& f, const VarLayout& layout, int m, int p) {
  for (int k = 1; k <= layout.rows(); ++k)
    for (const auto& g : generating_set(m, p, layout.row_length(k)))
      if (act_on_poly(g, f, layout, k) != f) return false;
  return true;
}

std::vector<GammaGenerator> gamma_generators(const AlgebraSpec& spec) {
  const VarLayout layout = spec.layout();
  std::vector<GammaGenerator> out;
  for (int k = 1; k <= spec.n(); ++k) {
    const int rk = spec.row(k);
    std::vector<LaurentPoly> powers;
    LaurentPoly prod(1);
    for (int i = 1; i <= rk; ++i) {
      powers.push_back(LaurentPoly::variable(layout, {k, i}, spec.m));
      prod *= LaurentPoly::variable(layout, {k, i}, spec.ratio());
    }
    auto label = [k](int d) { return "gamma[" + std::to_string(k) + "," + std::to_string(d) + "]"; };
    for (int d = 1; d < rk; ++d) out.push_back({label(d), k, d, 1, elementary_symmetric(d, powers)});
    out.push_back({label(rk), k, rk, 1, prod});
    out.push_back({label(rk) + "^-1", k, rk, -1, prod.pow(-1)});
  }
  return out;
}

std::pair<GroupElement, Scalar> coset_rep_and_epsilon(int m, int p, int n) {
  if (m < 1 || p < 1 || m % p) throw std::invalid_argument("coset representative needs p | m");
  if (p == 1 || n < 1) return {GroupElement::identity(m, 1, n), Scalar(1)};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<long> a(n, 0);
  a[0] = 1;
  GroupElement alpha(perm, a, m, 1);
  long total = std::accumulate(alpha.exps().begin(), alpha.exps().end(), 0L);
  return {alpha, Scalar::zeta(m, total * (m / p))};
}

}  // namespace qogz
