// Acceptance criteria 1-9: one PASS/FAIL line each, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qogz/noether.hpp"
#include "qogz/ogz.hpp"
#include "qogz/reflection.hpp"

using namespace qogz;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const std::vector<std::vector<int>> kSignatures{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 2, 3}, {2, 2, 2}};
const std::vector<std::pair<int, int>> kParams{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 3}, {4, 2}};

std::vector<AlgebraSpec> grid() {
  std::vector<AlgebraSpec> out;
  for (const auto& r : kSignatures)
    for (auto [m, p] : kParams) out.emplace_back(r, m, p);
  return out;
}

const CheckRecord* first_failure(const Report& r) {
  for (const auto& c : r)
    if (c.status == Status::fail || c.status == Status::unknown) return &c;
  return nullptr;
}

void note(Outcome& o, const std::string& s) {
  if (o.detail.size() < 1500) o.detail += (o.detail.empty() ? "" : "; ") + s;
}

Outcome criterion1() {
  Outcome o;
  int checks = 0;
  for (const auto& spec : grid()) {
    Report r = verify_invariance(spec);
    checks += static_cast<int>(r.size());
    if (auto f = first_failure(r)) {
      o.ok = false;
      note(o, spec.to_string() + " " + f->check_id);
    }
  }
  if (o.ok) o.detail = std::to_string(grid().size()) + " specs, " + std::to_string(checks) + " generator checks";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& spec : grid()) {
    // independent expectation: exactly the +-delta^{ki} for k < n
    std::set<DeltaMonomial> want;
    const VarLayout layout = spec.layout();
    for (int k = 1; k < spec.n(); ++k)
      for (int i = 1; i <= spec.row(k); ++i) {
        want.insert(DeltaMonomial::unit(layout, {k, i}, 1));
        want.insert(DeltaMonomial::unit(layout, {k, i}, -1));
      }
    std::set<DeltaMonomial> got;
    for (const auto& X : {build_generators(spec).X_plus, build_generators(spec).X_minus})
      for (const auto& x : X)
        for (const auto& u : skew_support(x)) got.insert(u);
    std::vector<DeltaMonomial> S(got.begin(), got.end());
    const Tristate gen = monoid_generates(S, layout);
    const bool verified = all_passed(verify_galois_support(spec));
    if (got != want || gen != Tristate::yes || !verified) {
      o.ok = false;
      note(o, spec.to_string() + " monoid_generates=" + to_string(gen));
    }
  }
  if (o.ok) o.detail = std::to_string(grid().size()) + " specs, supports exact, monoid_generates true";
  return o;
}

Outcome criterion3() {
  Outcome o;
  int failed = 0;
  std::string passed;
  for (const auto& r : std::vector<std::vector<int>>{{1, 2}, {1, 2, 3}})
    for (auto [m, p] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {1, 1}, {3, 3}}) {
      AlgebraSpec spec(r, m, p);
      Report rep = verify_serre_and_cross(spec);
      std::vector<std::string> bad;
      for (const auto& c : rep)
        if (c.status == Status::fail) bad.push_back(c.check_id);
      if (bad.empty()) {
        passed += (passed.empty() ? "" : ", ") + spec.to_string();
        continue;
      }
      ++failed;
      if (spec.n() >= 3) {
        const SkewElement x1p = build_X(1, 1, spec), x2m = build_X(2, -1, spec);
        const int e = 2 * spec.ratio() - m;
        const bool twisted = x1p * x2m == RatFunc(Scalar::q(e)) * (x2m * x1p);
        note(o, spec.to_string() + (twisted ? " X1+ X2- = q^" : " X1+ X2- != q^") + std::to_string(e) + " X2- X1+");
      }
      std::string ids;
      for (const auto& b : bad) ids += (ids.empty() ? "" : " ") + b;
      note(o, spec.to_string() + " fails {" + ids + "}");
    }
  o.ok = failed == 0;
  if (!o.ok)
    note(o, "the twist exponent 2m/p - m is zero only when p = 2; passing: " + passed);
  else
    o.detail = "Serre, cross and Cartan support exact on 8 specs";
  return o;
}

Outcome criterion4() {
  Outcome o;
  AlgebraSpec spec({1, 1}, 2, 2);
  auto yx = heisenberg_search(spec, HeisenbergPresentation::yx_form);
  o.ok = yx.has_value();
  if (o.ok) {
    o.detail = "yx-form relations solved";
    return o;
  }
  o.detail =
      "no solution of YX = (K - K^-1)/(q - q^-1), XY = (qK - q^-1 K^-1)/(q - q^-1), KXK^-1 = qX, KYK^-1 = q^-1 Y: "
      "they imply (q - q^-1)(K + K^-1)X = 0";
  Report both = verify_heisenberg(spec);
  bool xy_ok = true;
  std::string K;
  for (const auto& c : both)
    if (c.check_id.rfind("xy-form/", 0) == 0) {
      xy_ok = xy_ok && c.status == Status::pass;
      if (c.check_id == "xy-form/search") K = c.witness;
    }
  if (xy_ok) note(o, "with XY and YX exchanged every relation, centrality and generation holds: " + K);
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {4, 2, 2}, {3, 3, 2}, {4, 2, 3}}) {
    const auto G = enumerate_group(m, p, n);
    const auto G1 = enumerate_group(m, 1, n);
    const QuantumTorus torus(n);
    std::mt19937_64 rng(1000 + 100 * m + 10 * p + n);
    RandomTorusOptions ropt;
    ropt.modulus = m;
    ropt.step = m / p;
    ropt.x_min = -1;
    ropt.x_max = 1;
    int done = 0, good = 0;
    std::vector<int> nonzero(p, 0);
    while (done < 50) {
      SkewElement f = reynolds_average(random_torus_element(torus, rng, ropt), G);
      if (f.is_zero()) continue;
      ++done;
      bool ok = true;
      for (const auto& g : G) ok = ok && qtorus_act(g, f) == f;
      auto parts = eigenspace_decompose(f, m, p);
      // reconstruction written out here rather than via the library helper
      SkewElement sum = torus.zero();
      for (int k = 0; k < p; ++k) {
        Exponents e;
        for (int i = 1; i <= n; ++i) e[i] = k * (m / p);
        sum += parts[k] * torus.scalar(RatFunc(LaurentPoly::monomial(e)));
        if (!parts[k].is_zero()) ++nonzero[k];
        for (const auto& g : G1) ok = ok && qtorus_act(g, parts[k]) == parts[k];
      }
      ok = ok && sum == f;
      good += ok;
    }
    std::string hist;
    for (int k = 0; k < p; ++k) hist += (k ? "/" : "") + std::to_string(nonzero[k]);
    note(o, "(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ") " + std::to_string(good) +
                "/50 components " + hist);
    if (good != 50) o.ok = false;
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  int checks = 0;
  for (int rk : {1, 2, 3})
    for (auto [m, p] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {3, 3}}) {
      AlgebraSpec spec({rk, 1}, m, p);
      Report r = psi_iso_check(1, spec);
      checks += static_cast<int>(r.size());
      if (auto f = first_failure(r)) {
        o.ok = false;
        note(o, spec.to_string() + " " + f->check_id);
      }
    }
  if (o.ok) o.detail = std::to_string(checks) + " relation and equivariance checks";
  return o;
}

Outcome criterion7() {
  Outcome o;
  struct Case {
    std::string label;
    WeylFieldParams got;
    std::vector<int> exps;
    int base;
  };
  std::vector<Case> cases{
      {"invariants (4,2,3)", weyl_parameters_invariants(4, 2, 3), {2, 4, 4}, 0},
      {"invariants (3,3,1)", weyl_parameters_invariants(3, 3, 1), {1}, 0},
      {"invariants (2,1,2)", weyl_parameters_invariants(2, 1, 2), {2, 2}, 0},
      {"ogz r=(1,2,3) (2,2)", weyl_parameters_ogz(AlgebraSpec({1, 2, 3}, 2, 2)), {1, 1, 2}, 3},
      {"ogz r=(1,1) (4,2)", weyl_parameters_ogz(AlgebraSpec({1, 1}, 4, 2)), {2}, 1},
      {"ogz r=(1,1) (3,1)", weyl_parameters_ogz(AlgebraSpec({1, 1}, 3, 1)), {3}, 1},
      {"ogz r=(3,2) (6,3)", weyl_parameters_ogz(AlgebraSpec({3, 2}, 6, 3)), {2, 6, 6}, 2},
  };
  // gl_n family: n-1 copies of m/p, n(n-1)/2 - (n-1) copies of m, base n
  for (int n : {2, 4, 5}) {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) r[i] = i + 1;
    std::vector<int> exps(n - 1, 2);
    exps.insert(exps.end(), n * (n - 1) / 2 - (n - 1), 4);
    cases.push_back({"ogz gl_" + std::to_string(n) + " (4,2)", weyl_parameters_ogz(AlgebraSpec(r, 4, 2)), exps, n});
  }
  for (const auto& c : cases)
    if (c.got.exponents() != c.exps || c.got.base_degree != c.base) {
      o.ok = false;
      note(o, c.label + " got " + c.got.to_string());
    }
  if (o.ok) o.detail = std::to_string(cases.size()) + " specs";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::set<std::tuple<int, int, int>> cases;
  for (const auto& r : kSignatures)
    for (int n : r)
      for (auto [m, p] : kParams) cases.insert({m, p, n});
  for (auto [m, p, n] : cases) {
    std::uint64_t fact = 1, mn = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int i = 0; i < n; ++i) mn *= m;
    const std::uint64_t want = mn * fact / p;
    const auto all = enumerate_group(m, p, n);
    const auto closure = group_closure(generating_set(m, p, n), m, p, n);
    if (all.size() != want || group_order(m, p, n) != want || closure != all) {
      o.ok = false;
      note(o, "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ") enumerated " +
                  std::to_string(all.size()) + ", closure " + std::to_string(closure.size()) + ", expected " +
                  std::to_string(want));
    }
  }
  if (o.ok) o.detail = std::to_string(cases.size()) + " groups";
  return o;
}

SkewElement random_skew(std::mt19937_64& rng, const SkewElement& like) {
  SkewElement a(like.layout(), like.qpower(), like.mutation());
  const int n = like.layout().size();
  for (int t = 0; t < 2; ++t) {
    DeltaMonomial u;
    Exponents e;
    for (int s = 1; s <= n; ++s) {
      u.u[s] = static_cast<int>(rng() % 3) - 1;
      e[s] = static_cast<int>(rng() % 3) - 1;
    }
    a += SkewElement::term(like, u, RatFunc(LaurentPoly::monomial(e, Scalar(1 + static_cast<long>(rng() % 3)))));
  }
  return a;
}

Outcome criterion9() {
  Outcome o;
  int hits = 0, eligible = 0;
  OgzOptions drop;
  drop.drop_prefactor = true;
  for (const auto& spec : grid()) {
    bool uneven = false;
    for (int k = 1; k < spec.n(); ++k) uneven = uneven || spec.row(k + 1) != spec.row(k);
    if (!uneven) continue;
    ++eligible;
    if (!all_passed(verify_invariance(spec, drop))) ++hits;
  }
  if (hits == 0) o.ok = false;
  note(o, "prefactor removed: invariance fails on " + std::to_string(hits) + "/" + std::to_string(eligible) +
              " specs with r_{k+1} != r_k");

  const VarLayout layout({2, 1});
  std::mt19937_64 rng(9);
  auto assoc_failures = [&](ShiftMutation mut) {
    SkewElement like(layout, 1, mut);
    int bad = 0;
    for (int t = 0; t < 40; ++t) {
      auto a = random_skew(rng, like), b = random_skew(rng, like), c = random_skew(rng, like);
      bad += (a * b) * c != a * (b * c);
    }
    return bad;
  };
  const int clean = assoc_failures(ShiftMutation::none);
  const int bug = assoc_failures(ShiftMutation::inverse_sign_bug);
  if (clean != 0 || bug == 0) o.ok = false;
  note(o, "inverse-shift sign flipped: associativity fails " + std::to_string(bug) + "/40 (unmutated " +
              std::to_string(clean) + "/40)");
  SkewElement flip(layout, 1, ShiftMutation::flipped_sign);
  auto d = SkewElement::delta(flip, {1, 1});
  auto x = SkewElement::scalar(flip, RatFunc(LaurentPoly::variable(layout, {1, 1})));
  const bool relation_broken = d * x != RatFunc(Scalar::q(-1)) * (x * d);
  if (!relation_broken) o.ok = false;
  note(o, std::string("global sign flip: delta x = q^-1 x delta ") + (relation_broken ? "fails" : "holds"));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"invariance", criterion1},           {"galois-support", criterion2}, {"gl-relations", criterion3},
      {"heisenberg", criterion4},           {"noether-step2", criterion5},  {"psi-equivariance", criterion6},
      {"parameters", criterion7},           {"group-combinatorics", criterion8},
      {"mutation-sensitivity", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.ok;
    std::printf("criterion %zu %-20s %s  %.2fs  %s\n", i + 1, criteria[i].first.c_str(), o.ok ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
