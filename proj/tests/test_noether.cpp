#include <random>

#include "doctest.h"
#include "qogz/errors.hpp"
#include "qogz/noether.hpp"

using namespace qogz;

TEST_SUITE("noether") {

TEST_CASE("quantum torus relations") {
  for (int s : {1, 3}) {
    QuantumTorus T(3, s);
    const RatFunc qs(Scalar::q(s));
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        CHECK(T.y(i) * T.x(j) == (i == j ? qs : RatFunc(1)) * (T.x(j) * T.y(i)));
        CHECK(commutator(T.x(i), T.x(j)).is_zero());
        CHECK(commutator(T.y(i), T.y(j)).is_zero());
      }
    CHECK(T.y(2) * T.y(2, -1) == T.one());
    CHECK(T.x(2, -1) * T.x(2) == T.one());
  }
  QuantumTorus T(2);
  Exponents a, b;
  a[1] = 2;
  b[2] = -1;
  CHECK(T.monomial(a, b, Scalar(3)) == RatFunc(3) * T.x(1, 2) * T.y(2, -1));
  CHECK(T.to_string(T.x(1) * T.y(2)) == "(x[1,1]^1)*y[2]^1");
  CHECK(T.to_string(T.zero()) == "0");
}

TEST_CASE("group action on the torus") {
  QuantumTorus T(2);
  auto swap = group_make({2, 1}, {0, 0}, 4, 2);
  CHECK(qtorus_act(swap, T.y(1)) == T.y(2));
  auto diag = group_make({1, 2}, {1, 0}, 4, 1);
  CHECK(qtorus_act(diag, T.x(1)) == RatFunc(Scalar::zeta(4)) * T.x(1));
  CHECK(qtorus_act(diag, T.y(1)) == T.y(1));
  const SkewElement rel = T.y(1) * T.x(1) - RatFunc(Scalar::q()) * (T.x(1) * T.y(1));
  CHECK(rel.is_zero());
  for (const auto& g : enumerate_group(4, 2, 2)) {
    CHECK(qtorus_act(g, T.y(1)) * qtorus_act(g, T.x(1)) ==
          RatFunc(Scalar::q()) * (qtorus_act(g, T.x(1)) * qtorus_act(g, T.y(1))));
  }
  std::mt19937_64 rng(5);
  const auto G = enumerate_group(3, 3, 2);
  for (int t = 0; t < 20; ++t) {
    auto a = random_torus_element(T, rng), b = random_torus_element(T, rng);
    const auto& g = G[rng() % G.size()];
    CHECK(qtorus_act(g, a * b) == qtorus_act(g, a) * qtorus_act(g, b));
  }
  CHECK_THROWS_AS(qtorus_act(group_make({1, 2, 3}, {0, 0, 0}, 2, 2), T.x(1)), ParameterMismatch);
}

TEST_CASE("power map") {
  const int m = 3;
  QuantumTorus S(2, m), T(2, 1);
  CHECK(power_map_step1(S.x(1), m) == T.x(1, m));
  CHECK(power_map_step1(S.y(2), m) == T.y(2));
  auto diag = group_make({1, 2}, {1, 0}, m, 1);
  CHECK(qtorus_act(diag, power_map_step1(S.x(1), m)) == T.x(1, m));
  // y1 x1 = q^m x1 y1 is carried to y1 x1^m = q^m x1^m y1
  const RatFunc qm(Scalar::q(m));
  CHECK((S.y(1) * S.x(1) - qm * (S.x(1) * S.y(1))).is_zero());
  CHECK(power_map_step1(S.y(1) * S.x(1), m) == qm * (T.x(1, m) * T.y(1)));
  CHECK(T.y(1) * T.x(1, m) == qm * (T.x(1, m) * T.y(1)));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto a = random_torus_element(S, rng), b = random_torus_element(S, rng);
    CHECK(power_map_step1(a * b, m) == power_map_step1(a, m) * power_map_step1(b, m));
  }
  CHECK(power_map_step1(S.x(1, 2) + S.x(2), m).size() == 1);
  CHECK(power_map_step1(S.x(1, 2) + S.x(2), m) != power_map_step1(S.x(1, 2) + S.x(2, 2), m));
  CHECK(power_map_step1(S.x(1) * S.x(2, -1) + S.x(2), m).terms().begin()->second.as_laurent()->term_count() == 2);
  CHECK_THROWS_AS(power_map_step1(T.x(1), m), ParameterMismatch);
}

TEST_CASE("eigenspace decomposition examples") {
  QuantumTorus T(2);
  auto parts = eigenspace_decompose(T.x(1) * T.x(2), 2, 2);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].is_zero());
  CHECK(parts[1] == T.one());
  parts = eigenspace_decompose(T.x(1, 2) + T.x(2, 2), 2, 2);
  CHECK(parts[0] == T.x(1, 2) + T.x(2, 2));
  CHECK(parts[1].is_zero());
  CHECK(render_decomposition(T, parts) == "(0, (x[1,1]^2 + x[1,2]^2)), (1, 0)");
  for (int p : {1, 2, 3, 6}) {
    auto ones = eigenspace_decompose(T.one(), 6, p);
    REQUIRE(ones.size() == static_cast<std::size_t>(p));
    CHECK(ones[0] == T.one());
    for (int k = 1; k < p; ++k) CHECK(ones[k].is_zero());
  }
  CHECK_THROWS_AS(eigenspace_decompose(T.x(1), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(eigenspace_decompose(T.one(), 4, 3), std::invalid_argument);
}

TEST_CASE("eigenspace decomposition of averaged elements") {
  std::mt19937_64 rng(23);
  for (auto [m, p, n] : std::vector<std::tuple<int, int, int>>{{2, 2, 2}, {6, 3, 2}, {4, 4, 2}}) {
    QuantumTorus T(n);
    const auto G = enumerate_group(m, p, n);
    RandomTorusOptions opt;
    opt.modulus = m;
    opt.step = m / p;
    opt.x_min = -1;
    opt.x_max = 1;
    for (int t = 0; t < 10; ++t) {
      SkewElement f = reynolds_average(random_torus_element(T, rng, opt), G);
      for (const auto& g : G) CHECK(qtorus_act(g, f) == f);
      auto parts = eigenspace_decompose(f, m, p);
      CHECK(eigenspace_reconstruct(parts, m, p) == f);
      for (const auto& c : parts) CHECK(qtorus_is_invariant(c, m, 1));
    }
  }
}

TEST_CASE("psi") {
  AlgebraSpec spec({2, 3, 1}, 4, 2);
  QuantumTorus T(3);
  const VarLayout L = spec.layout();
  SkewElement like(L);
  CHECK(psi_map(T.y(1), 2, spec) == SkewElement::delta(like, {2, 1}, -1));
  CHECK(psi_map(T.x(3), 2, spec) == SkewElement::scalar(like, RatFunc(LaurentPoly::variable(L, {2, 3}))));
  const SkewElement di = SkewElement::delta(like, {2, 1}, -1);
  const SkewElement x21 = SkewElement::scalar(like, RatFunc(LaurentPoly::variable(L, {2, 1})));
  CHECK(di * x21 == RatFunc(Scalar::q()) * (x21 * di));
  auto swap = group_make({2, 1, 3}, {0, 0, 0}, 4, 2);
  CHECK(act_on_skew(ProductGroupElement::embed(spec, 2, swap), psi_map(T.y(1), 2, spec)) ==
        SkewElement::delta(like, {2, 2}, -1));
  for (int k : {1, 2}) {
    Report r = psi_iso_check(k, spec);
    CHECK(!r.empty());
    CHECK(all_passed(r));
  }
  CHECK_THROWS_AS(psi_iso_check(3, spec), std::out_of_range);
  CHECK_THROWS_AS(psi_map(T.x(1), 1, spec), ParameterMismatch);
}

TEST_CASE("weyl field parameters") {
  auto w = weyl_parameters_invariants(4, 2, 3);
  CHECK(w.exponents() == std::vector<int>{2, 4, 4});
  CHECK(w.base_degree == 0);
  auto g = weyl_parameters_ogz(AlgebraSpec({1, 2, 3}, 2, 2));
  CHECK(g.exponents() == std::vector<int>{1, 1, 2});
  CHECK(g.base_degree == 3);
  for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 1}, {4, 2}, {3, 1}}) {
    auto h = weyl_parameters_ogz(AlgebraSpec({1, 1}, m, p));
    CHECK(h.exponents() == std::vector<int>{m / p});
    CHECK(h.base_degree == 1);
  }
  AlgebraSpec s({3, 2, 4, 2}, 6, 2);
  CHECK(weyl_parameters_ogz(s).pairs() == 3 + 2 + 4);
  CHECK(weyl_parameters_ogz(s).to_string() == "q^3 x3, q^6 x6, base 2");
  CHECK_THROWS_AS(weyl_parameters_invariants(4, 3, 2), std::invalid_argument);
}

}
