#include <set>

#include "doctest.h"
#include "qogz/ogz.hpp"

using namespace qogz;

namespace {

RatFunc parse(const std::string& s, const AlgebraSpec& spec) { return RatFunc::parse(s, spec.layout(), spec.m); }

std::set<DeltaMonomial> support_set(const SkewElement& a) {
  auto s = skew_support(a);
  return {s.begin(), s.end()};
}

bool only(const Report& r, Status st) {
  for (const auto& c : r)
    if (c.status != st) return false;
  return !r.empty();
}

}  // namespace

TEST_SUITE("ogz") {

TEST_CASE("B factors") {
  AlgebraSpec s22({1, 1}, 2, 2);
  CHECK(build_B({2, 1}, {1, 1}, s22) == parse("(x[2,1]/x[1,1] - x[1,1]/x[2,1])/(q - 1/q)", s22));
  CHECK(build_B({1, 1}, {2, 1}, s22) == -build_B({2, 1}, {1, 1}, s22));
  AlgebraSpec s11({1, 1}, 1, 1);
  CHECK(build_B({2, 1}, {1, 1}, s11) == parse("q*(1 - x[1,1]/x[2,1])/(q - 1)", s11));
  CHECK_THROWS_AS(build_B({1, 1}, {1, 1}, s22), std::invalid_argument);
  for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 3}, {4, 2}, {6, 3}}) {
    AlgebraSpec s({2, 1}, m, p);
    auto b = build_B({1, 2}, {1, 1}, s).as_laurent();
    REQUIRE(b.has_value());
    CHECK(b->term_count() == 2);
  }
}

TEST_CASE("A factors") {
  AlgebraSpec s({1, 1}, 2, 2);
  CHECK(build_A(1, 1, -1, s) == parse("x[1,1]", s));
  CHECK(build_A(1, 1, 1, s) == parse("-(x[2,1]/x[1,1] - x[1,1]/x[2,1])/(q - 1/q)", s));
  AlgebraSpec s12({1, 2}, 2, 2);
  CHECK(build_A(1, 1, 1, s12) == parse("-x[1,1]^-1", s12) * build_B({2, 1}, {1, 1}, s12) * build_B({2, 2}, {1, 1}, s12));
  CHECK_THROWS_AS(build_A(1, 2, 1, s12), std::out_of_range);
  CHECK_THROWS(build_A(2, 1, 1, s12));
  OgzOptions drop;
  drop.drop_prefactor = true;
  CHECK(build_A(1, 1, -1, s, drop) == RatFunc(1));
}

TEST_CASE("X generators") {
  for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 1}, {2, 2}, {4, 2}, {3, 1}}) {
    AlgebraSpec s({1, 1}, m, p);
    const int h = m / p;
    SkewElement like(s.layout());
    SkewElement want = SkewElement::term(like, DeltaMonomial::unit(s.layout(), {1, 1}, -1),
                                         RatFunc(Scalar::q(h)) * RatFunc(LaurentPoly::variable(s.layout(), {1, 1}, h)));
    CHECK(build_X(1, -1, s) == want);
  }
  AlgebraSpec s21({2, 1}, 2, 2);
  CHECK(build_X(1, 1, s21).size() == 2);
  AlgebraSpec s123({1, 2, 3}, 4, 2);
  const VarLayout L = s123.layout();
  CHECK(support_set(build_X(2, 1, s123)) ==
        std::set<DeltaMonomial>{DeltaMonomial::unit(L, {2, 1}), DeltaMonomial::unit(L, {2, 2})});
  CHECK(support_set(build_X(2, -1, s123)) ==
        std::set<DeltaMonomial>{DeltaMonomial::unit(L, {2, 1}, -1), DeltaMonomial::unit(L, {2, 2}, -1)});
  auto gens = build_generators(s123);
  CHECK(gens.X_plus.size() == 2);
  CHECK(gens.X_minus.size() == 2);
  CHECK(gens.gammas.size() == gamma_generators(s123).size());
}

TEST_CASE("invariance") {
  CHECK(only(verify_invariance(AlgebraSpec({1, 2, 3}, 2, 2)), Status::pass));
  CHECK(only(verify_invariance(AlgebraSpec({2, 2}, 4, 2)), Status::pass));
  OgzOptions drop;
  drop.drop_prefactor = true;
  Report r = verify_invariance(AlgebraSpec({2, 1}, 2, 2), drop);
  CHECK_FALSE(all_passed(r));
  bool twisted = false;
  for (const auto& c : r)
    if (c.status == Status::fail) {
      CHECK(!c.witness.empty());
      twisted = twisted || c.witness.find("perm=[2,1] exps=[1,1]") != std::string::npos;
    }
  CHECK(twisted);
  CHECK(all_passed(verify_invariance(AlgebraSpec({2, 2, 2}, 2, 2), drop)));
}

TEST_CASE("galois support") {
  for (const auto& r : std::vector<std::vector<int>>{{1, 1}, {1, 2, 3}, {3, 1}}) {
    Report rep = verify_galois_support(AlgebraSpec(r, 2, 2));
    CHECK(only(rep, Status::pass));
  }
  AlgebraSpec s({1, 2, 3}, 2, 2);
  std::set<DeltaMonomial> all;
  for (const auto& X : {build_generators(s).X_plus, build_generators(s).X_minus})
    for (const auto& x : X)
      for (const auto& u : skew_support(x)) all.insert(u);
  CHECK(all.size() == 6);
}

TEST_CASE("cartan commutator") {
  auto identity_only = [](const SkewElement& c) {
    auto s = skew_support(c);
    return s.size() == 1 && s.front().is_identity();
  };
  CHECK(identity_only(cartan_commutator(1, AlgebraSpec({1, 2}, 2, 2))));
  CHECK(identity_only(cartan_commutator(2, AlgebraSpec({1, 2, 3}, 2, 2))));
  CHECK(identity_only(cartan_commutator(2, AlgebraSpec({1, 2, 3}, 4, 2))));
}

TEST_CASE("serre and cross relations") {
  CHECK(only(verify_serre_and_cross(AlgebraSpec({1, 2, 3}, 2, 2)), Status::pass));
  CHECK(only(verify_serre_and_cross(AlgebraSpec({1, 2, 3}, 4, 2)), Status::pass));
  CHECK(only(verify_serre_and_cross(AlgebraSpec({2, 2}, 2, 2)), Status::report));

  // Serre combination with the coefficient q^2 + q^-2, written out directly
  AlgebraSpec s({1, 2, 3}, 4, 2);
  const RatFunc two(Scalar::q(2) + Scalar::q(-2));
  for (int sign : {1, -1}) {
    SkewElement a = build_X(1, sign, s), b = build_X(2, sign, s);
    CHECK((a * a * b - two * (a * b * a) + b * a * a).is_zero());
    CHECK((b * b * a - two * (b * a * b) + a * b * b).is_zero());
  }
  CHECK(commutator(build_X(1, 1, s), build_X(2, -1, s)).is_zero());
}

TEST_CASE("adjacent rows commute up to q^(2m/p - m)") {
  for (auto [m, p] : std::vector<std::pair<int, int>>{{1, 1}, {3, 3}, {2, 1}, {2, 2}, {4, 2}, {6, 3}}) {
    AlgebraSpec s({1, 2, 3}, m, p);
    SkewElement a = build_X(1, 1, s), b = build_X(2, -1, s);
    CHECK(a * b == RatFunc(Scalar::q(2 * (m / p) - m)) * (b * a));
    CHECK(commutator(build_X(2, 1, s), build_X(1, -1, s)).is_zero());
  }
}

TEST_CASE("heisenberg") {
  AlgebraSpec s({1, 1}, 2, 2);
  CHECK_FALSE(heisenberg_search(s, HeisenbergPresentation::yx_form).has_value());
  auto sol = heisenberg_search(s, HeisenbergPresentation::xy_form);
  REQUIRE(sol.has_value());
  const VarLayout L = s.layout();
  Exponents kx;
  kx[L.slot(1, 1)] = 1;
  kx[L.slot(2, 1)] = -1;
  CHECK((sol->mu_k == kx || sol->mu_k == Exponents{} - kx));
  const RatFunc q(Scalar::q());
  CHECK(sol->K * sol->X * sol->K_inv == q * sol->X);
  CHECK(sol->K * sol->Y * sol->K_inv == RatFunc(Scalar::q(-1)) * sol->Y);
  CHECK(commutator(sol->L, build_X(1, 1, s)).is_zero());
  const RatFunc qq(Scalar::q() - Scalar::q(-1));
  CHECK(qq * (sol->X * sol->Y) == sol->K - sol->K_inv);

  Report rep = verify_heisenberg(s);
  int yx_fail = 0, xy_pass = 0;
  for (const auto& c : rep) {
    if (c.check_id.rfind("yx-form/", 0) == 0) yx_fail += c.status == Status::fail;
    if (c.check_id.rfind("xy-form/", 0) == 0) xy_pass += c.status == Status::pass;
  }
  CHECK(yx_fail == 1);
  CHECK(xy_pass == 11);
  CHECK_THROWS_AS(heisenberg_search(AlgebraSpec({1, 2}, 2, 2), HeisenbergPresentation::yx_form), std::invalid_argument);
}

TEST_CASE("report rendering") {
  CHECK(render_report({}) == "#STATUS\tsuite\tspec\tcheck-id\twitness\n");
  Report r{{Status::pass, "b", "s", "id2", ""}, {Status::fail, "b", "s", "id1", "x[1,1]^1"}, {Status::report, "a", "s", "z", "holds"}};
  CHECK(render_report(r) ==
        "#STATUS\tsuite\tspec\tcheck-id\twitness\n"
        "REPORT\ta\ts\tz\tholds\n"
        "FAIL\tb\ts\tid1\tx[1,1]^1\n"
        "PASS\tb\ts\tid2\n");
  CHECK_FALSE(all_passed(r));
  CHECK(all_passed({{Status::report, "a", "s", "z", ""}}));
  CHECK_FALSE(all_passed({{Status::unknown, "a", "s", "z", ""}}));
  CHECK(clip_witness("a\tb\nc") == "a b c");
  CHECK(clip_witness(std::string(500, 'x')).size() == 403);
}

}
