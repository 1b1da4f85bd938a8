#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace pvialg;
using namespace pvialg::test;

namespace {

using C = std::complex<double>;

ThetaVector th(const std::string& s) { return parse_theta(s); }

PviParameters params(const char* a, const char* b, const char* c, const char* d) {
  return {parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(d)};
}

// Independent evaluation of the equation, written out term by term.
C pvi_rhs(const ThetaVector& t, C x, C y, C p) {
  double al = std::pow(t.tinf().get_d() - 1, 2) / 2, be = -std::pow(t.t0().get_d(), 2) / 2;
  double ga = std::pow(t.t1().get_d(), 2) / 2, de = (1 - std::pow(t.tt().get_d(), 2)) / 2;
  return 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - x)) * p * p - (1.0 / x + 1.0 / (x - 1.0) + 1.0 / (y - x)) * p +
         y * (y - 1.0) * (y - x) / (x * x * (x - 1.0) * (x - 1.0)) *
             (al + be * x / (y * y) + ga * (x - 1.0) / ((y - 1.0) * (y - 1.0)) +
              de * x * (x - 1.0) / ((y - x) * (y - x)));
}

}  // namespace

TEST_SUITE("painleve") {

TEST_CASE("parameters from theta") {
  CHECK(params_from_theta(th("0,0,0,1")) == params("0", "0", "0", "1/2"));
  CHECK(params_from_theta(th("1/7,1/7,1/7,2/3")) == params("1/18", "-1/98", "1/98", "24/49"));
  CHECK(params_from_theta(th("1/8,1/8,1/8,7/8")) == params("1/128", "-1/128", "1/128", "63/128"));
}

TEST_CASE("parameters are invariant under sign flips") {
  Gen g(kSeed + 50);
  for (int n = 0; n < kCases; ++n) {
    std::array<mpq_class, 4> nu{g.rational(), g.rational(), g.rational(), g.rational()};
    ThetaVector a = ThetaVector::from_nu(nu);
    for (auto& v : nu)
      if (g.coin()) v = -v;
    ThetaVector b = ThetaVector::from_nu(nu);
    CHECK(params_from_theta(a) == params_from_theta(b));
    CHECK(theta_equivalent(a, b));
  }
}

TEST_CASE("theta equivalence") {
  CHECK(theta_equivalent(th("2/7,2/7,2/7,-1/3"), th("2/7,2/7,2/7,7/3")));
  CHECK(theta_equivalent(th("1/7,1/7,1/7,2/3"), th("1/7,1/7,1/7,2/3")));
  CHECK_FALSE(theta_equivalent(th("1/7,1/7,1/7,2/3"), th("1/7,1/7,1/7,1/3")));
  CHECK_THROWS_AS(parse_theta("1,2,3"), ParseError);
}

TEST_CASE("exact residuals of the catalog solutions") {
  for (const char* name : {"y71", "y72", "y73", "y74", "y75", "y76", "y81", "y83"}) {
    ResidualReport r = residual_exact(cat().solution(name));
    CHECK_MESSAGE(r.exact_zero, name);
    CHECK(r.residual.is_zero() == r.exact_zero);
  }
}

TEST_CASE("wrong theta gives a nonzero residual") {
  AlgebraicSolution s = cat().solution("y71");
  s.theta = th("1/7,1/7,1/7,1/3");
  ResidualReport r = residual_exact(s);
  CHECK_FALSE(r.exact_zero);
  CHECK_FALSE(r.residual.is_zero());
}

TEST_CASE("degenerate parametrizations are rejected") {
  AlgebraicSolution s = cat().solution("y74");
  AlgebraicSolution bad = s;
  bad.y = s.t;
  CHECK_THROWS_WITH(residual_exact(bad), doctest::Contains("degenerate"));
  bad = s;
  bad.t = ExtScalar(GaussRational(3));
  CHECK_THROWS_WITH(residual_exact(bad), doctest::Contains("degenerate"));
}

TEST_CASE("numeric residual") {
  ThetaVector t = th("1/8,1/8,1/8,7/8");
  CHECK(std::abs(residual_numeric(t, 4.0, 2.0, 0.25, -1.0 / 32)) < 1e-12);
  CHECK_THROWS_AS(residual_numeric(t, 1.0, 2.0, 0.25, 0.0), EvaluationError);
  CHECK_THROWS_AS(residual_numeric(t, 4.0, 4.0, 0.25, 0.0), EvaluationError);

  auto samples = residual_samples(cat().solution("y71"), 5, kSeed);
  REQUIRE(samples.size() == 5);
  for (const auto& s : samples) CHECK(s.residual < 1e-10 * std::max(1.0, s.scale));

  Gen g(kSeed + 51);
  for (int n = 0; n < kCases; ++n) {
    ThetaVector tv = ThetaVector::from_nu({g.rational(), g.rational(), g.rational(), g.rational()});
    C x(g.real(2, 5), g.real(-1, 1)), y(g.real(-3, -1), g.real(-1, 1)), p(g.real(-2, 2), g.real(-2, 2));
    C ypp = pvi_second_derivative(tv, x, y, p);
    CHECK(std::abs(ypp - pvi_rhs(tv, x, y, p)) < 1e-10 * std::max(1.0, std::abs(ypp)));
    CHECK(std::abs(residual_numeric(tv, x, y, p, ypp)) < 1e-10 * std::max(1.0, std::abs(ypp)));
  }
}

TEST_CASE("numeric residual of y71 at u = 3") {
  AlgebraicSolution s = cat().solution("y71");
  ExtScalar dt = s.t.derive();
  ExtScalar dy = s.y.derive() / dt;
  ExtScalar d2y = dy.derive() / dt;
  C u(3.0);
  C r = residual_numeric(s.theta, s.t.eval_numeric(u), s.y.eval_numeric(u), dy.eval_numeric(u), d2y.eval_numeric(u));
  CHECK(std::abs(r) < 1e-10);
}

TEST_CASE("fractional-linear orbit of y71") {
  AlgebraicSolution s = cat().solution("y71");
  auto perms = all_permutations();
  CHECK(perms.size() == 24);
  for (const auto& p : perms) {
    AlgebraicSolution o = fractional_linear_orbit(s, p);
    CHECK(residual_exact(o).exact_zero);
    auto nu = s.theta.nu(), onu = o.theta.nu();
    for (int j = 0; j < 4; ++j) CHECK(onu[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] == nu[static_cast<std::size_t>(j)]);
  }
  AlgebraicSolution id = fractional_linear_orbit(s, parse_permutation("0,1,t,inf"));
  CHECK(id.t == s.t);
  CHECK(id.y == s.y);
  AlgebraicSolution sw = fractional_linear_orbit(s, parse_permutation("1,0,t,inf"));
  CHECK(sw.t == ExtScalar(1L) - s.t);
  CHECK(sw.y == ExtScalar(1L) - s.y);
  CHECK_THROWS_AS(parse_permutation("0,0,t,inf"), ParseError);
}

TEST_CASE("parameter substitutions") {
  AlgebraicSolution s = cat().solution("y74");
  AlgebraicSolution id = substitute_solution_parameter(s, RatFunc::variable('s'));
  CHECK(residual_exact(id).exact_zero);
  AlgebraicSolution r = substitute_solution_parameter(s, RatFunc(QPoly(GaussRational(1), 's'), QPoly::variable('s')));
  CHECK(residual_exact(r).exact_zero);
  AlgebraicSolution y71 = cat().solution("y71");
  RatFunc m = RatFunc(QPoly(GaussRational(2), 's'), QPoly::variable('s')) - RatFunc(1L);
  AlgebraicSolution moved = substitute_solution_parameter(fractional_linear_orbit(y71, parse_permutation("inf,t,1,0")), m);
  CHECK(residual_exact(moved).exact_zero);
  CHECK(moved.theta == th("1/3,1/7,1/7,6/7"));
}

TEST_CASE("quadratic transformation") {
  for (double t : {1.5, 2.0, 7.25}) CHECK(std::abs(quadratic_compose(t, t) - t) < 1e-14);
  CHECK_THROWS_AS(quadratic_compose(0.0, 2.0), EvaluationError);
  CHECK_THROWS_AS(quadratic_compose(1.0, 2.0), EvaluationError);
  CHECK(quadratic_compose_theta(mpq_class(1, 2)) == th("1/8,1/8,1/8,7/8"));
}

TEST_CASE("Ramani step") {
  RamaniResult r = ramani_step(4.0, 4.0);
  CHECK(std::abs(r.t - 9.0) < 1e-14);
  CHECK(std::abs(r.y - r.t) < 1e-14);
  CHECK_THROWS_AS(ramani_step(1.0, 4.0), EvaluationError);
  CHECK_THROWS_AS(ramani_step(4.0, 1.0), EvaluationError);
  CHECK(ramani_theta(th("0,1/2,1/2,1")) == th("1/4,1/4,1/4,3/4"));
  CHECK_THROWS_AS(ramani_theta(th("1/2,0,0,1")), AlgebraError);
  // Two steps on principal branches agree with the closed-form map.
  Gen g(kSeed + 52);
  for (int n = 0; n < kCases; ++n) {
    C y(g.real(1.2, 6), 0), t(g.real(1.2, 6), 0);
    RamaniResult a = ramani_step(y, t);
    RamaniResult b = ramani_step(a.y, a.t);
    CHECK(std::abs(b.t - t) < 1e-9 * std::abs(t));
    CHECK(std::abs(b.y - quadratic_compose(y, t)) < 1e-9 * std::max(1.0, std::abs(b.y)));
  }
}

TEST_CASE("rk4 integrator") {
  ThetaVector t = th("1/8,1/8,1/8,7/8");
  auto zero = rk4_integrate_pvi(t, 4.0, 2.0, 0.25, 4.0, 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].y == C(2.0));

  auto path = rk4_integrate_pvi(t, 4.0, 2.0, 0.25, 9.0, 2000);
  CHECK(std::abs(path.back().y - 3.0) < 1e-8);
  for (const auto& p : path) CHECK(std::abs(p.y * p.y - p.t) < 1e-7);

  double e1 = std::abs(rk4_integrate_pvi(t, 4.0, 2.0, 0.25, 9.0, 40).back().y - 3.0);
  double e2 = std::abs(rk4_integrate_pvi(t, 4.0, 2.0, 0.25, 9.0, 80).back().y - 3.0);
  double ratio = e1 / e2;
  CHECK(ratio > 12.0);
  CHECK(ratio < 20.0);

  CHECK_THROWS_AS(rk4_integrate_pvi(t, 0.5, 0.3, 0.1, 1.5, 100), EvaluationError);
}

}  // TEST_SUITE
