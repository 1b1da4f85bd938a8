#include "doctest.h"
#include "support.hpp"

using namespace pvialg;
using namespace pvialg::test;

namespace {

std::vector<std::pair<int, int>> profile(const FiberDivisor& d) {
  std::vector<std::pair<int, int>> out;
  for (const auto& p : d.profile) out.emplace_back(p.multiplicity, p.count);
  return out;
}

Covering plain(const std::string& text) { return Covering{"test", parse(text, 's')}; }

}  // namespace

TEST_SUITE("covering") {

TEST_CASE("fiber divisors of phi10") {
  Covering c = cat().covering("phi10");
  CHECK(c.degree() == 10);
  FiberDivisor f0 = fiber_divisor(c, Fiber::Zero);
  CHECK(profile(f0) == std::vector<std::pair<int, int>>{{7, 1}, {1, 3}});
  CHECK(f0.at_infinity == 0);
  FiberDivisor f1 = fiber_divisor(c, Fiber::One);
  CHECK(profile(f1) == std::vector<std::pair<int, int>>{{2, 5}});
  CHECK(f1.at_infinity == 0);
  FiberDivisor fi = fiber_divisor(c, Fiber::Infinity);
  CHECK(profile(fi) == std::vector<std::pair<int, int>>{{3, 3}});
  CHECK(fi.at_infinity == 1);
  for (const auto* d : {&f0, &f1, &fi}) CHECK(d->total() == 10);
  CHECK(fi.parts() == std::vector<int>{3, 3, 3, 1});
}

TEST_CASE("phi10 identity x^7 F10 - 4 G10^3 = P10^2") {
  XPoly F = poly_of("F10"), G = poly_of("G10"), P = poly_of("P10");
  XPoly lhs = F.shift(7) - XPoly(ExtScalar(4L), 'x') * G * G * G;
  CHECK(lhs == P * P);
  Covering c = cat().covering("phi10");
  RatX m1 = c.map - RatX(1L);
  CHECK(m1.num() * (XPoly(ExtScalar(4L), 'x') * G * G * G).lc() == P * P * m1.den().lc());
}

TEST_CASE("pattern verification") {
  CHECK(verify_pattern(cat().covering("phi10"), parse_pattern("R4(7+1+1+1 | 2+2+2+2+2 | 3+3+3+1)")).pass);
  PatternReport r12 = verify_pattern(cat().covering("phi12"), parse_pattern("R4(3+3+3+3 | 2*6 | 7+2+1+1+1)"));
  CHECK(r12.pass);
  CHECK(r12.extra_point.has_value());
  CHECK(verify_pattern(cat().covering("psi12"), parse_pattern("R4(3+3+3+3 | 2*6 | 8+1+1+1+1)")).pass);

  PatternReport bad = verify_pattern(cat().covering("phi10"), parse_pattern("R4(8+1+1 | 2+2+2+2+2 | 3+3+3+1)"));
  CHECK_FALSE(bad.pass);
  CHECK(!bad.diagnostics.empty());
  bool fiber_diag = false;
  for (const auto& d : bad.diagnostics) fiber_diag |= d.find("fiber over 0") != std::string::npos;
  CHECK(fiber_diag);

  PatternReport sum = verify_pattern(cat().covering("phi10"), parse_pattern("R4(7+1+1 | 2+2+2+2+2 | 3+3+3+1)"));
  CHECK_FALSE(sum.pass);
  CHECK(sum.diagnostics.front().find("sums to") != std::string::npos);
}

TEST_CASE("pattern literals") {
  RamificationPattern p = parse_pattern("R4(7+1+1+1 | 2*5 | 3+3+3+1)");
  CHECK(p.str() == "R4(7+1+1+1 | 2+2+2+2+2 | 3+3+3+1)");
  CHECK(parse_pattern("R3(2^+1 | 2+1^ | 3)").fibers[0][0].hat);
  CHECK_THROWS_AS(parse_pattern("R5(1|1|1)"), ParseError);
  CHECK_THROWS_AS(parse_pattern("R4(1|1)"), ParseError);
  CHECK_THROWS_AS(parse_pattern("R4(0|1|1)"), ParseError);
  CHECK_THROWS_AS(parse_pattern("R4(1|1|1) x"), ParseError);
}

TEST_CASE("extra ramification point") {
  ExtScalar e = extra_ramification_point(cat().covering("phi10"));
  CHECK(e == scalar("7*(s-1)/(s*(s+1))", 's'));
  CHECK_THROWS_WITH_AS(extra_ramification_point(plain("x^2")), doctest::Contains("not almost Belyi"),
                       AlgebraError);
}

TEST_CASE("extra point commutes with normalization") {
  NormalizedCovering n = cat().normalized("phihat10");
  ExtScalar e = extra_ramification_point(n.base);
  CHECK(normalize_point(e, n.stages) == cat().solution("y71").y);
}

TEST_CASE("Hurwitz parts count") {
  CHECK(hurwitz_parts_check(parse_pattern("R4(7+1+1+1 | 2+2+2+2+2 | 3+3+3+1)")));
  CHECK(hurwitz_parts_check(parse_pattern("R4(3*6 | 2*9 | 7+7+1+1+1+1)")));
  CHECK(hurwitz_parts_check(parse_pattern("R3(2 | 2 | 1+1)")));
  CHECK_FALSE(hurwitz_parts_check(parse_pattern("R4(8+1+1 | 2+2+2+2+2 | 3+3+3+1)")));
  CHECK_FALSE(hurwitz_parts_check(parse_pattern("R3(2 | 1+1 | 1+1)")));
}

TEST_CASE("degree formula") {
  CHECK(degree_formula({7, 2, 3}, {1, 1, 1, 1}, {0, 0, 0, 2}) == 10);
  CHECK(degree_formula({3, 2, 7}, {1, 1, 1, 1}, {0, 0, 0, 2}) == -6);
  CHECK(degree_formula({3, 2, 7}, {1, 1, 1, 2}, {2, 2, 2, 2}) == 12);
  CHECK(degree_formula({3, 2, 8}, {1, 1, 1, 1}, {2, 2, 2, 2}) == 12);
  CHECK(degree_formula({3, 2, 7}, {1, 1, 1, 1}, {2, 2, 2, 2}) == 18);
  CHECK(degree_formula({3, 2, 7}, {2, 2, 2, 3}, {2, 2, 2, 2}) == -12);
  CHECK_THROWS_AS(degree_formula({2, 3, 6}, {1, 1, 1, 1}, {0, 0, 0, 2}), AlgebraError);
  CHECK_THROWS_AS(degree_formula({2, 4, 4}, {1, 1, 1, 1}, {0, 0, 0, 3}), AlgebraError);
  DegreeForm f = degree_form({2, 3, 5});
  CHECK(f.str() == "30*(nu0+nu1+nut-nuinf)");
  // 30 (1/2 + 1/3 + 1/5 - 1/2) = 16
  CHECK(f.eval({mpq_class(1, 2), mpq_class(1, 3), mpq_class(1, 5), mpq_class(1, 2)}) == 16);
}

TEST_CASE("degree formula agrees with the Hurwitz count") {
  // Direct Hurwitz oracle: with b_v the sum of the a_x placed over z = v,
  // 2d - 2 = sum_v (k_v - 1)(d - b_v)/k_v + sum_x (a_x - 1) + 1.
  Gen g(kSeed + 20);
  int checked = 0;
  for (int n = 0; n < kCases; ++n) {
    std::array<int, 3> k{static_cast<int>(g.integer(2, 9)), static_cast<int>(g.integer(2, 9)),
                         static_cast<int>(g.integer(2, 9))};
    std::array<int, 4> a{}, fib{};
    for (int j = 0; j < 4; ++j) {
      a[static_cast<std::size_t>(j)] = static_cast<int>(g.integer(1, 4));
      fib[static_cast<std::size_t>(j)] = static_cast<int>(g.integer(0, 2));
    }
    mpq_class inv = mpq_class(1, k[0]) + mpq_class(1, k[1]) + mpq_class(1, k[2]);
    if (inv == 1) {
      CHECK_THROWS(degree_formula(k, a, fib));
      continue;
    }
    mpq_class d = degree_formula(k, a, fib);
    std::array<mpq_class, 3> b{0, 0, 0};
    mpq_class asum = 0;
    for (int j = 0; j < 4; ++j) {
      b[static_cast<std::size_t>(fib[static_cast<std::size_t>(j)])] += a[static_cast<std::size_t>(j)];
      asum += a[static_cast<std::size_t>(j)] - 1;
    }
    mpq_class rhs = asum + 1;
    for (int v = 0; v < 3; ++v) rhs += mpq_class(k[static_cast<std::size_t>(v)] - 1, k[static_cast<std::size_t>(v)]) * (d - b[static_cast<std::size_t>(v)]);
    CHECK(2 * d - 2 == rhs);
    ++checked;
  }
  CHECK(checked > 80);
}

TEST_CASE("normalization") {
  Covering c = cat().covering("phi10");
  CHECK(normalize(c, {}).map == c.map);
  NormalizationStage id;
  CHECK(normalize(c, {id}).map == c.map);
  CHECK_THROWS_AS(moebius_from(parse("x^2")), AlgebraError);
  CHECK_THROWS_AS(moebius_from(parse("(2*x+2)/(x+1)")), AlgebraError);

  NormalizedCovering n12 = cat().normalized("phihat12");
  Covering h12 = normalize(n12.base, n12.stages);
  FiberDivisor z0 = fiber_divisor(h12, Fiber::Zero);
  CHECK(profile(z0) == std::vector<std::pair<int, int>>{{3, 4}});
  SpecialPoints sp = special_points(h12, {mpq_class(1, 3), mpq_class(1, 2), mpq_class(1, 7)});
  CHECK(sp.t == cat().value("t70").constant_value());
  CHECK(theta_from_covering(h12, n12.k) == ThetaVector(mpq_class(1, 7), mpq_class(1, 7), mpq_class(1, 7), mpq_class(5, 7)));
}

TEST_CASE("composite patterns") {
  RamificationPattern c35 = compose_chain(cat().lookup("comp12").body);
  CHECK(patterns_equivalent(c35, parse_pattern("R4(3+3+3+3 | 2+2+2+2+2+2 | 8+1+1+1+1)")));
  RamificationPattern c36 = compose_chain(cat().lookup("comp18").body);
  CHECK(c36.str() == "R4(3+3+3+3+3+3 | 2+2+2+2+2+2+2+2+2 | 7+7+1+1+1+1)");
  CHECK(hurwitz_parts_check(c35));
  CHECK(hurwitz_parts_check(c36));

  RamificationPattern p10 = parse_pattern("R4(7+1+1+1 | 2+2+2+2+2 | 3+3+3+1)");
  RamificationPattern idp = parse_pattern("R3(1 | 1 | 1)");
  CHECK(compose_patterns(p10, idp).orders(0) == p10.orders(0));
  CHECK(patterns_equivalent(compose_patterns(p10, idp), p10));
  CHECK_THROWS_AS(compose_patterns(parse_pattern("R4(2 | 1+1 | 1+1)"), parse_pattern("R3(2 | 2 | 1+1)")),
                  AlgebraError);
  CHECK_THROWS_AS(compose_patterns(parse_pattern("R4(1^+1^ | 2 | 1+1)"), parse_pattern("R3(2 | 2 | 1+1)")),
                  AlgebraError);
}

}  // TEST_SUITE
