// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "support.hpp"

using namespace pvialg;
using namespace pvialg::test;

namespace {

using Clock = std::chrono::steady_clock;
using C = std::complex<double>;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("note " + what); }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

XPoly xpow(int k) { return XPoly::monomial(ExtScalar(1L), k, 'x'); }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

bool proportional(const XPoly& a, const XPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.lc() == b * a.lc();
}

// --------------------------------------------------------------------------

void c1(Outcome& o) {
  auto t0 = Clock::now();
  XPoly F = poly_of("F10"), G = poly_of("G10"), P = poly_of("P10");
  bool eq = F.shift(7) - XPoly(ExtScalar(4L), 'x') * G * G * G == P * P;
  double dt = seconds_since(t0);
  o.require(eq, "x^7 F10 - 4 G10^3 == P10^2 in Q[s][x]");
  o.require(dt < 1.0, "time " + fmt(dt) + " s < 1 s");
}

void c2(Outcome& o) {
  auto t0 = Clock::now();
  struct Case {
    const char* covering;
    const char* pattern;
  };
  for (const Case& c : {Case{"phi10", "R4(7+1+1+1 | 2+2+2+2+2 | 3+3+3+1)"}, Case{"phi12", "R4(3+3+3+3 | 2*6 | 7+2+1+1+1)"},
                        Case{"psi12", "R4(3+3+3+3 | 2*6 | 8+1+1+1+1)"}}) {
    PatternReport r = verify_pattern(cat().covering(c.covering), parse_pattern(c.pattern));
    o.require(r.pass, std::string(c.covering) + " matches " + c.pattern);
  }
  RamificationPattern c35 = compose_chain(cat().lookup("comp12").body);
  RamificationPattern t35 = parse_pattern("R4(3+3+3+3 | 2+2+2+2+2+2 | 8+1+1+1+1)");
  o.require(patterns_equivalent(c35, t35), "composite " + c35.str() + " ~ " + t35.str());
  if (c35.orders(0) != t35.orders(0)) o.note("the composite lists the fibers over 0 and oo in swapped order");
  RamificationPattern c36 = compose_chain(cat().lookup("comp18").body);
  RamificationPattern t36 = parse_pattern("R4(3*6 | 2*9 | 7+7+1+1+1+1)");
  o.require(patterns_equivalent(c36, t36) && c36.orders(0) == t36.orders(0), "composite " + c36.str() + " == target");
  double dt = seconds_since(t0);
  o.require(dt < 5.0, "time " + fmt(dt) + " s < 5 s");
}

void c3(Outcome& o) {
  auto t0 = Clock::now();
  NormalizedCovering n = cat().normalized("phihat10");
  Covering hat = normalize(n.base, n.stages);
  const CatalogEntry& e = cat().lookup("phihat10");
  FieldPtr w = cat().field("w10");
  RatX closed = parse(e.require("closed"), 'u', w);
  o.require(hat.map == closed, "normalized phi10 equals the closed form");

  ExtScalar t10 = cat().value("t10").constant_value(), ts = cat().value("t10star").constant_value();
  XPoly x = xpow(1), one(ExtScalar(1L), 'x');
  XPoly target = x * (x - one) * (x - XPoly(t10, 'x')) * (x - XPoly(ts, 'x')).pow(7);
  XPoly z0 = fiber_polynomial(hat, Fiber::Zero);
  o.require(proportional(z0, target), "z = 0 fiber is x (x-1) (x-t10) (x-t10*)^7 up to a constant");

  // The labels exactly as printed, L3 with (x - 1/2 - .) and L4 with (x - 1/2).
  std::string literal = e.require("closed");
  std::size_t a = literal.find("L4"), b = literal.find("L3");
  literal.replace(a, 2, "LX");
  literal.replace(b, 2, "L4");
  literal.replace(literal.find("LX"), 2, "L3");
  RatX printed = parse(literal, 'u', w);
  bool literal_mismatch = printed != hat.map;
  o.require(literal_mismatch, "printed label order (L3 in the cubic term, L4 linear) does not reproduce the map");
  o.note("the closed form holds with L3 and L4 exchanged relative to their printed definitions");
  double dt = seconds_since(t0);
  o.require(dt < 60.0, "time " + fmt(dt) + " s < 60 s");
}

void c4(Outcome& o) {
  XPoly P = poly_of("P10"), G = poly_of("G10");
  auto xp = [](const std::string& s) { return parse(s, 's').num(); };
  {
    auto t0 = Clock::now();
    SyzygyKernel k = syzygy_kernel(xpow(2), P, G, syzygy_bounds(xpow(2), P, G, 0, 1));
    Syzygy s = solve_syzygy(xpow(2), P, G, 0, 1);
    Syzygy want{xp("3*s*x^3-(2*s^2+6*s+13)*x^2+6*(2*s+3)*x-18"), xp("-1"), xp("-2*(s+2)*x+6")};
    double dt = seconds_since(t0);
    o.require(k.dimension() == 1, "(x^2, P10, G10), delta 0: kernel dimension " + std::to_string(k.dimension()));
    o.require(syzygy_proportional(s, want), "generator proportional to the printed triple");
    o.require(dt < 10.0, "time " + fmt(dt) + " s < 10 s");
  }
  {
    auto t0 = Clock::now();
    Syzygy s = solve_syzygy(xpow(3), P, G, 1, 1);
    Syzygy want{xp("-(s+4)*x^2+(2*s+7)*x-6"), xp("-1"), xp("2*x^2-2*(s+2)*x+6")};
    double dt = seconds_since(t0);
    o.require(syzygy_proportional(s, want), "(x^3, P10, G10), delta 1: proportional to the printed triple");
    o.require(dt < 10.0, "time " + fmt(dt) + " s < 10 s");
  }
  {
    auto t0 = Clock::now();
    Syzygy s = solve_syzygy(xpow(1), P, G, 1, 1);
    double dt = seconds_since(t0);
    o.require(syzygy_proportional(s, Syzygy{G, XPoly('x'), -xpow(1)}), "(x, P10, G10): (G10, 0, -x)");
    o.require(dt < 10.0, "time " + fmt(dt) + " s < 10 s");
  }
}

void c5(Outcome& o) {
  Covering phi = cat().covering("phi10");
  XPoly P = poly_of("P10"), G = poly_of("G10");
  Syzygy s72 = solve_syzygy(xpow(2), P, G, 0, 1);
  // E is quadratic in the syzygy; fix the generator by V = -1 as printed.
  o.require(s72.V.degree() == 0, "y72 generator has constant V");
  ExtScalar l = -s72.V.lc().inverse();
  s72 = Syzygy{s72.U * l, s72.V * l, s72.W * l};
  RatX E = expression21(xpow(2), P, G, s72, {mpq_class(2, 7), mpq_class(1, 2), mpq_class(1, 3)}, phi);
  RatX want = parse("4*(s*(2*s^2+4*s-19)*x-3*(2*s^2-12*s+7))/(7*F10)");
  o.require(E == want, "y72 pipeline gives 4(s(2s^2+4s-19)x - 3(2s^2-12s+7))/(7 F10)");
  o.require(proportional(E.den(), poly_of("F10")), "denominator proportional to F10");
  Syzygy s73 = solve_syzygy(xpow(3), P, G, 1, 1);
  RatX E73 = expression21(xpow(3), P, G, s73, {mpq_class(3, 7), mpq_class(1, 2), mpq_class(1, 3)}, phi);
  o.require(E73.num().degree() == 1 && linear_root(E73) == scalar("-(2*s-5)*(4*s-7)/(s*(10*s-11))", 's'),
            "y73 pipeline root -(2s-5)(4s-7)/(s(10s-11))");
}

void c6(Outcome& o) {
  NormalizedCovering n10 = cat().normalized("phihat10");
  ExtScalar t10 = cat().value("t10").constant_value();
  for (auto [fpow, delta, name] : {std::tuple{2, 0, "y72"}, std::tuple{3, 1, "y73"}}) {
    SyzygySolution s = derive_solution(n10.base, pullback_exponents(n10.base, n10.k, fpow), delta, n10.stages, name);
    o.require(s.solution.y == cat().solution(name).y && s.solution.t == t10,
              std::string("derived ") + name + " equals the printed closed form");
  }
  struct Case {
    const char* normalized;
    const char* t;
    const char* y;
  };
  for (const Case& c : {Case{"phihat10", "t10", "y71"}, Case{"phihat12", "t70", "y74"}, Case{"psihat12", "t80", "y81"}}) {
    NormalizedCovering n = cat().normalized(c.normalized);
    AlgebraicSolution s = solution_from_extra_point(normalize(n.base, n.stages), n.k);
    o.require(s.t == cat().value(c.t).constant_value() && s.y == cat().solution(c.y).y,
              std::string("extra point of ") + c.normalized + " gives (" + c.t + ", " + c.y + ")");
  }
}

void c7(Outcome& o) {
  auto t0 = Clock::now();
  for (const char* name : {"y71", "y72", "y73", "y74", "y75", "y76", "y81", "y83"}) {
    auto t1 = Clock::now();
    AlgebraicSolution s = cat().solution(name);
    bool zero = residual_exact(s).exact_zero;
    o.require(zero, std::string(name) + " theta " + s.theta.str() + ": exact zero residual (" + fmt(seconds_since(t1)) + " s)");
  }
  AlgebraicSolution neg = cat().solution("y71");
  neg.theta = parse_theta("1/7,1/7,1/7,1/3");
  o.require(!residual_exact(neg).exact_zero, "negative control y71 with theta (1/7,1/7,1/7,1/3) is nonzero");

  AlgebraicSolution printed = cat().solution("y75");
  printed.y = scalar("-(u-3)^2*(u^2+u+2)^2*(u^2+2*u+5)/(6*u*(u+1)*(u-1)*(u^2+7))");
  bool printed_zero = residual_exact(printed).exact_zero;
  o.require(!printed_zero, "y75 with the squared factor (u^2+u+2)^2 is not a solution");
  o.note("the catalog carries y75 with (u^2+u+2) to the first power");
  double dt = seconds_since(t0);
  o.require(dt < 300.0, "time " + fmt(dt) + " s < 300 s");
}

void c8(Outcome& o) {
  for (const char* p : {"pat10", "pat12a", "pat12b", "pat18"}) {
    const CatalogEntry& e = cat().lookup(p);
    auto ints = [&](const char* key) {
      std::vector<int> v;
      std::stringstream ss(e.require(key));
      std::string item;
      while (std::getline(ss, item, ',')) v.push_back(std::stoi(item));
      return v;
    };
    auto k = ints("k"), a = ints("a"), f = ints("fibers");
    mpq_class d = degree_formula({k[0], k[1], k[2]}, {a[0], a[1], a[2], a[3]}, {f[0], f[1], f[2], f[3]});
    int want = std::stoi(e.require("degree"));
    o.require(d == want && cat().pattern(p).degree() == want,
              std::string(p) + ": formula " + d.get_str() + ", pattern degree " + std::to_string(want));
  }
  mpq_class lit = degree_formula({3, 2, 7}, {1, 1, 1, 1}, {0, 0, 0, 2});
  o.require(lit == -6, "k = (3,2,7), a = 1, three points over k = 3 and one over k = 7: " + lit.get_str() + " (infeasible)");
  mpq_class y75 = degree_formula({3, 2, 7}, {2, 2, 2, 3}, {2, 2, 2, 2});
  o.require(y75 < 0, "y75 target theta (2/7,2/7,2/7,4/7) over k = 7: " + y75.get_str() + " (negative, no covering)");
  o.note("all four points over k = 7 with a = 1 gives 18, the degree 18 family");
  DegreeForm f = degree_form({2, 3, 5});
  o.require(f.str() == "30*(nu0+nu1+nut-nuinf)", "k = (2,3,5): " + f.str());
}

// Integrates P_VI(0,0,1/2,1) and checks the image under the quadratic map.
void c9(Outcome& o) {
  ThetaVector src = parse_theta("0,0,1/2,1");
  ThetaVector dst = quadratic_compose_theta(mpq_class(1, 2));
  o.require(dst == parse_theta("1/8,1/8,1/8,7/8"), "theta (0,0,1/2,1) maps to " + dst.str());
  const C ta(2.0), tb(3.0), y0(5.0), p0(0.3);
  const int steps = 2000;
  auto path = rk4_integrate_pvi(src, ta, y0, p0, tb, steps);
  auto fine = rk4_integrate_pvi(src, ta, y0, p0, tb, 2 * steps);
  double step_err = std::abs(path.back().y - fine.back().y);
  o.require(step_err < 1e-8, "rk4 step tolerance: halving the step moves y(3) by " + fmt(step_err));

  const C h = (tb - ta) / static_cast<double>(steps);
  std::vector<C> Y, Yr;
  for (const auto& p : path) Y.push_back(quadratic_compose(p.y, p.t));
  double worst = 0, worst_flip = 0, worst_ramani = 0;
  int samples = 0;
  std::vector<C> Yf;
  for (const auto& p : path) Yf.push_back(quadratic_compose(p.y, p.t, -1, 1));
  for (std::size_t k = 100; k + 100 < path.size(); k += 150) {
    C t = path[k].t;
    worst = std::max(worst, std::abs(residual_numeric(dst, t, Y[k], fd_first(Y, k, h), fd_second(Y, k, h))));
    worst_flip = std::max(worst_flip, std::abs(residual_numeric(dst, t, Yf[k], fd_first(Yf, k, h), fd_second(Yf, k, h))));
    RamaniResult r1 = ramani_step(path[k].y, t);
    RamaniResult r2 = ramani_step(r1.y, r1.t);
    worst_ramani = std::max({worst_ramani, std::abs(r2.y - Y[k]), std::abs(r2.t - t)});
    ++samples;
  }
  o.require(samples >= 10, std::to_string(samples) + " sample points");
  o.require(worst < 1e-6, "residual of P_VI(1/8,1/8,1/8,7/8) on the image: max " + fmt(worst));
  o.require(worst_flip < 1e-6, "sign flip of sqrt(y t) gives another solution: max " + fmt(worst_flip));
  o.require(ramani_theta(ramani_theta(src)) == dst, "two Ramani steps map theta to " + dst.str());
  o.require(worst_ramani < 1e-6, "two Ramani steps agree with the quadratic map: max " + fmt(worst_ramani));
}

// Each property suite runs twice with the same seed; the digests of the
// generated inputs must agree.
struct Suite {
  const char* name;
  std::function<std::pair<int, std::string>(Gen&)> run;  // failures, digest
};

void c10(Outcome& o) {
  FieldPtr f = w10();
  std::vector<Suite> suites;
  suites.push_back({"field axioms", [f](Gen& g) {
                      int bad = 0;
                      std::string dig;
                      for (int n = 0; n < kCases; ++n) {
                        ExtScalar a = g.ext(f), b = g.ext(f), c = g.ext(f);
                        dig += a.str();
                        bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                                  (a.is_zero() || (a * a.inverse()).is_one());
                        bad += !ok;
                      }
                      return std::pair{bad, dig};
                    }});
  suites.push_back({"Leibniz rule", [f](Gen& g) {
                      int bad = 0;
                      std::string dig;
                      for (int n = 0; n < kCases; ++n) {
                        ExtScalar a = g.ext(f), b = g.ext(f);
                        dig += b.str();
                        bad += !((a * b).derive() == a.derive() * b + a * b.derive());
                      }
                      return std::pair{bad, dig};
                    }});
  suites.push_back({"gcd and squarefree reconstruction", [](Gen& g) {
                      int bad = 0;
                      std::string dig;
                      for (int n = 0; n < kCases; ++n) {
                        QPoly common = g.nonzero_qpoly(2, 'x');
                        QPoly a = common * g.nonzero_qpoly(3, 'x'), b = common * g.nonzero_qpoly(3, 'x');
                        QPoly d = gcd(a, b);
                        bool ok = divrem(a, d).second.is_zero() && divrem(b, d).second.is_zero();
                        QPoly p = a * common;
                        QPoly prod(p.lc(), 'x');
                        for (const auto& sf : squarefree_decomposition(p)) prod *= sf.factor.pow(static_cast<unsigned>(sf.multiplicity));
                        ok = ok && prod == p;
                        dig += p.str();
                        bad += !ok;
                      }
                      return std::pair{bad, dig};
                    }});
  XPoly P = poly_of("P10"), G = poly_of("G10");
  std::vector<std::pair<XPoly, Syzygy>> base = {{xpow(2), solve_syzygy(xpow(2), P, G, 0, 1)},
                                                {xpow(3), solve_syzygy(xpow(3), P, G, 1, 1)},
                                                {xpow(1), solve_syzygy(xpow(1), P, G, 1, 1)}};
  suites.push_back({"syzygy homogeneity", [&](Gen& g) {
                      int bad = 0;
                      std::string dig;
                      for (int n = 0; n < kCases; ++n) {
                        const auto& [F, s] = base[static_cast<std::size_t>(n % 3)];
                        ExtScalar l;
                        do l = ExtScalar(RatFunc(g.qpoly(2, 's'), g.nonzero_qpoly(2, 's')));
                        while (l.is_zero());
                        dig += l.str();
                        bad += !verify_syzygy(F, P, G, Syzygy{s.U * l, s.V * l, s.W * l});
                      }
                      return std::pair{bad, dig};
                    }});
  suites.push_back({"syzygy expression under scaling", [](Gen& g) {
                      int bad = 0;
                      std::string dig;
                      for (int n = 0; n < kCases; ++n) {
                        XPoly F = g.xpoly(3, 1), Gp = g.xpoly(3, 1), H = g.xpoly(3, 1);
                        RatX phi(g.xpoly(3, 1), g.xpoly(2, 1));
                        Syzygy s{g.xpoly(2), g.xpoly(2), g.xpoly(2)};
                        std::array<mpq_class, 3> e{g.rational(), g.rational(), g.rational()};
                        ExtScalar l;
                        do l = ExtScalar(RatFunc(g.qpoly(2, 's'), g.nonzero_qpoly(1, 's')));
                        while (l.is_zero());
                        dig += phi.str();
                        if (phi.degree() < 1) continue;
                        Covering c{"random", phi};
                        RatX E = expression21(F, Gp, H, s, e, c);
                        RatX Es = expression21(F, Gp, H, Syzygy{s.U * l, s.V * l, s.W * l}, e, c);
                        // The value scales by l^2; its numerator, and so the root, is unchanged.
                        bad += !(Es == E * RatX(l * l) && proportional(Es.num(), E.num()));
                      }
                      return std::pair{bad, dig};
                    }});
  for (const auto& s : suites) {
    Gen g1(kSeed), g2(kSeed);
    auto [bad, dig] = s.run(g1);
    auto [bad2, dig2] = s.run(g2);
    o.require(bad == 0 && bad2 == 0 && dig == dig2,
              std::string(s.name) + ": " + std::to_string(kCases) + " cases, " + std::to_string(bad) +
                  " failures, seed " + std::to_string(kSeed) + (dig == dig2 ? " reproducible" : " NOT reproducible"));
  }
  o.note("the syzygy expression is homogeneous of degree 2 in the syzygy; only its root is scale invariant");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {1, "polynomial identity of phi10", c1},
      {2, "ramification patterns and composites", c2},
      {3, "normalization of phi10", c3},
      {4, "syzygy solver", c4},
      {5, "syzygy expression for y72 and y73", c5},
      {6, "end-to-end solutions", c6},
      {7, "exact residuals", c7},
      {8, "degree formula", c8},
      {9, "quadratic transformation, numeric", c9},
      {10, "property suites", c10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& ex) {
      o.require(false, std::string("exception: ") + ex.what());
    }
    double dt = seconds_since(t0);
    std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title, dt);
    for (const auto& n : o.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of 10 criteria passed\n", 10 - failed);
  return failed == 0 ? 0 : 1;
}
