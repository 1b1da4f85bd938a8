#include "pvialg/painleve.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "pvialg/parser.hpp"

namespace pvialg {

std::string ThetaVector::str() const {
  std::ostringstream os;
  os << "(" << v[0].get_str() << "," << v[1].get_str() << "," << v[2].get_str() << "," << v[3].get_str() << ")";
  return os.str();
}

ThetaVector parse_theta(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::vector<mpq_class> parts;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(parse_rational(item));
  if (parts.size() != 4) throw ParseError("theta needs four comma-separated rationals", 0);
  return {parts[0], parts[1], parts[2], parts[3]};
}

ThetaVector canonical_theta(const ThetaVector& t) {
  auto nu = t.nu();
  for (auto& x : nu) x = abs(x);
  return ThetaVector::from_nu(nu);
}

bool theta_equivalent(const ThetaVector& a, const ThetaVector& b) { return canonical_theta(a) == canonical_theta(b); }

std::string PviParameters::str() const {
  return "(" + alpha.get_str() + "," + beta.get_str() + "," + gamma.get_str() + "," + delta.get_str() + ")";
}

PviParameters params_from_theta(const ThetaVector& t) {
  PviParameters p;
  mpq_class half(1, 2);
  p.alpha = (t.tinf() - 1) * (t.tinf() - 1) * half;
  p.beta = -t.t0() * t.t0() * half;
  p.gamma = t.t1() * t.t1() * half;
  p.delta = (1 - t.tt() * t.tt()) * half;
  for (auto* q : {&p.alpha, &p.beta, &p.gamma, &p.delta}) q->canonicalize();
  return p;
}

FieldPtr AlgebraicSolution::field() const {
  if (y.field()) return y.field();
  return t.field();
}

// ---------------------------------------------------------------------------

ResidualReport residual_exact(const AlgebraicSolution& sol) {
  const ExtScalar& t = sol.t;
  const ExtScalar& y = sol.y;
  const ExtScalar one(1L);
  if (t.is_zero() || t == one) throw AlgebraError("degenerate parametrization: t is identically 0 or 1");
  if (y.is_zero() || y == one || y == t) throw AlgebraError("degenerate parametrization: y is identically 0, 1 or t");
  ExtScalar T1 = t.derive();
  if (T1.is_zero()) throw AlgebraError("degenerate parametrization: t does not depend on the parameter");
  ExtScalar Y1 = y.derive();
  ExtScalar T2 = T1.derive();
  ExtScalar Y2 = Y1.derive();

  PviParameters p = params_from_theta(sol.theta);
  const ExtScalar al(GaussRational(p.alpha)), be(GaussRational(p.beta)), ga(GaussRational(p.gamma)),
      de(GaussRational(p.delta));

  ExtScalar y1 = y - one;
  ExtScalar yt = y - t;
  ExtScalar t1 = t - one;
  ExtScalar tt1 = t * t1;
  ExtScalar tt1sq = tt1 * tt1;
  ExtScalar yy = y * y, y1y1 = y1 * y1, ytyt = yt * yt;
  ExtScalar prod = y * y1 * yt;
  ExtScalar T1sq = T1 * T1;

  ExtScalar A = (Y2 * T1 - Y1 * T2) * prod * prod * tt1sq;
  ExtScalar B = -ExtScalar(GaussRational(mpq_class(1, 2))) * (y1 * yt + y * yt + y * y1) * prod * tt1sq * Y1 * Y1 * T1;
  ExtScalar C = ((ExtScalar(2L) * t - one) * yt + tt1) * yy * y1y1 * yt * tt1 * Y1 * T1sq;
  ExtScalar D = -(T1sq * T1) * prod *
                (al * yy * y1y1 * ytyt + be * t * y1y1 * ytyt + ga * t1 * yy * ytyt + de * tt1 * yy * y1y1);

  ResidualReport r;
  r.residual = A + B + C + D;
  r.exact_zero = r.residual.is_zero();
  return r;
}

std::complex<double> pvi_second_derivative(const ThetaVector& th, std::complex<double> t, std::complex<double> y,
                                           std::complex<double> dy) {
  PviParameters p = params_from_theta(th);
  const double al = p.alpha.get_d(), be = p.beta.get_d(), ga = p.gamma.get_d(), de = p.delta.get_d();
  const std::complex<double> y1 = y - 1.0, yt = y - t, t1 = t - 1.0;
  return 0.5 * (1.0 / y + 1.0 / y1 + 1.0 / yt) * dy * dy - (1.0 / t + 1.0 / t1 + 1.0 / yt) * dy +
         y * y1 * yt / (t * t * t1 * t1) * (al + be * t / (y * y) + ga * t1 / (y1 * y1) + de * t * t1 / (yt * yt));
}

namespace {

void check_regular(std::complex<double> t, std::complex<double> y, double eps) {
  if (std::abs(t) < eps || std::abs(t - 1.0) < eps) throw EvaluationError("t is on the singular locus {0, 1}");
  if (std::abs(y) < eps || std::abs(y - 1.0) < eps || std::abs(y - t) < eps) {
    throw EvaluationError("y is on the singular locus {0, 1, t}");
  }
}

}  // namespace

std::complex<double> residual_numeric(const ThetaVector& th, std::complex<double> t, std::complex<double> y,
                                      std::complex<double> dy, std::complex<double> d2y) {
  check_regular(t, y, 1e-300);
  return d2y - pvi_second_derivative(th, t, y, dy);
}

std::vector<ResidualSample> residual_samples(const AlgebraicSolution& sol, int count, std::uint64_t seed,
                                             int branch) {
  ExtScalar T1 = sol.t.derive(), Y1 = sol.y.derive();
  ExtScalar T2 = T1.derive(), Y2 = Y1.derive();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  std::vector<ResidualSample> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 50 * count + 100) throw EvaluationError("could not find regular sample points");
    std::complex<double> u(dist(rng), dist(rng));
    try {
      std::complex<double> t = sol.t.eval_numeric(u, branch), y = sol.y.eval_numeric(u, branch);
      std::complex<double> t1 = T1.eval_numeric(u, branch), y1 = Y1.eval_numeric(u, branch);
      std::complex<double> t2 = T2.eval_numeric(u, branch), y2 = Y2.eval_numeric(u, branch);
      if (std::abs(t1) < 1e-8) continue;
      check_regular(t, y, 1e-6);
      std::complex<double> dy = y1 / t1;
      std::complex<double> d2y = (y2 * t1 - y1 * t2) / (t1 * t1 * t1);
      std::complex<double> rhs = pvi_second_derivative(sol.theta, t, y, dy);
      double scale = std::max({std::abs(d2y), std::abs(rhs), 1.0});
      out.push_back({u, std::abs(d2y - rhs), scale});
    } catch (const EvaluationError&) {
      continue;
    } catch (const DivisionByZero&) {
      continue;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

PointPermutation parse_permutation(const std::string& text) {
  PointPermutation p{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  std::array<bool, 4> seen{};
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    int v;
    if (item == "0") v = 0;
    else if (item == "1") v = 1;
    else if (item == "t") v = 2;
    else if (item == "inf" || item == "oo") v = 3;
    else throw ParseError("permutation entries are 0, 1, t, inf: '" + item + "'", 0);
    if (k >= 4) throw ParseError("permutation needs exactly four entries", 0);
    if (seen[static_cast<std::size_t>(v)]) throw ParseError("permutation repeats '" + item + "'", 0);
    seen[static_cast<std::size_t>(v)] = true;
    p[k++] = v;
  }
  if (k != 4) throw ParseError("permutation needs exactly four entries", 0);
  return p;
}

std::vector<PointPermutation> all_permutations() {
  std::vector<PointPermutation> out;
  PointPermutation p{0, 1, 2, 3};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

AlgebraicSolution fractional_linear_orbit(const AlgebraicSolution& sol, const PointPermutation& perm) {
  struct Proj {
    ExtScalar a, b;  // [a : b]
  };
  const ExtScalar one(1L), zero(0L);
  const std::array<Proj, 4> pts = {Proj{zero, one}, Proj{one, one}, Proj{sol.t, one}, Proj{one, zero}};
  std::array<Proj, 4> to;  // to[label] = old point sent to that label
  for (std::size_t j = 0; j < 4; ++j) to[static_cast<std::size_t>(perm[j])] = pts[j];
  const Proj& A0 = to[0];
  const Proj& A1 = to[1];
  const Proj& Ai = to[3];
  // M(z) = (z - A0)(A1 - Ainf) / ((z - Ainf)(A1 - A0)), homogeneously.
  ExtScalar k1 = A1.a * Ai.b - Ai.a * A1.b;
  ExtScalar k2 = A1.a * A0.b - A0.a * A1.b;
  auto image = [&](const Proj& z) {
    ExtScalar num = (z.a * A0.b - A0.a * z.b) * k1;
    ExtScalar den = (z.a * Ai.b - Ai.a * z.b) * k2;
    if (den.is_zero()) throw AlgebraError("fractional-linear image lies at infinity");
    return num / den;
  };
  AlgebraicSolution out;
  out.label = sol.label;
  out.t = image(to[2]);
  out.y = image(Proj{sol.y, one});
  auto nu = sol.theta.nu();
  std::array<mpq_class, 4> nn;
  for (std::size_t j = 0; j < 4; ++j) nn[static_cast<std::size_t>(perm[j])] = nu[j];
  out.theta = ThetaVector::from_nu(nn);
  return out;
}

AlgebraicSolution substitute_solution_parameter(const AlgebraicSolution& sol, const RatFunc& image,
                                                const FieldPtr& target) {
  ParamSubstitution sub = make_param_substitution(image, sol.field(), target);
  AlgebraicSolution out = sol;
  out.t = apply(sub, sol.t);
  out.y = apply(sub, sol.y);
  return out;
}

std::complex<double> quadratic_compose(std::complex<double> y, std::complex<double> t, int branch0, int branch1) {
  std::complex<double> yt = y * t, yt1 = (y - 1.0) * (t - 1.0);
  if (yt == 0.0 || yt1 == 0.0) throw EvaluationError("quadratic transformation at a branch point");
  std::complex<double> s0 = static_cast<double>(branch0) * std::sqrt(yt);
  std::complex<double> s1 = static_cast<double>(branch1) * std::sqrt(yt1);
  std::complex<double> den = s0 + t;
  if (den == 0.0) throw EvaluationError("quadratic transformation has a pole here");
  return t * (s1 + s0 + 1.0) / den;
}

ThetaVector quadratic_compose_theta(const mpq_class& a) {
  mpq_class q = a / 4;
  return {q, q, q, 1 - q};
}

RamaniResult ramani_step(std::complex<double> y0, std::complex<double> t0, int branch_y, int branch_t) {
  if (y0 == 1.0 || t0 == 1.0) throw EvaluationError("Ramani step at Y0 = 1 or T0 = 1");
  std::complex<double> sy = static_cast<double>(branch_y) * std::sqrt(y0);
  std::complex<double> st = static_cast<double>(branch_t) * std::sqrt(t0);
  if (sy == 1.0 || st == 1.0) throw EvaluationError("Ramani step denominator vanishes");
  std::complex<double> r = (st + 1.0) / (st - 1.0);
  return {(sy + 1.0) * (st + 1.0) / ((sy - 1.0) * (st - 1.0)), r * r};
}

ThetaVector ramani_theta(const ThetaVector& th) {
  if (th.t0() != 0 || th.tinf() != 1) throw AlgebraError("Ramani step needs theta of the form (0, b, c, 1)");
  mpq_class b = th.t1() / 2, c = th.tt() / 2;
  return {b, c, c, 1 - b};
}

}  // namespace pvialg
