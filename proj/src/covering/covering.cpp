#include "pvialg/covering.hpp"

#include <algorithm>
#include <map>

namespace pvialg {

std::string fiber_name(Fiber f) {
  switch (f) {
    case Fiber::Zero: return "0";
    case Fiber::One: return "1";
    case Fiber::Infinity: return "oo";
  }
  return "?";
}

int FiberDivisor::total() const {
  int n = at_infinity;
  for (const auto& p : profile) n += p.multiplicity * p.count;
  return n;
}

std::vector<int> FiberDivisor::parts() const {
  std::vector<int> out;
  for (const auto& p : profile) out.insert(out.end(), static_cast<std::size_t>(p.count), p.multiplicity);
  if (at_infinity > 0) out.push_back(at_infinity);
  std::sort(out.rbegin(), out.rend());
  return out;
}

XPoly fiber_polynomial(const Covering& c, Fiber v) {
  switch (v) {
    case Fiber::Zero: return c.map.num();
    case Fiber::One: return c.map.num() - c.map.den();
    case Fiber::Infinity: return c.map.den();
  }
  throw AlgebraError("bad fiber");
}

namespace {

// Fiber containing x = oo and its multiplicity; {-1, 0} if none.
std::pair<int, int> infinity_position(const Covering& c) {
  int dn = c.map.num().degree();
  int dd = c.map.den().degree();
  if (c.map.is_zero()) throw AlgebraError("zero covering map");
  if (dn < dd) return {0, dd - dn};
  if (dn > dd) return {2, dn - dd};
  int d1 = (c.map.num() - c.map.den()).degree();
  if (d1 < dn) return {1, dn - std::max(d1, 0)};
  return {-1, 0};
}

}  // namespace

FiberDivisor fiber_divisor(const Covering& c, Fiber v) {
  FiberDivisor out;
  out.value = v;
  XPoly f = fiber_polynomial(c, v);
  if (f.is_zero()) throw AlgebraError("covering is constant");
  if (f.degree() > 0) out.factors = squarefree_decomposition(f);
  std::map<int, int, std::greater<>> byMult;
  for (const auto& sf : out.factors) byMult[sf.multiplicity] += sf.factor.degree();
  for (auto [m, n] : byMult) out.profile.push_back({m, n});
  auto [where, mult] = infinity_position(c);
  if (where == static_cast<int>(v)) out.at_infinity = mult;
  return out;
}

FiberTable fiber_divisors(const Covering& c) {
  return {fiber_divisor(c, Fiber::Zero), fiber_divisor(c, Fiber::One), fiber_divisor(c, Fiber::Infinity)};
}

XPoly ramification_residue(const Covering& c) { return ramification_residue(c, fiber_divisors(c)); }

XPoly ramification_residue(const Covering& c, const FiberTable& fibers) {
  const XPoly& N = c.map.num();
  const XPoly& D = c.map.den();
  XPoly W = N.derivative() * D - N * D.derivative();
  if (W.is_zero()) throw AlgebraError("covering is constant");
  for (const auto& fd : fibers) {
    for (const auto& sf : fd.factors) {
      if (sf.multiplicity > 1) W = exact_div(W, sf.factor.pow(static_cast<unsigned>(sf.multiplicity - 1)));
    }
  }
  return W;
}

ExtScalar extra_ramification_point(const Covering& c) {
  XPoly W = ramification_residue(c);
  if (W.degree() == 1) return -W.coeff(0) / W.coeff(1);
  if (W.degree() == 0) {
    if (infinity_position(c).first < 0) throw AlgebraError("extra ramification point lies at x = oo");
    throw AlgebraError("not almost Belyi: no ramification outside the three fibers");
  }
  throw AlgebraError("not almost Belyi: residual ramification of degree " + std::to_string(W.degree()));
}

// ---------------------------------------------------------------------------

mpq_class degree_formula(const std::array<int, 3>& k, const std::array<int, 4>& a,
                         const std::array<int, 4>& fiber_of) {
  mpq_class den = -1;
  for (int kv : k) {
    if (kv <= 0) throw AlgebraError("local orders must be positive");
    den += mpq_class(1, kv);
  }
  if (den == 0) throw AlgebraError("degree formula undefined: 1/k0 + 1/k1 + 1/kinf = 1");
  mpq_class num = -1;
  for (std::size_t j = 0; j < 4; ++j) {
    int f = fiber_of[j];
    if (f < 0 || f > 2) throw AlgebraError("fiber index must be 0, 1 or 2");
    num += mpq_class(a[j], k[static_cast<std::size_t>(f)]);
  }
  mpq_class r = num / den;
  r.canonicalize();
  return r;
}

DegreeForm degree_form(const std::array<int, 3>& k) {
  mpq_class den = -1;
  for (int kv : k) {
    if (kv <= 0) throw AlgebraError("local orders must be positive");
    den += mpq_class(1, kv);
  }
  if (den == 0) throw AlgebraError("degree formula undefined: 1/k0 + 1/k1 + 1/kinf = 1");
  // sum a_j/k - 1 = nu0 + nu1 + nut + (1 - nuinf) - 1
  mpq_class c = 1 / den;
  DegreeForm f;
  f.coeff = {c, c, c, -c};
  f.constant = 0;
  return f;
}

std::string DegreeForm::str() const {
  const mpq_class& c = coeff[0];
  std::string s = c == 1 ? "" : (c == -1 ? "-" : c.get_str() + "*");
  return s + "(nu0+nu1+nut-nuinf)";
}

mpq_class DegreeForm::eval(const std::array<mpq_class, 4>& nu) const {
  mpq_class r = constant;
  for (std::size_t j = 0; j < 4; ++j) r += coeff[j] * nu[j];
  return r;
}

// ---------------------------------------------------------------------------

ExtScalar Moebius::apply(const ExtScalar& x) const {
  ExtScalar den = c * x + d;
  if (den.is_zero()) throw DivisionByZero("fractional-linear map sends the point to infinity");
  return (a * x + b) / den;
}

ExtScalar Moebius::invert(const ExtScalar& x_old) const {
  ExtScalar den = a - c * x_old;
  if (den.is_zero()) throw DivisionByZero("inverse fractional-linear map sends the point to infinity");
  return (d * x_old - b) / den;
}

Moebius Moebius::substituted(const ParamSubstitution& sub) const {
  return {pvialg::apply(sub, a), pvialg::apply(sub, b), pvialg::apply(sub, c), pvialg::apply(sub, d)};
}

Moebius moebius_from(const RatX& m) {
  if (m.num().degree() > 1 || m.den().degree() > 1) throw AlgebraError("x-map is not fractional-linear: " + m.str());
  Moebius r{m.num().coeff(1), m.num().coeff(0), m.den().coeff(1), m.den().coeff(0)};
  if ((r.a * r.d - r.b * r.c).is_zero()) throw AlgebraError("degenerate fractional-linear map");
  return r;
}

Covering normalize(const Covering& c, const std::vector<NormalizationStage>& stages) {
  Covering out = c;
  for (const auto& st : stages) {
    if (st.param) out.map = out.map.apply(*st.param);
    if (!st.xmap.is_identity()) out.map = out.map.moebius(st.xmap.a, st.xmap.b, st.xmap.c, st.xmap.d);
  }
  return out;
}

ExtScalar normalize_point(const ExtScalar& x_old, const std::vector<NormalizationStage>& stages) {
  ExtScalar x = x_old;
  for (const auto& st : stages) {
    if (st.param) x = pvialg::apply(*st.param, x);
    x = st.xmap.invert(x);
  }
  return x;
}

// ---------------------------------------------------------------------------

namespace {

bool integral(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

SpecialPoints special_points(const Covering& c, const std::array<mpq_class, 3>& e) {
  return special_points(fiber_divisors(c), e);
}

SpecialPoints special_points(const FiberTable& fibers, const std::array<mpq_class, 3>& e) {
  SpecialPoints sp;
  bool found0 = false, found1 = false;
  const ExtScalar one(1L);
  XPoly leftover(ExtScalar(1L), 'x');
  int leftoverOrder = 0;
  Fiber leftoverFiber = Fiber::Zero;
  int leftoverCount = 0;
  for (int v = 0; v < 3; ++v) {
    const FiberDivisor& fd = fibers[static_cast<std::size_t>(v)];
    if (fd.at_infinity > 0) {
      sp.fiber[3] = fd.value;
      sp.order[3] = fd.at_infinity;
    }
    for (const auto& sf : fd.factors) {
      XPoly f = sf.factor;
      if (f.constant_term().is_zero()) {
        found0 = true;
        sp.fiber[0] = fd.value;
        sp.order[0] = sf.multiplicity;
        f = exact_div(f, XPoly::variable('x'));
      }
      if (f.degree() > 0 && f.eval(one).is_zero()) {
        found1 = true;
        sp.fiber[1] = fd.value;
        sp.order[1] = sf.multiplicity;
        f = exact_div(f, XPoly::variable('x') - XPoly(one, 'x'));
      }
      mpq_class d = e[static_cast<std::size_t>(v)] * sf.multiplicity;
      if (f.degree() > 0 && !integral(d)) {
        leftover = leftover * f;
        leftoverOrder = sf.multiplicity;
        leftoverFiber = fd.value;
        ++leftoverCount;
      }
    }
  }
  if (!found0) throw AlgebraError("x = 0 is not a point of the three fibers");
  if (!found1) throw AlgebraError("x = 1 is not a point of the three fibers");
  if (sp.order[3] == 0) throw AlgebraError("x = oo is not a point of the three fibers");
  if (leftoverCount != 1 || leftover.degree() != 1) {
    throw AlgebraError("cannot identify t: non-apparent points besides 0, 1 have degree " +
                       std::to_string(leftover.degree()));
  }
  sp.fiber[2] = leftoverFiber;
  sp.order[2] = leftoverOrder;
  sp.t = -leftover.coeff(0) / leftover.coeff(1);
  return sp;
}

}  // namespace pvialg
