#include "pvialg/extraction.hpp"

namespace pvialg {

namespace {

std::array<mpq_class, 3> inverse_orders(const std::array<int, 3>& k) {
  std::array<mpq_class, 3> e;
  for (std::size_t v = 0; v < 3; ++v) {
    if (k[v] < 2) throw AlgebraError("local orders k must be >= 2");
    e[v] = mpq_class(1, k[v]);
  }
  return e;
}

}  // namespace

ThetaVector theta_from_covering(const Covering& normalized, const std::array<int, 3>& k) {
  return theta_from_covering(fiber_divisors(normalized), k);
}

ThetaVector theta_from_covering(const FiberTable& fibers, const std::array<int, 3>& k) {
  SpecialPoints sp = special_points(fibers, inverse_orders(k));
  int irregular = 0;
  for (int v = 0; v < 3; ++v) {
    const FiberDivisor& fd = fibers[static_cast<std::size_t>(v)];
    for (const auto& sf : fd.factors) {
      if (sf.multiplicity != k[static_cast<std::size_t>(v)]) irregular += sf.factor.degree();
    }
  }
  if (irregular != 3) {
    throw AlgebraError("covering not properly normalized: " + std::to_string(irregular) +
                       " finite fiber points have order different from k (expected the 3 points 0, 1, t)");
  }
  std::array<mpq_class, 4> th;
  for (std::size_t j = 0; j < 4; ++j) {
    th[j] = mpq_class(sp.order[j], k[static_cast<std::size_t>(sp.fiber[j])]);
    th[j].canonicalize();
  }
  th[3] = 1 - th[3];
  return {th[0], th[1], th[2], th[3]};
}

AlgebraicSolution solution_from_extra_point(const Covering& normalized, const std::array<int, 3>& k,
                                            const std::string& label) {
  AlgebraicSolution sol;
  sol.label = label;
  FiberTable fibers = fiber_divisors(normalized);
  sol.theta = theta_from_covering(fibers, k);
  sol.t = special_points(fibers, inverse_orders(k)).t;
  XPoly W = ramification_residue(normalized, fibers);
  if (W.degree() != 1) {
    throw AlgebraError("not almost Belyi: residual ramification of degree " + std::to_string(W.degree()));
  }
  sol.y = -W.coeff(0) / W.coeff(1);
  return sol;
}

PullbackData pullback_polynomials(const Covering& c, const std::array<mpq_class, 3>& e) {
  PullbackData d;
  std::array<XPoly*, 3> out = {&d.F, &d.G, &d.H};
  for (int v = 0; v < 3; ++v) {
    FiberDivisor fd = fiber_divisor(c, static_cast<Fiber>(v));
    XPoly acc(ExtScalar(1L), 'x');
    for (const auto& sf : fd.factors) {
      mpq_class m = e[static_cast<std::size_t>(v)] * sf.multiplicity;
      m.canonicalize();
      if (m.get_den() == 1 && m > 0) acc *= sf.factor.pow(static_cast<unsigned>(m.get_num().get_ui()));
    }
    *out[static_cast<std::size_t>(v)] = acc;
    if (v == 2) d.pole_order = fd.at_infinity;
  }
  if (d.pole_order == 0) throw AlgebraError("x = oo must lie above z = oo");
  return d;
}

std::array<mpq_class, 3> pullback_exponents(const Covering& c, const std::array<int, 3>& k, int fpow) {
  if (fpow < 1) throw AlgebraError("the power of F must be positive");
  std::array<mpq_class, 3> e = inverse_orders(k);
  for (int v = 0; v < 3; ++v) {
    const XPoly f = fiber_polynomial(c, static_cast<Fiber>(v));
    if (!f.is_zero() && f.constant_term().is_zero()) {
      e[static_cast<std::size_t>(v)] = mpq_class(fpow, k[static_cast<std::size_t>(v)]);
      e[static_cast<std::size_t>(v)].canonicalize();
      return e;
    }
  }
  throw AlgebraError("x = 0 lies in none of the fibers over 0, 1, oo");
}

RatX expression21(const XPoly& F, const XPoly& G, const XPoly& H, const Syzygy& syz,
                  const std::array<mpq_class, 3>& e, const Covering& c) {
  const RatX& phi = c.map;
  RatX dphi = phi.derivative();
  auto scalar = [](const mpq_class& q) { return RatX(ExtScalar(GaussRational(q))); };
  const mpq_class c1 = (e[0] - e[1] + e[2]) / 2;
  const mpq_class c2 = (e[0] - e[1] - e[2]) / 2;
  const mpq_class c3 = (e[0] + e[1] - e[2]) / 2;
  const bool hasU = !syz.U.is_zero(), hasV = !syz.V.is_zero(), hasW = !syz.W.is_zero();
  RatX out;
  if (hasU && hasW) {
    XPoly FU = F * syz.U, HW = H * syz.W;
    RatX logs = scalar(c1) * (dphi / phi) - RatX(FU.derivative(), FU) + RatX(HW.derivative(), HW);
    out += RatX(syz.U * syz.W, G) * logs;
  }
  if (hasV && hasW) {
    out += scalar(c2) * RatX(syz.V * syz.W, F) * (dphi / (phi - RatX(1L)));
  }
  if (hasU && hasV) {
    out += scalar(c3) * RatX(syz.U * syz.V, H) * (dphi / (phi * (phi - RatX(1L))));
  }
  return out;
}

ExtScalar linear_root(const RatX& r) {
  if (r.num().degree() != 1) {
    throw AlgebraError("numerator has degree " + std::to_string(r.num().degree()) + " in x, expected 1");
  }
  return -r.num().coeff(0) / r.num().coeff(1);
}

SyzygySolution solution_from_syzygy(const XPoly& F, const XPoly& G, const XPoly& H, const Syzygy& syz,
                                    const std::array<mpq_class, 3>& e, int delta, const Covering& c,
                                    const std::vector<NormalizationStage>& stages, const std::string& label) {
  SyzygySolution out;
  out.syzygy = syz;
  out.expression = expression21(F, G, H, syz, e, c);
  out.root = linear_root(out.expression);
  Covering hat = normalize(c, stages);
  SpecialPoints sp = special_points(hat, e);
  std::array<mpq_class, 4> d;
  for (std::size_t j = 0; j < 4; ++j) {
    d[j] = e[static_cast<std::size_t>(sp.fiber[j])] * sp.order[j];
    d[j].canonicalize();
  }
  if (sp.fiber[3] != Fiber::Infinity) throw AlgebraError("x = oo must lie above z = oo");
  out.solution.label = label;
  out.solution.t = sp.t;
  out.solution.y = normalize_point(out.root, stages);
  out.solution.theta = ThetaVector(d[0], d[1], d[2], d[3] + delta);
  return out;
}

SyzygySolution derive_solution(const Covering& c, const std::array<mpq_class, 3>& e, int delta,
                               const std::vector<NormalizationStage>& stages, const std::string& label) {
  PullbackData pd = pullback_polynomials(c, e);
  Syzygy syz = solve_syzygy(pd.F, pd.G, pd.H, delta, pd.pole_order);
  return solution_from_syzygy(pd.F, pd.G, pd.H, syz, e, delta, c, stages, label);
}

}  // namespace pvialg
