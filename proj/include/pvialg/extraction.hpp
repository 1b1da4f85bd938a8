#pragma once

#include <array>
#include <string>
#include <vector>

#include "pvialg/covering.hpp"
#include "pvialg/painleve.hpp"
#include "pvialg/syzygy.hpp"

namespace pvialg {

/// theta = (a0/k_f(0), a1/k_f(1), at/k_f(t), 1 - ainf/k_f(oo)) for a
/// properly normalised almost Belyi covering with local orders k.
ThetaVector theta_from_covering(const Covering& normalized, const std::array<int, 3>& k);
ThetaVector theta_from_covering(const FiberTable& fibers, const std::array<int, 3>& k);

/// y = extra ramification point, t = fourth non-apparent point.
AlgebraicSolution solution_from_extra_point(const Covering& normalized, const std::array<int, 3>& k,
                                            const std::string& label = {});

/// Apparent-singularity polynomials F, G, H of the direct pullback with
/// exponent differences e over z = 0, 1, oo: a root of multiplicity m over
/// z = v with m e_v integral contributes its factor to the power m e_v.
struct PullbackData {
  XPoly F{'x'}, G{'x'}, H{'x'};
  int pole_order = 0;  // order of the pole at x = oo
};
PullbackData pullback_polynomials(const Covering& c, const std::array<mpq_class, 3>& e);

/// e_v = 1/k_v, except that the fiber through x = 0 gets fpow/k_v.
std::array<mpq_class, 3> pullback_exponents(const Covering& c, const std::array<int, 3>& k, int fpow);

/// The rational function whose numerator has a single x-root:
///   U W/G ((e0-e1+einf)/2 phi'/phi - (F U)'/(F U) + (H W)'/(H W))
///   + (e0-e1-einf)/2 V W/F phi'/(phi-1)
///   + (e0+e1-einf)/2 U V/H phi'/(phi (phi-1)).
/// Terms with a vanishing syzygy component are dropped.
RatX expression21(const XPoly& F, const XPoly& G, const XPoly& H, const Syzygy& syz,
                  const std::array<mpq_class, 3>& e, const Covering& c);

/// The x-root of a rational function with a degree 1 numerator.
ExtScalar linear_root(const RatX& r);

struct SyzygySolution {
  Syzygy syzygy;
  RatX expression;
  ExtScalar root;  // before normalisation
  AlgebraicSolution solution;
};

/// Root of expression21, pushed through the normalisation; t and the
/// d-values are read from the normalised covering, theta = (d0, d1, dt, dinf + delta).
SyzygySolution solution_from_syzygy(const XPoly& F, const XPoly& G, const XPoly& H, const Syzygy& syz,
                                    const std::array<mpq_class, 3>& e, int delta, const Covering& c,
                                    const std::vector<NormalizationStage>& stages, const std::string& label = {});

/// Full pipeline: pullback polynomials, syzygy solve, expression21.
SyzygySolution derive_solution(const Covering& c, const std::array<mpq_class, 3>& e, int delta,
                               const std::vector<NormalizationStage>& stages, const std::string& label = {});

}  // namespace pvialg
