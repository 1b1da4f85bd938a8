#pragma once

#include <array>
#include <string>
#include <vector>

#include "pvialg/ratx.hpp"

namespace pvialg {

/// Degree constraints on a syzygy U F + V G + W H = 0. For each component
/// `max` is an upper bound (negative: the component vanishes) and `exact`
/// asks for the bound to be attained.
struct SyzygyBounds {
  std::array<int, 3> max{};
  std::array<bool, 3> exact{};
  std::string str() const;
};

/// Delta = deg F + deg G + deg H. With delta = 0: deg U = Delta/2 - deg F,
/// deg V = Delta/2 - deg G, deg W < Delta/2 - deg H. With delta > 0:
/// deg U < (Delta+delta)/2 - deg F, deg V < (Delta+delta)/2 - deg G,
/// deg W = (Delta-delta)/2 - deg H. `pole_order` is the pole order of the
/// covering at x = oo; delta may not exceed max(2, pole_order).
SyzygyBounds syzygy_bounds(const XPoly& F, const XPoly& G, const XPoly& H, int delta, int pole_order);

struct Syzygy {
  XPoly U{'x'}, V{'x'}, W{'x'};
};

/// Kernel of (U, V, W) -> U F + V G + W H restricted to the bounds (the
/// `exact` flags are not imposed here).
struct SyzygyKernel {
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  std::vector<Syzygy> basis;
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// F, G, H must have coefficients in Q(i)(s); fraction-free elimination
/// over Q(i)[s].
SyzygyKernel syzygy_kernel(const XPoly& F, const XPoly& G, const XPoly& H, const SyzygyBounds& b);

/// Unique syzygy within the bounds, scaled so that lc(W) = 1 (or the first
/// nonzero component is monic when W = 0). Throws AlgebraError with
/// "no syzygy within bounds" or "bounds non-generic" otherwise.
Syzygy solve_syzygy(const XPoly& F, const XPoly& G, const XPoly& H, int delta, int pole_order);

/// U F + V G + W H == 0.
bool verify_syzygy(const XPoly& F, const XPoly& G, const XPoly& H, const Syzygy& s);

/// Same syzygy up to a nonzero scalar factor.
bool syzygy_proportional(const Syzygy& a, const Syzygy& b);

}  // namespace pvialg
