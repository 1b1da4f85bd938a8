#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvialg/ratx.hpp"

namespace pvialg {

/// Local monodromy differences (theta0, theta1, thetat, thetainf).
struct ThetaVector {
  std::array<mpq_class, 4> v;

  ThetaVector() = default;
  ThetaVector(mpq_class t0, mpq_class t1, mpq_class tt, mpq_class tinf) : v{t0, t1, tt, tinf} {}

  const mpq_class& t0() const { return v[0]; }
  const mpq_class& t1() const { return v[1]; }
  const mpq_class& tt() const { return v[2]; }
  const mpq_class& tinf() const { return v[3]; }

  /// (theta0, theta1, thetat, 1 - thetainf): the numbers permuted by
  /// fractional-linear transformations and sign-flipped freely.
  std::array<mpq_class, 4> nu() const { return {v[0], v[1], v[2], 1 - v[3]}; }
  static ThetaVector from_nu(const std::array<mpq_class, 4>& nu) { return {nu[0], nu[1], nu[2], 1 - nu[3]}; }

  std::string str() const;
  friend bool operator==(const ThetaVector& a, const ThetaVector& b) { return a.v == b.v; }
};

/// "a,b,c,d" with rationals p/q.
ThetaVector parse_theta(const std::string& text);

/// Representative with theta0, theta1, thetat >= 0 and 1 - thetainf >= 0.
ThetaVector canonical_theta(const ThetaVector& t);

/// Equal after sign normalisation of (theta0, theta1, thetat, 1 - thetainf).
bool theta_equivalent(const ThetaVector& a, const ThetaVector& b);

struct PviParameters {
  mpq_class alpha, beta, gamma, delta;
  std::string str() const;
  friend bool operator==(const PviParameters& a, const PviParameters& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma && a.delta == b.delta;
  }
};

/// alpha = (thetainf-1)^2/2, beta = -theta0^2/2, gamma = theta1^2/2,
/// delta = (1-thetat^2)/2.
PviParameters params_from_theta(const ThetaVector& t);

/// Parametrised algebraic solution y(u) of P_VI with t = t(u).
struct AlgebraicSolution {
  std::string label;
  ExtScalar t;
  ExtScalar y;
  ThetaVector theta;

  FieldPtr field() const;
};

struct ResidualSample {
  std::complex<double> u;
  double residual;  // |LHS - RHS|
  double scale;     // magnitude of the largest term
};

struct ResidualReport {
  bool exact_zero = false;
  ExtScalar residual;
  std::vector<ResidualSample> samples;
};

/// Residual of the equation multiplied by y^2 (y-1)^2 (y-t)^2 t^2 (t-1)^2
/// (dt/du)^3, computed exactly in the field of the solution.
ResidualReport residual_exact(const AlgebraicSolution& sol);

/// LHS - RHS of P_VI at one point.
std::complex<double> residual_numeric(const ThetaVector& th, std::complex<double> t, std::complex<double> y,
                                      std::complex<double> dy, std::complex<double> d2y);

/// Evaluates y, y', y'' from the exact parametrisation at `count` random
/// parameter values (fixed seed) and reports |LHS - RHS| at each.
std::vector<ResidualSample> residual_samples(const AlgebraicSolution& sol, int count, std::uint64_t seed,
                                             int branch = 1);

/// Value of y'' forced by the equation.
std::complex<double> pvi_second_derivative(const ThetaVector& th, std::complex<double> t, std::complex<double> y,
                                           std::complex<double> dy);

// ---------------------------------------------------------------------------
// Transformations

/// Permutation of the singular points {0, 1, t, oo} (indices 0..3):
/// perm[j] is the new label of the old point j.
using PointPermutation = std::array<int, 4>;

/// "inf,t,1,0" lists the images of 0, 1, t, oo.
PointPermutation parse_permutation(const std::string& text);
std::vector<PointPermutation> all_permutations();

/// Moebius change of (t, y) realising the permutation; theta is permuted
/// through (theta0, theta1, thetat, 1 - thetainf).
AlgebraicSolution fractional_linear_orbit(const AlgebraicSolution& sol, const PointPermutation& perm);

/// u := image(s). `target` fixes the extension over s if given.
AlgebraicSolution substitute_solution_parameter(const AlgebraicSolution& sol, const RatFunc& image,
                                                const FieldPtr& target = nullptr);

/// t (sqrt((y-1)(t-1)) + sqrt(y t) + 1) / (sqrt(y t) + t), with sign
/// `branch0` on sqrt(y t) and `branch1` on sqrt((y-1)(t-1)).
std::complex<double> quadratic_compose(std::complex<double> y, std::complex<double> t, int branch0 = 1,
                                       int branch1 = 1);
ThetaVector quadratic_compose_theta(const mpq_class& a);

struct RamaniResult {
  std::complex<double> y, t;
};
/// Y1 = (sqrt Y0 + 1)(sqrt T0 + 1)/((sqrt Y0 - 1)(sqrt T0 - 1)),
/// T1 = (sqrt T0 + 1)^2/(sqrt T0 - 1)^2.
RamaniResult ramani_step(std::complex<double> y0, std::complex<double> t0, int branch_y = 1, int branch_t = 1);
/// (0, b, c, 1) -> (b/2, c/2, c/2, 1 - b/2).
ThetaVector ramani_theta(const ThetaVector& th);

// ---------------------------------------------------------------------------
// Numeric integration

struct TrajectoryPoint {
  std::complex<double> t, y, dy;
};

/// Classical fixed-step RK4 along the straight segment t_start -> t_end.
/// Throws EvaluationError when t comes within 1e-4 of 0 or 1 or y within
/// 1e-4 of 0, 1 or t. Returns steps + 1 points.
std::vector<TrajectoryPoint> rk4_integrate_pvi(const ThetaVector& th, std::complex<double> t_start,
                                               std::complex<double> y_start, std::complex<double> dy_start,
                                               std::complex<double> t_end, int steps);

/// Five-point central differences of samples f on a uniform grid of step h,
/// at interior index k (2 <= k < size - 2).
std::complex<double> fd_first(const std::vector<std::complex<double>>& f, std::size_t k, std::complex<double> h);
std::complex<double> fd_second(const std::vector<std::complex<double>>& f, std::size_t k, std::complex<double> h);

}  // namespace pvialg
