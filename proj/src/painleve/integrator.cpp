#include "pvialg/painleve.hpp"

namespace pvialg {

namespace {

constexpr double kProximity = 1e-4;

void check_path(std::complex<double> t, std::complex<double> y) {
  if (std::abs(t) < kProximity || std::abs(t - 1.0) < kProximity) {
    throw EvaluationError("integration path comes within 1e-4 of t = 0 or t = 1");
  }
  if (std::abs(y) < kProximity || std::abs(y - 1.0) < kProximity || std::abs(y - t) < kProximity) {
    throw EvaluationError("solution comes within 1e-4 of y in {0, 1, t}");
  }
}

}  // namespace

std::vector<TrajectoryPoint> rk4_integrate_pvi(const ThetaVector& th, std::complex<double> t_start,
                                               std::complex<double> y_start, std::complex<double> dy_start,
                                               std::complex<double> t_end, int steps) {
  if (steps < 0) throw AlgebraError("negative step count");
  std::vector<TrajectoryPoint> out{{t_start, y_start, dy_start}};
  if (steps == 0 || t_start == t_end) return out;
  const std::complex<double> h = (t_end - t_start) / static_cast<double>(steps);
  auto f = [&](std::complex<double> t, std::complex<double> y, std::complex<double> p) {
    check_path(t, y);
    return pvi_second_derivative(th, t, y, p);
  };
  std::complex<double> t = t_start, y = y_start, p = dy_start;
  check_path(t, y);
  for (int k = 0; k < steps; ++k) {
    std::complex<double> k1y = p, k1p = f(t, y, p);
    std::complex<double> k2y = p + 0.5 * h * k1p, k2p = f(t + 0.5 * h, y + 0.5 * h * k1y, p + 0.5 * h * k1p);
    std::complex<double> k3y = p + 0.5 * h * k2p, k3p = f(t + 0.5 * h, y + 0.5 * h * k2y, p + 0.5 * h * k2p);
    std::complex<double> k4y = p + h * k3p, k4p = f(t + h, y + h * k3y, p + h * k3p);
    y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
    p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    t = t_start + static_cast<double>(k + 1) * h;
    check_path(t, y);
    out.push_back({t, y, p});
  }
  return out;
}

std::complex<double> fd_first(const std::vector<std::complex<double>>& f, std::size_t k, std::complex<double> h) {
  if (k < 2 || k + 2 >= f.size()) throw AlgebraError("finite difference stencil out of range");
  return (-f[k + 2] + 8.0 * f[k + 1] - 8.0 * f[k - 1] + f[k - 2]) / (12.0 * h);
}

std::complex<double> fd_second(const std::vector<std::complex<double>>& f, std::size_t k, std::complex<double> h) {
  if (k < 2 || k + 2 >= f.size()) throw AlgebraError("finite difference stencil out of range");
  return (-f[k + 2] + 16.0 * f[k + 1] - 30.0 * f[k] + 16.0 * f[k - 1] - f[k - 2]) / (12.0 * h * h);
}

}  // namespace pvialg
