#include "ampsim/projection.hpp"

#include <algorithm>
#include <cmath>

namespace ampsim {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrtPi = std::sqrt(M_PI);

ScaledComplex parity_overlap_integral(const AmplifiedCoherentState& state,
                                      int order) {
  // T = integral Pi^{-1}(d) e^{-2|G + d|^2} d^2 d,  G = g alpha.
  const Complex g_alpha = state.mean();
  const double gr = g_alpha.real(), gi = g_alpha.imag();
  GaussianKernel k;
  k.ar = -2.0;
  k.ai = -2.0;
  k.br = Complex(-4.0 * gr, 0.0);
  k.bi = Complex(-4.0 * gi, 0.0);
  k.c = Complex(-2.0 * (gr * gr + gi * gi), 0.0);
  return smear_integral(state.spec, k, order);
}

// Diagonal term integral for Pr(x):  integral Pi^{-1} |<x|sg b>|^2, with
// sg = +-1 selecting |b> or |-b>; the pi^{-1/2} prefactor is NOT included.
ScaledComplex prx_diag(const AmplifiedCoherentState& state, double x, double sg,
                       int order) {
  const double gr = state.mean().real();
  const double u = x - sg * kSqrt2 * gr;
  GaussianKernel k;
  k.ar = -2.0;
  k.br = Complex(sg * 2.0 * kSqrt2 * u, 0.0);
  k.c = Complex(-u * u, 0.0);
  return smear_integral(state.spec, k, order);
}

// Cross term integral Pi^{-1} <x|b><-b|x> (pi^{-1/2} not included).
ScaledComplex prx_cross(const AmplifiedCoherentState& state, double x, int order) {
  const double gr = state.mean().real(), gi = state.mean().imag();
  GaussianKernel k;
  k.ar = -2.0;
  k.br = Complex(-4.0 * gr, 0.0);
  k.bi = Complex(0.0, 2.0 * kSqrt2 * x);
  k.c = Complex(-x * x - 2.0 * gr * gr, 2.0 * kSqrt2 * x * gi);
  return smear_integral(state.spec, k, order);
}

ScaledComplex prp_diag(const AmplifiedCoherentState& state, double p, double sg,
                       int order) {
  const double gi = state.mean().imag();
  const double u = p - sg * kSqrt2 * gi;
  GaussianKernel k;
  k.ai = -2.0;
  k.bi = Complex(sg * 2.0 * kSqrt2 * u, 0.0);
  k.c = Complex(-u * u, 0.0);
  return smear_integral(state.spec, k, order);
}

// Cross term integral Pi^{-1} <p|b><-b|p>.
ScaledComplex prp_cross(const AmplifiedCoherentState& state, double p, int order) {
  const double gr = state.mean().real(), gi = state.mean().imag();
  GaussianKernel k;
  k.ai = -2.0;
  k.bi = Complex(-4.0 * gi, 0.0);
  k.br = Complex(0.0, -2.0 * kSqrt2 * p);
  k.c = Complex(-p * p - 2.0 * gi * gi, -2.0 * kSqrt2 * p * gr);
  return smear_integral(state.spec, k, order);
}

Distribution1D finish_distribution(const Grid1D& grid, std::vector<double> vals) {
  Distribution1D d{grid, std::move(vals), 0.0};
  d.norm = trapezoid(grid, d.values);
  if (std::abs(d.norm - 1.0) > 1e-3)
    throw CoverageError("distribution: grid does not cover the support (norm " +
                        std::to_string(d.norm) + ")");
  return d;
}

}  // namespace

ProjectedSuperposition project(const AmplifiedCoherentState& state, ParitySign sign,
                               int order) {
  const ScaledComplex t_int = parity_overlap_integral(state, order);
  const ScaledComplex t_check = parity_overlap_integral(state, order + 16);
  const double t1 = t_int.collapse().real();
  const double t2 = t_check.collapse().real();
  if (std::abs(t1 - t2) > 1e-9 * std::max(1.0, std::abs(t1)))
    throw ConvergenceError("project: parity overlap integral did not converge");

  const double t = t1;
  double p = 0.5 * (1.0 + sign_value(sign) * t);
  p = std::clamp(p, 0.0, 1.0);
  return ProjectedSuperposition{state, sign, p, t, t_int.suppressed()};
}

Distribution1D pr_x(const ProjectedSuperposition& ps, const Grid1D& grid,
                    int order) {
  const double sg = sign_value(ps.sign);
  const double scale = 1.0 / (4.0 * ps.p_sign * kSqrtPi);
  std::vector<double> vals(static_cast<size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.point(i);
    const double d1 = prx_diag(ps.base, x, +1.0, order).collapse().real();
    const double d2 = prx_diag(ps.base, x, -1.0, order).collapse().real();
    const double cr = prx_cross(ps.base, x, order).collapse().real();
    vals[static_cast<size_t>(i)] = scale * (d1 + d2 + sg * 2.0 * cr);
  }
  return finish_distribution(grid, std::move(vals));
}

Distribution1D pr_p(const ProjectedSuperposition& ps, const Grid1D& grid,
                    int order) {
  const double gr = ps.base.mean().real();
  if (gr != 0.0) {
    const double period = M_PI / (kSqrt2 * std::abs(gr));
    if (grid.spacing() > period / 20.0 &&
        !prp_cross(ps.base, 0.0, order).suppressed())
      throw ResolutionError("pr_p: fewer than 20 samples per fringe period");
  }
  const double sg = sign_value(ps.sign);
  const double scale = 1.0 / (4.0 * ps.p_sign * kSqrtPi);
  std::vector<double> vals(static_cast<size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i) {
    const double p = grid.point(i);
    const double d1 = prp_diag(ps.base, p, +1.0, order).collapse().real();
    const double d2 = prp_diag(ps.base, p, -1.0, order).collapse().real();
    const double cr = prp_cross(ps.base, p, order).collapse().real();
    vals[static_cast<size_t>(i)] = scale * (d1 + d2 + sg * 2.0 * cr);
  }
  return finish_distribution(grid, std::move(vals));
}

Distribution1D pr_x_unprojected(const AmplifiedCoherentState& state,
                                const Grid1D& grid, int order) {
  std::vector<double> vals(static_cast<size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i)
    vals[static_cast<size_t>(i)] =
        prx_diag(state, grid.point(i), +1.0, order).collapse().real() / kSqrtPi;
  return finish_distribution(grid, std::move(vals));
}

Distribution1D pr_p_unprojected(const AmplifiedCoherentState& state,
                                const Grid1D& grid, int order) {
  std::vector<double> vals(static_cast<size_t>(grid.n));
  for (int i = 0; i < grid.n; ++i)
    vals[static_cast<size_t>(i)] =
        prp_diag(state, grid.point(i), +1.0, order).collapse().real() / kSqrtPi;
  return finish_distribution(grid, std::move(vals));
}

double fringe_visibility(const Distribution1D& dist) {
  const auto& v = dist.values;
  const int n = dist.grid.n;
  if (n < 5) throw ResolutionError("fringe_visibility: distribution too short");

  std::vector<int> maxima, minima;
  for (int i = 1; i + 1 < n; ++i) {
    const double a = v[static_cast<size_t>(i - 1)], b = v[static_cast<size_t>(i)],
                 c = v[static_cast<size_t>(i + 1)];
    if (b > a && b > c) maxima.push_back(i);
    if (b < a && b < c) minima.push_back(i);
  }
  if (minima.empty() || maxima.empty()) return 0.0;

  // Reference point: coordinate zero when covered, else the grid midpoint.
  double ref = 0.0;
  if (ref < dist.grid.lo || ref > dist.grid.hi)
    ref = 0.5 * (dist.grid.lo + dist.grid.hi);
  const int ref_idx =
      static_cast<int>(std::lround((ref - dist.grid.lo) / dist.grid.spacing()));

  int center_max = maxima.front();
  for (int idx : maxima)
    if (std::abs(idx - ref_idx) < std::abs(center_max - ref_idx)) center_max = idx;

  int left = -1, right = -1;
  for (int idx : minima) {
    if (idx < center_max) left = idx;
    if (idx > center_max && right < 0) right = idx;
  }
  if (left < 0 && right < 0) return 0.0;

  int period_samples;
  double min_val;
  if (left >= 0 && right >= 0) {
    period_samples = right - left;
    min_val = std::min(v[static_cast<size_t>(left)], v[static_cast<size_t>(right)]);
  } else {
    const int gap = left >= 0 ? center_max - left : right - center_max;
    period_samples = 2 * gap;
    min_val = v[static_cast<size_t>(left >= 0 ? left : right)];
  }

  const double max_val = v[static_cast<size_t>(center_max)];
  const double global_max = *std::max_element(v.begin(), v.end());
  if (max_val - min_val < 1e-12 * global_max) return 0.0;
  if (period_samples < 20)
    throw ResolutionError("fringe_visibility: fewer than 20 samples per period");
  return (max_val - min_val) / (max_val + min_val);
}

double fringe_period(const AmplifiedCoherentState& state) {
  const double m = std::abs(state.mean());
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return M_PI / (kSqrt2 * m);
}

}  // namespace ampsim
