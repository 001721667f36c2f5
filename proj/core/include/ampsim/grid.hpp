#pragma once

#include <cmath>
#include <vector>

#include "ampsim/errors.hpp"

namespace ampsim {

// Uniform 1D sampling grid, endpoints included.
struct Grid1D {
  double lo;
  double hi;
  int n;

  Grid1D(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
    if (!(std::isfinite(lo) && std::isfinite(hi)))
      throw DomainError("Grid1D: endpoints must be finite");
    if (!(lo < hi)) throw DomainError("Grid1D: requires lo < hi");
    if (n < 2) throw DomainError("Grid1D: requires n >= 2");
  }

  double spacing() const { return (hi - lo) / (n - 1); }
  double point(int i) const { return lo + spacing() * i; }

  std::vector<double> points() const {
    std::vector<double> xs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) xs[static_cast<size_t>(i)] = point(i);
    return xs;
  }

  // Symmetric grid covering [-half, half] with spacing <= h.
  static Grid1D symmetric(double half, double h) {
    if (!(half > 0.0) || !(h > 0.0))
      throw DomainError("Grid1D::symmetric: requires half > 0 and h > 0");
    int half_n = static_cast<int>(std::ceil(half / h));
    return Grid1D(-half_n * h, half_n * h, 2 * half_n + 1);
  }

  // Grid centered at c covering c +- half with spacing <= h.
  static Grid1D centered(double c, double half, double h) {
    Grid1D g = symmetric(half, h);
    return Grid1D(c + g.lo, c + g.hi, g.n);
  }
};

struct Grid2D {
  Grid1D x;
  Grid1D p;

  Grid2D(Grid1D x_, Grid1D p_) : x(x_), p(p_) {}

  static Grid2D square(double lo, double hi, int n) {
    return Grid2D(Grid1D(lo, hi, n), Grid1D(lo, hi, n));
  }
};

// Trapezoidal weight for index i on an n-point uniform grid.
inline double trapezoid_weight(int i, int n) {
  return (i == 0 || i == n - 1) ? 0.5 : 1.0;
}

inline double trapezoid(const Grid1D& g, const std::vector<double>& v) {
  double acc = 0.0;
  for (int i = 0; i < g.n; ++i)
    acc += trapezoid_weight(i, g.n) * v[static_cast<size_t>(i)];
  return acc * g.spacing();
}

}  // namespace ampsim
