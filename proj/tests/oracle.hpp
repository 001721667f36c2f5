#pragma once

// Brute-force quadrature helpers used only to cross-check the library's
// closed-form evaluations.  Deliberately simple: composite Simpson on a
// uniform grid, no adaptivity.

#include <complex>
#include <stdexcept>
#include <vector>

namespace oracle {

template <typename F>
auto simpson(F&& f, double a, double b, int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson: need an odd point count >= 3");
  const double h = (b - a) / (n - 1);
  using R = decltype(f(a));
  R acc = f(a) + f(b);
  for (int i = 1; i + 1 < n; ++i) acc += f(a + h * i) * ((i % 2 == 1) ? 4.0 : 2.0);
  return acc * (h / 3.0);
}

template <typename F>
auto simpson2d(F&& f, double ax, double bx, int nx, double ay, double by, int ny) {
  return simpson([&](double x) { return simpson([&](double y) { return f(x, y); }, ay, by, ny); },
                 ax, bx, nx);
}

}  // namespace oracle
