#pragma once

#include <vector>

#include "ampsim/grid.hpp"
#include "ampsim/projection.hpp"
#include "ampsim/states.hpp"

namespace ampsim {

// Sampled Wigner function over the complex phase plane.  The x axis of the
// grid is Re(alpha), the p axis Im(alpha); `integral` is the trapezoidal
// value of  integral W d(Re a) d(Im a).
struct WignerField {
  Grid2D grid;
  std::vector<double> values;  // row-major, index = ix * grid.p.n + ip
  double integral;

  double at(int ix, int ip) const {
    return values[static_cast<size_t>(ix) * static_cast<size_t>(grid.p.n) +
                  static_cast<size_t>(ip)];
  }
};

WignerField make_field(const Grid2D& grid, std::vector<double> values);

// Sample f(alpha) over the grid; f receives Re + i Im coordinates.
template <typename F>
WignerField sample_field(const Grid2D& grid, F&& f) {
  std::vector<double> vals(static_cast<size_t>(grid.x.n) *
                           static_cast<size_t>(grid.p.n));
  for (int ix = 0; ix < grid.x.n; ++ix) {
    const double wr = grid.x.point(ix);
    for (int ip = 0; ip < grid.p.n; ++ip)
      vals[static_cast<size_t>(ix) * static_cast<size_t>(grid.p.n) +
           static_cast<size_t>(ip)] = f(Complex(wr, grid.p.point(ip)));
  }
  return make_field(grid, std::move(vals));
}

// Wigner functions.
WignerField wigner_coherent(Complex beta0, const Grid2D& grid);
WignerField wigner(const AmplifiedCoherentState& state, const Grid2D& grid,
                   int order = 48);
WignerField wigner(const ThermalCoherentState& state, const Grid2D& grid,
                   int order = 48);
WignerField wigner(const ProjectedSuperposition& ps, const Grid2D& grid,
                   int order = 48);

// Purity Tr(rho^2) by nested Gauss-Hermite integration of the P-function
// double integral (plus parity cross terms for projected states).
double purity(const ThermalCoherentState& state, int order = 24);
double purity(const AmplifiedCoherentState& state, int order = 24);
double purity(const ProjectedSuperposition& ps, int order = 24);

// Phase-space macroscopicity of a sampled Wigner field:
//   S = (pi/2) integral W(a) [ -d^2/(da da*) - 1 ] W(a) d^2 a,
// with the mixed derivative realized as one quarter of the 5-point discrete
// Laplacian over (Re a, Im a).  Checks S(coherent) = 0 on first use.
double macroscopicity(const WignerField& field);

// Macroscopicity of a parity-projected amplified state.  The Wigner support
// splits into two displaced blobs plus an interference patch at the origin;
// each region is integrated on its own grid (a single grid is used when they
// overlap).  A grid-halving convergence check is applied; relative changes
// above `refine_tol` raise ConvergenceError.
double macroscopicity(const ProjectedSuperposition& ps, double refine_tol = 0.01,
                      int order = 48);

// Solve purity(amplify(0, {g, lambdas})) = target for the gain by bisection.
double purity_matched_gain(const std::vector<double>& lambdas, double target_purity,
                           double g_tol = 1e-4, int order = 24);

// Closed-form purity of an ideal amplified state, 1/(2 g^2 - 1); used as a
// quadrature validation reference.
double ideal_purity(double g);

}  // namespace ampsim
