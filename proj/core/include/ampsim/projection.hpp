#pragma once

#include <vector>

#include "ampsim/grid.hpp"
#include "ampsim/smear_integral.hpp"
#include "ampsim/states.hpp"

namespace ampsim {

enum class ParitySign { plus, minus };

inline double sign_value(ParitySign s) { return s == ParitySign::plus ? 1.0 : -1.0; }

// Sampled quadrature probability curve on a uniform grid.  `values` holds
// the properly normalized density; `norm` is its trapezoidal integral and
// doubles as the grid-coverage diagnostic.
struct Distribution1D {
  Grid1D grid;
  std::vector<double> values;
  double norm;
};

// Outcome of measuring the coupled qubit in the |+->/|-> basis: the mode is
// projected by E_sign = (1 +- U_pi)/2 onto a cat-like superposition with
// outcome probability p_sign.
struct ProjectedSuperposition {
  AmplifiedCoherentState base;
  ParitySign sign;
  double p_sign;
  // Parity overlap T = integral Pi^{-1}(b - g a) <-b|b> d^2 b, kept for
  // diagnostics; p_+- = (1 +- T)/2.
  double parity_overlap;
  bool parity_suppressed;  // |T| underflowed double precision
};

// Apply the parity projection E_sign to an amplified coherent state.
ProjectedSuperposition project(const AmplifiedCoherentState& state, ParitySign sign,
                               int order = 48);

// Pr(x) of the projected state sampled on `grid`.  Throws CoverageError when
// more than 0.1% of the probability mass falls outside the grid.
Distribution1D pr_x(const ProjectedSuperposition& ps, const Grid1D& grid,
                    int order = 48);

// Pr(p) of the projected state.  Additionally throws ResolutionError when
// representable interference fringes would be sampled at fewer than 20
// points per period.
Distribution1D pr_p(const ProjectedSuperposition& ps, const Grid1D& grid,
                    int order = 48);

// Pr(x) / Pr(p) of the unprojected amplified state (no qubit coupling).
Distribution1D pr_x_unprojected(const AmplifiedCoherentState& state,
                                const Grid1D& grid, int order = 48);
Distribution1D pr_p_unprojected(const AmplifiedCoherentState& state,
                                const Grid1D& grid, int order = 48);

// Fringe contrast (max - min)/(max + min) over the full oscillation period
// nearest the grid center.  Returns 0 for fringe-free distributions.
double fringe_visibility(const Distribution1D& dist);

// Expected p-axis fringe period pi / (sqrt(2) |g alpha|) (infinite when the
// displacement vanishes).
double fringe_period(const AmplifiedCoherentState& state);

}  // namespace ampsim
