#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "ampsim/states.hpp"

namespace ampsim {

// Value represented as val * exp(log_scale), so Gaussian prefactors far
// below double range stay representable until the caller decides to flush.
struct ScaledComplex {
  Complex val{0.0, 0.0};
  double log_scale = 0.0;

  double log_magnitude() const;

  // Collapse to a plain double-precision complex; magnitudes below
  // exp(kFlushLog) flush to zero.
  Complex collapse() const;
  bool suppressed() const;
};

// Anything with log-magnitude below this is beyond double precision and is
// reported as suppressed rather than evaluated.
inline constexpr double kFlushLog = -700.0;

// Gaussian x polynomial kernel multiplying the smearing function:
//   exp(ar dr^2 + br dr + ai di^2 + bi di + c),  d = dr + i di,
// with ar, ai real and <= 0 and br, bi, c complex.
struct GaussianKernel {
  double ar = 0.0;
  double ai = 0.0;
  Complex br{0.0, 0.0};
  Complex bi{0.0, 0.0};
  Complex c{0.0, 0.0};
};

// integral d^2 delta  Pi^{-1}(delta) * exp(kernel(delta)).
//
// The combined Gaussian is completed exactly (complex-shifted Gauss-Hermite
// nodes), so the rule is exact for the polynomial part of Pi^{-1}; `order`
// only needs to exceed the lambda polynomial degree.
ScaledComplex smear_integral(const SmearingSpec& spec, const GaussianKernel& kernel,
                             int order = 48);

// integral d^2 delta  Pi^{-1}(delta) f(delta), by Gauss-Hermite at the
// natural smearing scale.  For moment integrands (polynomial f) this is
// exact; used for mean and variance checks.
template <typename F>
double smear_expectation(const SmearingSpec& spec, F&& f, int order = 48);

// Node set for smear_expectation at the natural smearing scale.
struct SmearNodes {
  std::vector<double> coords;   // scaled node coordinates sqrt(s) t_j
  std::vector<double> weights;  // plain Gauss-Hermite weights w_j
};
SmearNodes smear_nodes(const SmearingSpec& spec, int order);

template <typename F>
double smear_expectation(const SmearingSpec& spec, F&& f, int order) {
  SmearNodes nd = smear_nodes(spec, order);
  const double s = spec.s();
  const size_t n = nd.coords.size();
  double acc = 0.0;
  for (size_t j = 0; j < n; ++j) {
    for (size_t k = 0; k < n; ++k) {
      const double z = (nd.coords[j] * nd.coords[j] + nd.coords[k] * nd.coords[k]) / s;
      double lam = 0.0;
      double term = 1.0;
      for (int m = 0; m < spec.terms(); ++m) {
        if (m > 0) term *= z / static_cast<double>(m);
        lam += spec.lambdas[static_cast<size_t>(m)] * term;
      }
      acc += nd.weights[j] * nd.weights[k] * lam *
             f(Complex(nd.coords[j], nd.coords[k]));
    }
  }
  return acc / std::numbers::pi;
}

// Four-dimensional double-smearing integrals used by the purity routines:
//   integral d^2 d  d^2 d'  Pi^{-1}(d) Pi^{-1}(d') K(beta, beta'),
// with beta = g alpha + d.  The kernels are the parity overlap products:
//   kind 0:  exp(-|beta - beta'|^2)
//   kind 1:  exp(-|beta + beta'|^2)
//   kind 2:  Re exp(-|beta|^2 - |beta'|^2 - 2i Im(conj(beta) beta'))
// Each is evaluated by exact Gaussian completion in sum/difference
// coordinates (kind 2 uses complex-shifted inner nodes).
ScaledComplex double_smear_overlap(const SmearingSpec& spec, Complex g_alpha,
                                   int kind, int order = 40);

}  // namespace ampsim
