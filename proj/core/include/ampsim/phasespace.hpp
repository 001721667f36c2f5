#pragma once

#include <cmath>
#include <complex>

#include "ampsim/errors.hpp"
#include "ampsim/grid.hpp"

namespace ampsim {

// Dimensionless complex phase-space amplitude.  Convention throughout the
// library: hbar = 1, x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)),
// so a coherent amplitude beta sits at x = sqrt(2) Re beta, p = sqrt(2) Im beta.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite amplitude");
}

// Overlap <gamma|beta> = exp(-(|beta|^2 + |gamma|^2)/2 + conj(gamma) beta).
Complex coherent_overlap(Complex beta, Complex gamma);

// Position wavefunction <x|beta>, phase fixed as
// pi^{-1/4} exp(-(x - sqrt(2) Re b)^2 / 2 + i sqrt(2) Im b x - i Re b Im b).
Complex xwave(Complex beta, double x);

// Momentum wavefunction <p|beta>; the Fourier transform of xwave.
Complex pwave(Complex beta, double p);

}  // namespace ampsim
