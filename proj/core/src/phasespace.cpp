#include "ampsim/phasespace.hpp"

namespace ampsim {

namespace {
const double kQuarterRootPi = std::pow(M_PI, -0.25);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

Complex coherent_overlap(Complex beta, Complex gamma) {
  require_finite(beta, "coherent_overlap");
  require_finite(gamma, "coherent_overlap");
  return std::exp(-0.5 * (std::norm(beta) + std::norm(gamma)) +
                  std::conj(gamma) * beta);
}

Complex xwave(Complex beta, double x) {
  require_finite(beta, "xwave");
  const double br = beta.real(), bi = beta.imag();
  const double dx = x - kSqrt2 * br;
  return kQuarterRootPi *
         std::exp(Complex(-0.5 * dx * dx, kSqrt2 * bi * x - br * bi));
}

Complex pwave(Complex beta, double p) {
  require_finite(beta, "pwave");
  const double br = beta.real(), bi = beta.imag();
  const double dp = p - kSqrt2 * bi;
  return kQuarterRootPi *
         std::exp(Complex(-0.5 * dp * dp, -kSqrt2 * br * p + br * bi));
}

}  // namespace ampsim
