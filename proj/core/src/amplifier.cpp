#include "ampsim/amplifier.hpp"

namespace ampsim {

AmplifiedCoherentState amplify(Complex alpha, const SmearingSpec& spec) {
  return AmplifiedCoherentState(alpha, spec);
}

Complex mean_amplitude(const AmplifiedCoherentState& state, int order) {
  const Complex g_alpha = state.mean();
  const double re = smear_expectation(
      state.spec, [&](Complex d) { return (g_alpha + d).real(); }, order);
  const double im = smear_expectation(
      state.spec, [&](Complex d) { return (g_alpha + d).imag(); }, order);
  return Complex(re, im);
}

double output_x_variance(const AmplifiedCoherentState& state, int order) {
  const double sqrt2 = std::sqrt(2.0);
  const Complex g_alpha = state.mean();
  // For a P mixture of coherent states, <x> = sqrt(2) E[Re beta] and
  // <x^2> = E[2 (Re beta)^2] + 1/2.
  const double m1 = smear_expectation(
      state.spec, [&](Complex d) { return sqrt2 * (g_alpha + d).real(); }, order);
  const double m2 = smear_expectation(
      state.spec,
      [&](Complex d) {
        const double br = (g_alpha + d).real();
        return 2.0 * br * br;
      },
      order);
  return m2 + 0.5 - m1 * m1;
}

double caves_bound_x_variance(double g) {
  return 0.5 * g * g + 0.5 * (g * g - 1.0);
}

}  // namespace ampsim
