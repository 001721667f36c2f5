#pragma once

#include <vector>

#include "ampsim/phasespace.hpp"

namespace ampsim {

// Amplitude gain g > 1 together with the ancilla eigenvalue sequence
// {lambda_n}.  Defines the amplifier smearing function
//   Pi^{-1}(d) = e^{-|d|^2/s}/(pi s) * sum_n lambda_n (|d|^2/s)^n / n!,
// with s = g^2 - 1.  The lambdas must be non-negative and sum to one;
// renormalization is refused so published parameter sets pass unchanged.
struct SmearingSpec {
  double g;
  std::vector<double> lambdas;

  SmearingSpec(double gain, std::vector<double> lams);

  double s() const { return g * g - 1.0; }
  int terms() const { return static_cast<int>(lambdas.size()); }

  // Mean ancilla weight sum lambda_n (n + 1); equals 1 iff ideal.
  double noise_weight() const;
};

// The ideal amplifier: ancilla in vacuum.
SmearingSpec ideal_spec(double g);

// Reference non-ideal ancilla preparations used throughout the tools.
SmearingSpec two_term_spec(double g);    // {0.3, 0.7}
SmearingSpec three_term_spec(double g);  // {0.2, 0.3, 0.5}

// Thermal coherent state: P function (2/(pi(v-1))) exp(-2|b - d|^2/(v-1)).
struct ThermalCoherentState {
  double v;
  Complex d;

  ThermalCoherentState(double variance, Complex displacement);

  // The equivalent ideal amplified coherent state: v = 2g^2 - 1, d = g alpha.
  double equivalent_gain() const { return std::sqrt((v + 1.0) / 2.0); }
};

// Amplified coherent state in P-function form: P(b) = Pi^{-1}(b - g alpha).
struct AmplifiedCoherentState {
  Complex alpha;
  SmearingSpec spec;

  AmplifiedCoherentState(Complex a, SmearingSpec sp);

  Complex mean() const { return spec.g * alpha; }
};

// Smearing function Pi^{-1} at displacement delta (log-domain evaluation).
double smearing_value(const SmearingSpec& spec, Complex delta);

// Thermal P function at beta.
double p_thermal(const ThermalCoherentState& state, Complex beta);

// P function of the amplified state at beta: Pi^{-1}(beta - g alpha).
double amplified_p(const AmplifiedCoherentState& state, Complex beta);

// The ideal amplified state isomorphic to a given thermal coherent state.
AmplifiedCoherentState thermal_as_amplified(const ThermalCoherentState& state);

}  // namespace ampsim
