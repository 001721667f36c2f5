#include <cmath>

#include "ampsim/amplifier.hpp"
#include "doctest.h"

using namespace ampsim;

TEST_CASE("mean output amplitude is the displaced input") {
  const Complex alpha(1.1, -0.4);
  for (const SmearingSpec& spec : {ideal_spec(2.0), three_term_spec(2.0)}) {
    const AmplifiedCoherentState out = amplify(alpha, spec);
    const Complex mean = mean_amplitude(out);
    CHECK(mean.real() == doctest::Approx(spec.g * alpha.real()).epsilon(1e-12));
    CHECK(mean.imag() == doctest::Approx(spec.g * alpha.imag()).epsilon(1e-12));
  }
}

TEST_CASE("ideal amplification saturates the output noise bound") {
  for (double g : {1.5, 3.0, 10.0}) {
    const AmplifiedCoherentState out = amplify(Complex(0.7, 0.2), ideal_spec(g));
    CHECK(output_x_variance(out) ==
          doctest::Approx(caves_bound_x_variance(g)).epsilon(1e-11));
  }
}

TEST_CASE("non-ideal ancilla preparations exceed the bound") {
  for (double g : {1.5, 3.0}) {
    CHECK(output_x_variance(amplify(Complex(0.0, 0.0), two_term_spec(g))) >
          caves_bound_x_variance(g) + 1e-6);
    CHECK(output_x_variance(amplify(Complex(0.0, 0.0), three_term_spec(g))) >
          caves_bound_x_variance(g) + 1e-6);
  }
}

TEST_CASE("excess noise equals the mean ancilla weight") {
  // Var_x = 1/2 + s * sum lambda_n (n+1): vacuum core plus twice the
  // P-function spread of Re beta.
  const SmearingSpec spec = three_term_spec(2.0);
  const AmplifiedCoherentState out = amplify(Complex(0.0, 0.0), spec);
  const double expected = 0.5 + spec.s() * spec.noise_weight();
  CHECK(output_x_variance(out) == doctest::Approx(expected).epsilon(1e-11));
}
