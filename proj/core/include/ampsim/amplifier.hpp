#pragma once

#include "ampsim/smear_integral.hpp"
#include "ampsim/states.hpp"

namespace ampsim {

// Phase-preserving linear amplification of a coherent input: displacement
// of the amplitude by the gain followed by smearing with Pi^{-1}.  The map
// is kept symbolic; downstream quantities integrate against the smearing
// function directly.
AmplifiedCoherentState amplify(Complex alpha, const SmearingSpec& spec);

// Mean output amplitude, computed by quadrature over the P function.
Complex mean_amplitude(const AmplifiedCoherentState& state, int order = 48);

// Output x-quadrature variance <x^2> - <x>^2 by quadrature over the
// P function (coherent-state core variance 1/2 included).
double output_x_variance(const AmplifiedCoherentState& state, int order = 48);

// Minimum output variance allowed for a phase-preserving amplifier with a
// coherent (variance 1/2) input: g^2/2 + (g^2 - 1)/2.
double caves_bound_x_variance(double g);

}  // namespace ampsim
