#pragma once

#include <vector>

#include "ampsim/measures.hpp"
#include "ampsim/phasespace.hpp"
#include "ampsim/projection.hpp"

namespace ampsim {

// Equal-weight ensemble of N coherent amplitudes inside one coarse-grained
// slot of the pointer scale.
struct ClassicalMixture {
  std::vector<Complex> amplitudes;
  Complex slot_center;
  double slot_radius;
};

// Deterministic sunflower-lattice filling of the slot disc.
ClassicalMixture make_slot_mixture(Complex center, double radius, int n);

// Wigner function of the one-slot mixture: (2/(pi N)) sum_j e^{-2|a - a_j|^2}.
WignerField wigner_classical(const ClassicalMixture& mix, const Grid2D& grid);

// Wigner function of the parity-symmetric two-slot mixture
// (1/2N) sum_j (|a_j><a_j| + |-a_j><-a_j|).
WignerField wigner_two_slot(const ClassicalMixture& mix, const Grid2D& grid);

// Parity projection of the two-slot mixture: probability of the outcome and
// the Wigner field of E_sign rho E_sign / p_sign (diagonal blobs plus the
// slot-suppressed interference term).
struct TwoSlotParityComponent {
  double p_sign;
  WignerField field;
};
TwoSlotParityComponent project_two_slot(const ClassicalMixture& mix, ParitySign sign,
                                        const Grid2D& grid);

// Interference diagnostics of the two-slot state over `grid` (normally a
// window around the +slot, where the pointer is read out): the ratio of the
// largest interference Wigner amplitude to the largest diagonal one.  The
// ratio underflows double precision for well-separated slots; `log10_bound`
// carries the analytic envelope bound max(-2 |a|^2) / ln 10 in that case.
struct InterferenceReport {
  double ratio;
  double log10_bound;
  bool suppressed;
};
InterferenceReport basis_interference(const ClassicalMixture& mix, const Grid2D& grid);

}  // namespace ampsim
