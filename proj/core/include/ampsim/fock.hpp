#pragma once

#include <vector>

#include "ampsim/measures.hpp"
#include "ampsim/projection.hpp"
#include "ampsim/states.hpp"

namespace ampsim {

// Dense number-basis density matrix, used as an independent cross-check of
// the closed-form phase-space pipeline.  Kept deliberately brute-force.
class FockDensity {
 public:
  FockDensity(int dim, std::vector<Complex> elements);

  int dim() const { return dim_; }
  Complex at(int m, int n) const { return elements_[static_cast<std::size_t>(m) * dim_ + n]; }
  Complex& at(int m, int n) { return elements_[static_cast<std::size_t>(m) * dim_ + n]; }

  double trace() const;
  // Enforces Hermiticity / unit trace / positivity-of-diagonal to tolerance.
  void check_invariants(double tol = 1e-9) const;
  void renormalize();

 private:
  int dim_;
  std::vector<Complex> elements_;
};

FockDensity fock_from_coherent(Complex alpha, int dim);

// Builds the amplified state by quadrature over its coherent-state P-like
// weight.  Throws TruncationError if the retained trace falls short of one
// by more than 1e-6 (cutoff too small for the chosen parameters).
FockDensity fock_from_amplified(const AmplifiedCoherentState& state, int dim);
FockDensity fock_from_thermal(const ThermalCoherentState& state, int dim);

struct FockParityResult {
  double p_sign;
  FockDensity state;  // renormalised projected block
};
FockParityResult fock_project_parity(const FockDensity& rho, ParitySign sign);

double fock_purity(const FockDensity& rho);
Distribution1D fock_pr_x(const FockDensity& rho, const Grid1D& grid);
Distribution1D fock_pr_p(const FockDensity& rho, const Grid1D& grid);
WignerField fock_wigner(const FockDensity& rho, const Grid2D& grid);

}  // namespace ampsim
