#include <cmath>

#include "ampsim/amplifier.hpp"
#include "ampsim/fock.hpp"
#include "ampsim/measures.hpp"
#include "ampsim/projection.hpp"
#include "doctest.h"

using namespace ampsim;

TEST_CASE("coherent density matrix basics") {
  const Complex alpha(1.3, -0.6);
  const FockDensity rho = fock_from_coherent(alpha, 60);
  CHECK(rho.trace() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_NOTHROW(rho.check_invariants());
  CHECK(fock_purity(rho) == doctest::Approx(1.0).epsilon(1e-10));
  // <n> = |alpha|^2
  double nbar = 0.0;
  for (int n = 0; n < rho.dim(); ++n) nbar += n * rho.at(n, n).real();
  CHECK(nbar == doctest::Approx(std::norm(alpha)).epsilon(1e-10));
}

TEST_CASE("out-of-range requests are refused") {
  CHECK_THROWS_AS(fock_from_coherent(Complex(5.0, 0.0), 60), DomainError);
  CHECK_THROWS_AS(fock_from_coherent(Complex(1.0, 0.0), 0), InvalidSpecError);
  CHECK_THROWS_AS(fock_from_coherent(Complex(1.0, 0.0), 500), InvalidSpecError);
  // cutoff far too small for the state
  CHECK_THROWS_AS(fock_from_amplified(amplify(Complex(2.0, 0.0), ideal_spec(1.8)), 8),
                  TruncationError);
}

TEST_CASE("amplified density matrix reproduces closed-form purity") {
  const AmplifiedCoherentState st = amplify(Complex(0.8, 0.4), ideal_spec(1.4));
  FockDensity rho = fock_from_amplified(st, 70);
  rho.renormalize();
  CHECK_NOTHROW(rho.check_invariants(1e-7));
  CHECK(fock_purity(rho) == doctest::Approx(ideal_purity(1.4)).epsilon(1e-7));
}

TEST_CASE("thermal density matrix reproduces the inverse-variance purity") {
  const ThermalCoherentState th(4.0, Complex(1.0, 0.0));
  FockDensity rho = fock_from_thermal(th, 80);
  rho.renormalize();
  CHECK(fock_purity(rho) == doctest::Approx(0.25).epsilon(1e-7));
}

TEST_CASE("number-basis parity projection matches the overlap formula") {
  const AmplifiedCoherentState st = amplify(Complex(0.6, 0.3), two_term_spec(1.5));
  FockDensity rho = fock_from_amplified(st, 70);
  rho.renormalize();
  const FockParityResult even = fock_project_parity(rho, ParitySign::plus);
  const FockParityResult odd = fock_project_parity(rho, ParitySign::minus);
  CHECK(even.p_sign + odd.p_sign == doctest::Approx(1.0).epsilon(1e-10));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  CHECK(even.p_sign == doctest::Approx(ps.p_sign).epsilon(1e-7));
  CHECK_NOTHROW(even.state.check_invariants(1e-7));
}

TEST_CASE("quadrature densities match the wavefunction forms") {
  const Complex alpha(1.2, 0.7);
  const FockDensity rho = fock_from_coherent(alpha, 80);
  const Grid1D g(-8.0, 8.0, 321);
  const Distribution1D dx = fock_pr_x(rho, g);
  const Distribution1D dp = fock_pr_p(rho, g);
  CHECK(dx.norm == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(dp.norm == doctest::Approx(1.0).epsilon(1e-8));
  for (int i = 40; i < g.n; i += 40) {
    CHECK(dx.values[static_cast<size_t>(i)] ==
          doctest::Approx(std::norm(xwave(alpha, g.point(i)))).epsilon(1e-8));
    CHECK(dp.values[static_cast<size_t>(i)] ==
          doctest::Approx(std::norm(pwave(alpha, g.point(i)))).epsilon(1e-8));
  }
}

TEST_CASE("number-basis Wigner matches the coherent Gaussian") {
  const Complex alpha(0.9, -0.4);
  const FockDensity rho = fock_from_coherent(alpha, 70);
  const Grid2D grid = Grid2D::square(-4.0, 4.0, 41);
  const WignerField got = fock_wigner(rho, grid);
  const WignerField ref = wigner_coherent(alpha, grid);
  for (int ix = 0; ix < grid.x.n; ix += 5)
    for (int ip = 0; ip < grid.p.n; ip += 5)
      CHECK(std::abs(got.at(ix, ip) - ref.at(ix, ip)) < 1e-9);
}

TEST_CASE("projected Wigner matches the closed-form pipeline") {
  const AmplifiedCoherentState st = amplify(Complex(0.7, 0.0), ideal_spec(1.3));
  FockDensity rho = fock_from_amplified(st, 70);
  rho.renormalize();
  const FockParityResult even = fock_project_parity(rho, ParitySign::plus);
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  const Grid2D grid = Grid2D::square(-3.0, 3.0, 31);
  const WignerField got = fock_wigner(even.state, grid);
  const WignerField ref = wigner(ps, grid);
  for (int ix = 0; ix < grid.x.n; ix += 3)
    for (int ip = 0; ip < grid.p.n; ip += 3)
      CHECK(std::abs(got.at(ix, ip) - ref.at(ix, ip)) < 1e-7);
}
