#include <cmath>
#include <numbers>

#include "ampsim/amplifier.hpp"
#include "ampsim/projection.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace ampsim;

TEST_CASE("vacuum-input parity probabilities, ideal gain sqrt(2)") {
  // T = 1/(1 + 2s); at s = 1 the even outcome takes 2/3.
  const AmplifiedCoherentState st = amplify(Complex(0.0, 0.0), ideal_spec(std::sqrt(2.0)));
  const ProjectedSuperposition plus = project(st, ParitySign::plus);
  const ProjectedSuperposition minus = project(st, ParitySign::minus);
  CHECK(plus.p_sign == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(minus.p_sign == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(plus.p_sign + minus.p_sign == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_FALSE(plus.parity_suppressed);
}

TEST_CASE("parity overlap against brute-force quadrature") {
  const AmplifiedCoherentState st = amplify(Complex(0.4, 0.3), two_term_spec(1.6));
  const double ref = oracle::simpson2d(
      [&](double br, double bi) {
        const Complex b(br, bi);
        return amplified_p(st, b) * std::exp(-2.0 * std::norm(b));
      },
      -7.0, 7.0, 601, -7.0, 7.0, 601);
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  CHECK(ps.parity_overlap == doctest::Approx(ref).epsilon(1e-9));
}

TEST_CASE("large displacement shrinks the parity overlap") {
  const AmplifiedCoherentState st = amplify(Complex(10.0, 0.0), ideal_spec(10.0));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  CHECK(std::abs(ps.parity_overlap) < 1e-40);
  CHECK(ps.p_sign == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("extreme displacement suppresses the overlap beyond double range") {
  const AmplifiedCoherentState st = amplify(Complex(30.0, 0.0), ideal_spec(10.0));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  CHECK(ps.parity_suppressed);
  CHECK(ps.parity_overlap == 0.0);
  CHECK(ps.p_sign == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("quadrature distributions are normalized") {
  const AmplifiedCoherentState st = amplify(Complex(0.0, 1.2), two_term_spec(1.5));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  const Grid1D gx(-14.0, 14.0, 1401);
  const Distribution1D dx = pr_x(ps, gx);
  CHECK(dx.norm == doctest::Approx(1.0).epsilon(1e-6));
  const Distribution1D dp = pr_p(ps, Grid1D(-14.0, 14.0, 2801));
  CHECK(dp.norm == doctest::Approx(1.0).epsilon(1e-6));
  for (double v : dx.values) CHECK(v >= -1e-12);
  for (double v : dp.values) CHECK(v >= -1e-12);
}

TEST_CASE("projected distributions against the wavefunction double integral") {
  // Pr(x) = (1/4p) int d2b P(b) |<x|b> + s<x|-b>|^2, brute-forced here.
  const AmplifiedCoherentState st = amplify(Complex(0.5, 0.4), ideal_spec(1.4));
  for (ParitySign sign : {ParitySign::plus, ParitySign::minus}) {
    const ProjectedSuperposition ps = project(st, sign);
    const double sg = sign_value(sign);
    const Grid1D gx(-3.0, 3.0, 7);
    const Distribution1D dx = pr_x(ps, Grid1D(-12.0, 12.0, 1201));
    for (double x : gx.points()) {
      const double ref = oracle::simpson2d(
                             [&](double br, double bi) {
                               const Complex b(br, bi);
                               return amplified_p(st, b) *
                                      std::norm(xwave(b, x) + sg * xwave(-b, x));
                             },
                             -6.0, 6.0, 401, -6.0, 6.0, 401) /
                         (4.0 * ps.p_sign);
      const int i = static_cast<int>(std::lround((x - dx.grid.lo) / dx.grid.spacing()));
      CHECK(dx.values[static_cast<size_t>(i)] == doctest::Approx(ref).epsilon(1e-8));
    }
  }
}

TEST_CASE("outcome mixture restores the unprojected marginal at zero input") {
  const AmplifiedCoherentState st = amplify(Complex(0.0, 0.0), three_term_spec(1.8));
  const ProjectedSuperposition plus = project(st, ParitySign::plus);
  const ProjectedSuperposition minus = project(st, ParitySign::minus);
  const Grid1D g(-12.0, 12.0, 1201);
  const Distribution1D dp = pr_x(plus, g);
  const Distribution1D dm = pr_x(minus, g);
  const Distribution1D du = pr_x_unprojected(st, g);
  for (int i = 0; i < g.n; ++i) {
    const double mixed = plus.p_sign * dp.values[static_cast<size_t>(i)] +
                         minus.p_sign * dm.values[static_cast<size_t>(i)];
    CHECK(mixed == doctest::Approx(du.values[static_cast<size_t>(i)]).epsilon(1e-10));
  }
}

TEST_CASE("interference fringes appear in p at the expected period") {
  const AmplifiedCoherentState st = amplify(Complex(2.0, 0.0), ideal_spec(1.3));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  const double period = fringe_period(st);
  CHECK(period == doctest::Approx(std::numbers::pi / (std::sqrt(2.0) * 2.6)).epsilon(1e-14));
  const Distribution1D dp = pr_p(ps, Grid1D(-8.0, 8.0, 4001));
  const double vis = fringe_visibility(dp);
  CHECK(vis > 0.1);
  CHECK(vis <= 1.0 + 1e-12);
}

TEST_CASE("coarse grids are refused when fringes are representable") {
  const AmplifiedCoherentState st = amplify(Complex(2.0, 0.0), ideal_spec(1.3));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  CHECK_THROWS_AS(pr_p(ps, Grid1D(-8.0, 8.0, 41)), ResolutionError);
}

TEST_CASE("grids missing the support are refused") {
  const AmplifiedCoherentState st = amplify(Complex(3.0, 0.0), ideal_spec(1.5));
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  CHECK_THROWS_AS(pr_x(ps, Grid1D(-1.0, 1.0, 101)), CoverageError);
}
