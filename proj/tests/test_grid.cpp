#include "ampsim/grid.hpp"
#include "doctest.h"

using namespace ampsim;

TEST_CASE("grid construction and sampling") {
  const Grid1D g(-2.0, 2.0, 5);
  CHECK(g.spacing() == doctest::Approx(1.0));
  CHECK(g.point(0) == doctest::Approx(-2.0));
  CHECK(g.point(4) == doctest::Approx(2.0));
  CHECK(g.points().size() == 5);
  CHECK_THROWS_AS(Grid1D(1.0, -1.0, 10), DomainError);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 1), DomainError);
}

TEST_CASE("symmetric and centered builders respect the spacing cap") {
  const Grid1D s = Grid1D::symmetric(3.0, 0.7);
  CHECK(s.lo == doctest::Approx(-s.hi));
  CHECK(s.hi >= 3.0);
  CHECK(s.spacing() <= 0.7 + 1e-12);
  const Grid1D c = Grid1D::centered(5.0, 2.0, 0.5);
  CHECK(0.5 * (c.lo + c.hi) == doctest::Approx(5.0));
}

TEST_CASE("trapezoid rule integrates a linear function exactly") {
  const Grid1D g(0.0, 1.0, 11);
  std::vector<double> v;
  for (double x : g.points()) v.push_back(3.0 * x + 1.0);
  CHECK(trapezoid(g, v) == doctest::Approx(2.5).epsilon(1e-14));
}
