// End-to-end acceptance checks.  Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any fail.  An optional argument restricts the
// run to a single criterion number.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "ampsim/amplifier.hpp"
#include "ampsim/classical.hpp"
#include "ampsim/fock.hpp"
#include "ampsim/measures.hpp"
#include "ampsim/projection.hpp"

using namespace ampsim;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

SmearingSpec spec_two(double g) { return two_term_spec(g); }
SmearingSpec spec_three(double g) { return three_term_spec(g); }

// Full-support momentum distribution of the even-parity projected state,
// sampled finely enough for the interference fringes.
double projected_p_visibility(Complex alpha, const SmearingSpec& spec) {
  const AmplifiedCoherentState st = amplify(alpha, spec);
  const ProjectedSuperposition ps = project(st, ParitySign::plus);
  const double sigma = std::sqrt(0.5 + spec.s() * spec.noise_weight());
  const double half = std::max(8.0 * sigma, 4.0);
  const double h = fringe_period(st) / 24.0;
  const Distribution1D dp = pr_p(ps, Grid1D::symmetric(half, h), 16);
  return fringe_visibility(dp);
}

bool criterion_gains(std::string& detail) {
  const double target = 0.01;
  const double g1 = purity_matched_gain({1.0}, target);
  const double g2 = purity_matched_gain({0.3, 0.7}, target);
  const double g3 = purity_matched_gain({0.2, 0.3, 0.5}, target);
  char buf[160];
  std::snprintf(buf, sizeof(buf), "g = %.4f / %.4f / %.4f for target purity %.2f", g1, g2, g3,
                target);
  detail = buf;
  return close(g1, 7.10, 0.02) && close(g2, 5.28, 0.02) && close(g3, 4.56, 0.02);
}

bool criterion_thermal_purity(std::string& detail) {
  const double p = purity(ThermalCoherentState(100.0, Complex(100.0, 0.0)));
  detail = "purity(v=100) = " + std::to_string(p);
  return close(p, 0.0100, 1e-4);
}

bool criterion_visibility_order(std::string& detail) {
  const Complex alpha(10.0, 0.0);
  const double g = 10.0;
  const double v_ideal = projected_p_visibility(alpha, ideal_spec(g));
  const double v_two = projected_p_visibility(alpha, spec_two(g));
  const double v_three = projected_p_visibility(alpha, spec_three(g));
  // Thermal pointer state with the same mean, through its amplifier form.
  const AmplifiedCoherentState th_eq =
      thermal_as_amplified(ThermalCoherentState(100.0, Complex(100.0, 0.0)));
  const double v_thermal = projected_p_visibility(th_eq.alpha, th_eq.spec);
  // A falling lambda sequence keeps more visibility than a rising one.
  const double v_fall =
      projected_p_visibility(alpha, SmearingSpec(g, {0.5, 0.3, 0.2}));
  const double v_flat =
      projected_p_visibility(alpha, SmearingSpec(g, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}));
  char buf[240];
  std::snprintf(buf, sizeof(buf),
                "vis ideal/two/three = %.4f/%.4f/%.4f, thermal(v=100) = %.4f, "
                "falling/flat/rising = %.4f/%.4f/%.4f",
                v_ideal, v_two, v_three, v_thermal, v_fall, v_flat, v_three);
  detail = buf;
  return v_ideal > v_two && v_two > v_three && v_three > 0.0 && v_thermal > v_ideal &&
         v_fall > v_flat && v_flat > v_three;
}

bool criterion_macroscopicity_order(std::string& detail) {
  const WignerField cal = wigner_coherent(Complex(0.7, -0.2), Grid2D::square(-5.0, 5.0, 401));
  const double s_coh = macroscopicity(cal);
  auto s_of = [](const SmearingSpec& spec) {
    const AmplifiedCoherentState st = amplify(Complex(10.0, 0.0), spec);
    // The quadrature is exact once the order clears the lambda polynomial
    // degree, so a low order keeps the windowed sweep fast.
    return macroscopicity(project(st, ParitySign::plus), 0.01, 16);
  };
  const double s_ideal = s_of(ideal_spec(10.0));
  const double s_two = s_of(spec_two(10.0));
  const double s_three = s_of(spec_three(10.0));
  char buf[200];
  std::snprintf(buf, sizeof(buf), "S coherent = %.2e, S ideal/two/three = %.4f/%.4f/%.4f",
                s_coh, s_ideal, s_two, s_three);
  detail = buf;
  return std::abs(s_coh) <= 1e-3 && s_ideal > s_two && s_two > s_three;
}

bool criterion_matched_gain_visibility(std::string& detail) {
  // Pointer displacement held at g*alpha = 100 while each preparation runs
  // at its purity-matched gain.
  const double target = 0.01;
  const double g1 = purity_matched_gain({1.0}, target);
  const double g2 = purity_matched_gain({0.3, 0.7}, target);
  const double g3 = purity_matched_gain({0.2, 0.3, 0.5}, target);
  const double v1 = projected_p_visibility(Complex(100.0 / g1, 0.0), SmearingSpec(g1, {1.0}));
  const double v2 =
      projected_p_visibility(Complex(100.0 / g2, 0.0), SmearingSpec(g2, {0.3, 0.7}));
  const double v3 =
      projected_p_visibility(Complex(100.0 / g3, 0.0), SmearingSpec(g3, {0.2, 0.3, 0.5}));
  char buf[160];
  std::snprintf(buf, sizeof(buf), "vis at matched gains = %.4f / %.4f / %.4f", v1, v2, v3);
  detail = buf;
  return v1 > v2 && v2 > v3 && v3 > 0.0;
}

bool criterion_oracle_equivalence(std::string& detail) {
  const AmplifiedCoherentState st = amplify(Complex(2.0, 0.0), SmearingSpec(1.5, {0.3, 0.7}));
  FockDensity rho = fock_from_amplified(st, 80);
  rho.renormalize();
  double worst_purity = std::abs(fock_purity(rho) - purity(st));
  bool ok = worst_purity <= 1e-6;

  const ProjectedSuperposition plus = project(st, ParitySign::plus);
  const FockParityResult even = fock_project_parity(rho, ParitySign::plus);
  const double dp_sign = std::abs(even.p_sign - plus.p_sign);
  ok = ok && dp_sign <= 1e-8;

  const Grid1D gq(-10.0, 10.0, 1601);
  const Distribution1D ax = pr_x(plus, gq);
  const Distribution1D fx = fock_pr_x(even.state, gq);
  const Distribution1D ap = pr_p(plus, gq);
  const Distribution1D fp = fock_pr_p(even.state, gq);
  double worst_q = 0.0;
  for (int i = 0; i < gq.n; ++i) {
    worst_q = std::max(worst_q, std::abs(ax.values[static_cast<size_t>(i)] -
                                         fx.values[static_cast<size_t>(i)]));
    worst_q = std::max(worst_q, std::abs(ap.values[static_cast<size_t>(i)] -
                                         fp.values[static_cast<size_t>(i)]));
  }
  ok = ok && worst_q <= 1e-5;

  const Grid2D gw = Grid2D::square(-6.0, 6.0, 61);
  const WignerField aw = wigner(plus, gw);
  const WignerField fw = fock_wigner(even.state, gw);
  double worst_w = 0.0;
  for (int ix = 0; ix < gw.x.n; ++ix)
    for (int ip = 0; ip < gw.p.n; ++ip)
      worst_w = std::max(worst_w, std::abs(aw.at(ix, ip) - fw.at(ix, ip)));
  ok = ok && worst_w <= 1e-4;

  // S on a shared grid so discretization cancels in the comparison.
  const Grid2D gs = Grid2D::square(-8.0, 8.0, 161);
  const double ds =
      std::abs(macroscopicity(wigner(plus, gs)) - macroscopicity(fock_wigner(even.state, gs)));
  ok = ok && ds <= 1e-3;

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "|dPurity| = %.1e, |dp+| = %.1e, |dPr| = %.1e, |dW| = %.1e, |dS| = %.1e",
                worst_purity, dp_sign, worst_q, worst_w, ds);
  detail = buf;
  return ok;
}

bool criterion_invariants(std::string& detail) {
  bool ok = true;
  // Smearing functions stay normalized at large gain.
  for (const SmearingSpec& spec : {ideal_spec(10.0), spec_two(10.0), spec_three(10.0)}) {
    const Complex total = smear_integral(spec, GaussianKernel{}).collapse();
    ok = ok && close(total.real(), 1.0, 1e-10) && std::abs(total.imag()) < 1e-12;
  }
  // Output-noise floor saturated exactly by the ideal preparation.
  for (double g : {1.5, 4.0, 10.0}) {
    ok = ok && close(output_x_variance(amplify(Complex(1.0, 0.0), ideal_spec(g))),
                     caves_bound_x_variance(g), 1e-8);
    ok = ok && output_x_variance(amplify(Complex(1.0, 0.0), spec_two(g))) >
                   caves_bound_x_variance(g) + 1e-6;
  }
  // Thermal pointer state is isomorphic to an ideal amplified one.
  const ThermalCoherentState th(100.0, Complex(100.0, 0.0));
  ok = ok && close(purity(th), purity(thermal_as_amplified(th)), 1e-10);
  ok = ok && close(ideal_purity(th.equivalent_gain()), purity(th), 1e-10);
  // Parity outcomes are exhaustive and at zero input the outcome mixture
  // restores the unprojected quadrature marginal.
  const AmplifiedCoherentState st0 = amplify(Complex(0.0, 0.0), spec_three(2.0));
  const ProjectedSuperposition pp = project(st0, ParitySign::plus);
  const ProjectedSuperposition pm = project(st0, ParitySign::minus);
  ok = ok && close(pp.p_sign + pm.p_sign, 1.0, 1e-12);
  const Grid1D g0(-14.0, 14.0, 701);
  const Distribution1D d_plus = pr_x(pp, g0);
  const Distribution1D d_minus = pr_x(pm, g0);
  const Distribution1D d_unproj = pr_x_unprojected(st0, g0);
  double worst = 0.0;
  for (int i = 0; i < g0.n; ++i)
    worst = std::max(worst, std::abs(pp.p_sign * d_plus.values[static_cast<size_t>(i)] +
                                     pm.p_sign * d_minus.values[static_cast<size_t>(i)] -
                                     d_unproj.values[static_cast<size_t>(i)]));
  ok = ok && worst < 1e-10;
  detail = "normalization, noise floor, thermal isomorphism, outcome mixture";
  return ok;
}

bool criterion_classical_slot(std::string& detail) {
  const ClassicalMixture mix = make_slot_mixture(Complex(10.0, 0.0), 0.25, 64);
  const Grid2D window(Grid1D(9.75, 10.25, 101), Grid1D(-0.25, 0.25, 101));
  const InterferenceReport rep = basis_interference(mix, window);
  const bool suppressed_ok =
      (rep.suppressed && rep.log10_bound < -80.0) || (!rep.suppressed && rep.ratio < 1e-80);

  const Grid2D grid = Grid2D::square(-12.0, 12.0, 241);
  const TwoSlotParityComponent plus = project_two_slot(mix, ParitySign::plus, grid);
  const TwoSlotParityComponent minus = project_two_slot(mix, ParitySign::minus, grid);
  const WignerField both = wigner_two_slot(mix, grid);
  double worst = 0.0;
  for (int ix = 0; ix < grid.x.n; ++ix)
    for (int ip = 0; ip < grid.p.n; ++ip)
      worst = std::max(worst, std::abs(plus.p_sign * plus.field.at(ix, ip) +
                                       minus.p_sign * minus.field.at(ix, ip) -
                                       both.at(ix, ip)));
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "interference ratio = %.1e (log10 bound %.1f), decomposition gap = %.1e",
                rep.ratio, rep.log10_bound, worst);
  detail = buf;
  return suppressed_ok && worst < 1e-12;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "purity-matched gains", criterion_gains},
      {2, "thermal pointer purity", criterion_thermal_purity},
      {3, "fringe visibility ordering", criterion_visibility_order},
      {4, "macroscopicity ordering", criterion_macroscopicity_order},
      {5, "visibility at matched gains", criterion_matched_gain_visibility},
      {6, "number-basis oracle equivalence", criterion_oracle_equivalence},
      {7, "analytic invariants", criterion_invariants},
      {8, "classical slot mixture", criterion_classical_slot},
  };
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_ok = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.number != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d (%s): %s — %s\n", c.number, c.name.c_str(),
                ok ? "PASS" : "FAIL", detail.c_str());
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
