#include "ampsim/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ampsim/errors.hpp"

namespace ampsim {
namespace {

constexpr double kGoldenAngle = 2.399963229728653322;

double two_pi_inv(double v) { return v / std::numbers::pi; }

// Diagonal blob sum of the one-sided slot: (2/(pi N)) sum_j e^{-2|a-a_j|^2}.
double diag_point(const std::vector<Complex>& amps, Complex a) {
  double acc = 0.0;
  for (const Complex& aj : amps) acc += std::exp(-2.0 * std::norm(a - aj));
  return two_pi_inv(2.0 * acc / static_cast<double>(amps.size()));
}

// Interference sum of the parity-symmetrised slot pair:
// (4/(pi N)) e^{-2|a|^2} sum_j cos(4 Im(conj(a) a_j)).
double cross_point(const std::vector<Complex>& amps, Complex a) {
  const double env = std::exp(-2.0 * std::norm(a));
  if (env == 0.0) return 0.0;
  double acc = 0.0;
  for (const Complex& aj : amps) acc += std::cos(4.0 * std::imag(std::conj(a) * aj));
  return two_pi_inv(4.0 * env * acc / static_cast<double>(amps.size()));
}

}  // namespace

ClassicalMixture make_slot_mixture(Complex center, double radius, int n) {
  require_finite(center, "slot center");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidSpecError("slot radius must be positive");
  if (n < 1) throw InvalidSpecError("slot mixture needs at least one amplitude");
  ClassicalMixture mix;
  mix.slot_center = center;
  mix.slot_radius = radius;
  mix.amplitudes.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double r = radius * std::sqrt((j + 0.5) / static_cast<double>(n));
    const double th = kGoldenAngle * j;
    mix.amplitudes.push_back(center + Complex(r * std::cos(th), r * std::sin(th)));
  }
  return mix;
}

WignerField wigner_classical(const ClassicalMixture& mix, const Grid2D& grid) {
  return sample_field(grid, [&](Complex a) { return diag_point(mix.amplitudes, a); });
}

WignerField wigner_two_slot(const ClassicalMixture& mix, const Grid2D& grid) {
  return sample_field(grid, [&](Complex a) {
    return 0.5 * (diag_point(mix.amplitudes, a) + diag_point(mix.amplitudes, -a));
  });
}

TwoSlotParityComponent project_two_slot(const ClassicalMixture& mix, ParitySign sign,
                                        const Grid2D& grid) {
  const double sg = sign_value(sign);
  double t = 0.0;
  for (const Complex& aj : mix.amplitudes) t += std::exp(-2.0 * std::norm(aj));
  t /= static_cast<double>(mix.amplitudes.size());
  const double p_sign = 0.5 * (1.0 + sg * t);
  if (p_sign < 1e-14) throw ZeroProbabilityError("parity outcome probability vanishes");
  WignerField field = sample_field(grid, [&](Complex a) {
    const double diag = 0.5 * (diag_point(mix.amplitudes, a) + diag_point(mix.amplitudes, -a));
    return (0.5 * diag + 0.25 * sg * cross_point(mix.amplitudes, a)) / p_sign;
  });
  return TwoSlotParityComponent{p_sign, std::move(field)};
}

InterferenceReport basis_interference(const ClassicalMixture& mix, const Grid2D& grid) {
  double max_diag = 0.0;
  double max_cross = 0.0;
  double max_log_env = -std::numeric_limits<double>::infinity();
  for (double x : grid.x.points()) {
    for (double p : grid.p.points()) {
      const Complex a(x, p);
      max_diag = std::max(max_diag, diag_point(mix.amplitudes, a));
      max_cross = std::max(max_cross, std::abs(cross_point(mix.amplitudes, a)));
      max_log_env = std::max(max_log_env, -2.0 * std::norm(a));
    }
  }
  if (max_diag <= 0.0) throw CoverageError("interference window misses the slot support");
  InterferenceReport rep;
  const double log_bound =
      (max_log_env + std::log(4.0 / std::numbers::pi) - std::log(max_diag)) / std::numbers::ln10;
  rep.log10_bound = log_bound;
  if (max_cross > 0.0) {
    rep.ratio = max_cross / max_diag;
    rep.suppressed = false;
  } else {
    rep.ratio = 0.0;
    rep.suppressed = true;
  }
  return rep;
}

}  // namespace ampsim
