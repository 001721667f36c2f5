#include "ampsim/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ampsim {

SmearingSpec::SmearingSpec(double gain, std::vector<double> lams)
    : g(gain), lambdas(std::move(lams)) {
  if (!std::isfinite(g) || !(g > 1.0))
    throw InvalidSpecError("SmearingSpec: gain must be finite and > 1");
  if (lambdas.empty())
    throw InvalidSpecError("SmearingSpec: lambda sequence must be non-empty");
  double sum = 0.0;
  for (double l : lambdas) {
    if (!std::isfinite(l) || l < 0.0)
      throw InvalidSpecError("SmearingSpec: lambdas must be non-negative");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw InvalidSpecError("SmearingSpec: lambdas must sum to 1 within 1e-9");
}

double SmearingSpec::noise_weight() const {
  double w = 0.0;
  for (size_t n = 0; n < lambdas.size(); ++n)
    w += lambdas[n] * (static_cast<double>(n) + 1.0);
  return w;
}

SmearingSpec ideal_spec(double g) { return SmearingSpec(g, {1.0}); }
SmearingSpec two_term_spec(double g) { return SmearingSpec(g, {0.3, 0.7}); }
SmearingSpec three_term_spec(double g) { return SmearingSpec(g, {0.2, 0.3, 0.5}); }

ThermalCoherentState::ThermalCoherentState(double variance, Complex displacement)
    : v(variance), d(displacement) {
  if (!std::isfinite(v) || !(v > 1.0))
    throw DomainError("ThermalCoherentState: variance must be > 1");
  require_finite(d, "ThermalCoherentState");
}

AmplifiedCoherentState::AmplifiedCoherentState(Complex a, SmearingSpec sp)
    : alpha(a), spec(std::move(sp)) {
  require_finite(alpha, "AmplifiedCoherentState");
}

double smearing_value(const SmearingSpec& spec, Complex delta) {
  require_finite(delta, "smearing_value");
  const double s = spec.s();
  const double r2 = std::norm(delta) / s;
  // log-sum-exp over terms lambda_n r2^n / n!, all non-negative.
  double max_log = -std::numeric_limits<double>::infinity();
  std::vector<double> logs(spec.lambdas.size(),
                           -std::numeric_limits<double>::infinity());
  for (size_t n = 0; n < spec.lambdas.size(); ++n) {
    if (spec.lambdas[n] == 0.0) continue;
    double lg = std::log(spec.lambdas[n]) - std::lgamma(n + 1.0);
    if (n > 0) {
      if (r2 == 0.0) continue;  // r2^n = 0
      lg += n * std::log(r2);
    }
    logs[n] = lg;
    max_log = std::max(max_log, lg);
  }
  if (!std::isfinite(max_log)) return 0.0;
  double acc = 0.0;
  for (double lg : logs)
    if (std::isfinite(lg)) acc += std::exp(lg - max_log);
  double total_log = -std::norm(delta) / s - std::log(M_PI * s) + max_log + std::log(acc);
  return std::exp(total_log);
}

double p_thermal(const ThermalCoherentState& state, Complex beta) {
  require_finite(beta, "p_thermal");
  const double w = state.v - 1.0;
  return 2.0 / (M_PI * w) * std::exp(-2.0 * std::norm(beta - state.d) / w);
}

double amplified_p(const AmplifiedCoherentState& state, Complex beta) {
  return smearing_value(state.spec, beta - state.mean());
}

AmplifiedCoherentState thermal_as_amplified(const ThermalCoherentState& state) {
  const double g = state.equivalent_gain();
  return AmplifiedCoherentState(state.d / g, ideal_spec(g));
}

}  // namespace ampsim
