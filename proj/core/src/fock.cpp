#include "ampsim/fock.hpp"

#include <cmath>
#include <numbers>

#include "ampsim/errors.hpp"
#include "ampsim/smear_integral.hpp"

namespace ampsim {
namespace {

constexpr int kMaxDim = 200;
constexpr double kMaxDisplacement = 4.0;

// <n|beta> by the stable upward recurrence v_{n+1} = v_n beta / sqrt(n+1).
std::vector<Complex> coherent_vector(Complex beta, int dim) {
  std::vector<Complex> v(static_cast<std::size_t>(dim));
  v[0] = std::exp(-0.5 * std::norm(beta));
  for (int n = 0; n + 1 < dim; ++n)
    v[static_cast<std::size_t>(n) + 1] = v[static_cast<std::size_t>(n)] * beta / std::sqrt(n + 1.0);
  return v;
}

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw InvalidSpecError("number-basis cutoff out of range");
}

// Normalised Hermite functions psi_n(x) for n < dim.
std::vector<double> hermite_functions(double x, int dim) {
  std::vector<double> psi(static_cast<std::size_t>(dim));
  psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (dim > 1) psi[1] = std::sqrt(2.0) * x * psi[0];
  for (int n = 1; n + 1 < dim; ++n)
    psi[static_cast<std::size_t>(n) + 1] =
        std::sqrt(2.0 / (n + 1.0)) * x * psi[static_cast<std::size_t>(n)] -
        std::sqrt(n / (n + 1.0)) * psi[static_cast<std::size_t>(n) - 1];
  return psi;
}

}  // namespace

FockDensity::FockDensity(int dim, std::vector<Complex> elements) : dim_(dim), elements_(std::move(elements)) {
  check_dim(dim);
  if (elements_.size() != static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_))
    throw InvalidSpecError("density matrix storage does not match cutoff");
}

double FockDensity::trace() const {
  double t = 0.0;
  for (int n = 0; n < dim_; ++n) t += at(n, n).real();
  return t;
}

void FockDensity::check_invariants(double tol) const {
  for (int m = 0; m < dim_; ++m) {
    if (at(m, m).real() < -tol || std::abs(at(m, m).imag()) > tol)
      throw DomainError("density matrix diagonal is not a probability");
    for (int n = m + 1; n < dim_; ++n)
      if (std::abs(at(m, n) - std::conj(at(n, m))) > tol)
        throw DomainError("density matrix is not Hermitian");
  }
  if (std::abs(trace() - 1.0) > tol) throw DomainError("density matrix trace is not one");
}

void FockDensity::renormalize() {
  const double t = trace();
  if (t < 1e-14) throw ZeroProbabilityError("cannot renormalize a vanishing density matrix");
  for (Complex& e : elements_) e /= t;
}

FockDensity fock_from_coherent(Complex alpha, int dim) {
  check_dim(dim);
  if (std::abs(alpha) > kMaxDisplacement)
    throw DomainError("coherent amplitude beyond the oracle's reliable range");
  const std::vector<Complex> v = coherent_vector(alpha, dim);
  std::vector<Complex> e(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
  for (int m = 0; m < dim; ++m)
    for (int n = 0; n < dim; ++n)
      e[static_cast<std::size_t>(m) * dim + n] = v[static_cast<std::size_t>(m)] * std::conj(v[static_cast<std::size_t>(n)]);
  return FockDensity(dim, std::move(e));
}

FockDensity fock_from_amplified(const AmplifiedCoherentState& state, int dim) {
  check_dim(dim);
  const Complex center = state.mean();
  if (std::abs(center) > kMaxDisplacement)
    throw DomainError("displacement beyond the oracle's reliable range");
  const SmearingSpec& spec = state.spec;
  const double s = spec.s();
  const SmearNodes nd = smear_nodes(spec, dim + 16);
  const std::size_t nn = nd.coords.size();

  std::vector<Complex> e(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Complex(0.0, 0.0));
  for (std::size_t j = 0; j < nn; ++j) {
    for (std::size_t k = 0; k < nn; ++k) {
      const double z = (nd.coords[j] * nd.coords[j] + nd.coords[k] * nd.coords[k]) / s;
      double lam = 0.0;
      double term = 1.0;
      for (int m = 0; m < spec.terms(); ++m) {
        if (m > 0) term *= z / static_cast<double>(m);
        lam += spec.lambdas[static_cast<std::size_t>(m)] * term;
      }
      const double w = nd.weights[j] * nd.weights[k] * lam / std::numbers::pi;
      const Complex beta = center + Complex(nd.coords[j], nd.coords[k]);
      const std::vector<Complex> v = coherent_vector(beta, dim);
      for (int m = 0; m < dim; ++m) {
        const Complex wm = w * v[static_cast<std::size_t>(m)];
        for (int n = 0; n < dim; ++n)
          e[static_cast<std::size_t>(m) * dim + n] += wm * std::conj(v[static_cast<std::size_t>(n)]);
      }
    }
  }
  FockDensity rho(dim, std::move(e));
  if (1.0 - rho.trace() > 1e-6)
    throw TruncationError("number-basis cutoff loses more than 1e-6 of the trace");
  return rho;
}

FockDensity fock_from_thermal(const ThermalCoherentState& state, int dim) {
  return fock_from_amplified(thermal_as_amplified(state), dim);
}

FockParityResult fock_project_parity(const FockDensity& rho, ParitySign sign) {
  const int dim = rho.dim();
  const int keep = sign == ParitySign::plus ? 0 : 1;
  std::vector<Complex> e(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Complex(0.0, 0.0));
  double p = 0.0;
  for (int m = keep; m < dim; m += 2) {
    p += rho.at(m, m).real();
    for (int n = keep; n < dim; n += 2) e[static_cast<std::size_t>(m) * dim + n] = rho.at(m, n);
  }
  if (p < 1e-14) throw ZeroProbabilityError("parity outcome probability vanishes in the number basis");
  FockDensity out(dim, std::move(e));
  for (int m = keep; m < dim; m += 2)
    for (int n = keep; n < dim; n += 2) out.at(m, n) /= p;
  return FockParityResult{p, std::move(out)};
}

double fock_purity(const FockDensity& rho) {
  double acc = 0.0;
  for (int m = 0; m < rho.dim(); ++m)
    for (int n = 0; n < rho.dim(); ++n) acc += std::norm(rho.at(m, n));
  return acc;
}

namespace {

Distribution1D quadrature_density(const FockDensity& rho, const Grid1D& grid, bool momentum) {
  const int dim = rho.dim();
  std::vector<double> vals(static_cast<std::size_t>(grid.n));
  // i^{n-m} phases for <p|n> = (-i)^n psi_n(p); trivial for the x quadrature.
  for (int i = 0; i < grid.n; ++i) {
    const std::vector<double> psi = hermite_functions(grid.point(i), dim);
    double acc = 0.0;
    for (int m = 0; m < dim; ++m) {
      for (int n = 0; n < dim; ++n) {
        Complex el = rho.at(m, n);
        if (momentum) {
          switch (((n - m) % 4 + 4) % 4) {
            case 1: el *= Complex(0.0, 1.0); break;
            case 2: el = -el; break;
            case 3: el *= Complex(0.0, -1.0); break;
            default: break;
          }
        }
        acc += (psi[static_cast<std::size_t>(m)] * psi[static_cast<std::size_t>(n)]) * el.real();
      }
    }
    vals[static_cast<std::size_t>(i)] = acc;
  }
  Distribution1D d{grid, std::move(vals), 0.0};
  d.norm = trapezoid(grid, d.values);
  return d;
}

}  // namespace

Distribution1D fock_pr_x(const FockDensity& rho, const Grid1D& grid) {
  return quadrature_density(rho, grid, false);
}

Distribution1D fock_pr_p(const FockDensity& rho, const Grid1D& grid) {
  return quadrature_density(rho, grid, true);
}

WignerField fock_wigner(const FockDensity& rho, const Grid2D& grid) {
  const int dim = rho.dim();
  return sample_field(grid, [&](Complex a) {
    // W(a) = (2/pi) sum_{mn} rho_{mn} (-1)^m <n|D(2a)|m>, via the
    // associated-Laguerre ladder in log-scaled form.
    const Complex b = 2.0 * a;
    const double b2 = std::norm(b);
    // D_{nm} = sqrt(m!/n!) b^{n-m} L_m^{(n-m)}(b2) e^{-b2/2}  (n >= m).
    // Build all columns by the recurrence in the lower index.
    double acc = 0.0;
    // L_m^{(k)}(x): L_0 = 1, L_1 = 1 + k - x,
    // (m+1) L_{m+1} = (2m + 1 + k - x) L_m - (m + k) L_{m-1}.
    for (int k = 0; k < dim; ++k) {
      // column offset k = n - m >= 0; the k < 0 entries follow by Hermiticity.
      double lprev = 0.0;
      double lcur = 1.0;
      // log of sqrt(m!/(m+k)!) |b|^k e^{-b2/2}
      double logmag = -0.5 * b2 + 0.5 * k * std::log(b2 == 0.0 ? 1.0 : b2);
      for (int j = 1; j <= k; ++j) logmag -= 0.5 * std::log(static_cast<double>(j));
      const Complex phase = (b2 == 0.0) ? Complex(k == 0 ? 1.0 : 0.0, 0.0)
                                        : std::pow(b / std::abs(b), k);
      for (int m = 0; m + k < dim; ++m) {
        if (m > 0) {
          const double lnext =
              ((2.0 * (m - 1) + 1.0 + k - b2) * lcur - (m - 1.0 + k) * lprev) / m;
          lprev = lcur;
          lcur = lnext;
          // keep sqrt(m!/(m+k)!) current: multiply by sqrt(m/(m+k))
          logmag += 0.5 * (std::log(static_cast<double>(m)) - std::log(static_cast<double>(m + k)));
        }
        const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
        const double mag = (logmag < kFlushLog) ? 0.0 : std::exp(logmag);
        if (mag == 0.0) continue;
        const Complex d_nm = mag * phase * lcur;  // <n|D(2a)|m>
        const double mult = (k == 0) ? 1.0 : 2.0;
        acc += sgn * mult * (rho.at(m, m + k) * d_nm).real();
      }
    }
    return 2.0 / std::numbers::pi * acc;
  });
}

}  // namespace ampsim
