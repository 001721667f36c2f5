#include "ampsim/smear_integral.hpp"

#include <cmath>

#include "ampsim/gauss_hermite.hpp"

namespace ampsim {

double ScaledComplex::log_magnitude() const {
  double m = std::abs(val);
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(m) + log_scale;
}

Complex ScaledComplex::collapse() const {
  if (log_magnitude() < kFlushLog) return Complex(0.0, 0.0);
  return val * std::exp(log_scale);
}

bool ScaledComplex::suppressed() const {
  return std::abs(val) != 0.0 && log_magnitude() < kFlushLog;
}

namespace {

// Binomial coefficients up to the lambda term count (small).
double binom(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

}  // namespace

ScaledComplex smear_integral(const SmearingSpec& spec, const GaussianKernel& kernel,
                             int order) {
  const double s = spec.s();
  const int terms = spec.terms();
  if (kernel.ar > 0.0 || kernel.ai > 0.0)
    throw DomainError("smear_integral: Gaussian kernel must not grow");

  const double a_r = 1.0 / s - kernel.ar;
  const double a_i = 1.0 / s - kernel.ai;
  const Complex c_r = kernel.br / (2.0 * a_r);
  const Complex c_i = kernel.bi / (2.0 * a_i);
  const Complex log_pref = kernel.c + kernel.br * kernel.br / (4.0 * a_r) +
                           kernel.bi * kernel.bi / (4.0 * a_i) -
                           std::log(M_PI * s) - 0.5 * std::log(a_r * a_i);

  const GaussHermiteRule& rule = gauss_hermite(order);
  const size_t nn = rule.nodes.size();

  // Separable moments: M[m] = sum_j w_j (c + t_j / sqrt(a))^{2m}.
  std::vector<Complex> mom_r(static_cast<size_t>(terms), Complex(0.0, 0.0));
  std::vector<Complex> mom_i(static_cast<size_t>(terms), Complex(0.0, 0.0));
  const double inv_sqrt_ar = 1.0 / std::sqrt(a_r);
  const double inv_sqrt_ai = 1.0 / std::sqrt(a_i);
  for (size_t j = 0; j < nn; ++j) {
    const double w = rule.weights[j];
    const Complex ur = c_r + rule.nodes[j] * inv_sqrt_ar;
    const Complex ui = c_i + rule.nodes[j] * inv_sqrt_ai;
    Complex pr(1.0, 0.0), pi(1.0, 0.0);
    const Complex ur2 = ur * ur, ui2 = ui * ui;
    for (int m = 0; m < terms; ++m) {
      mom_r[static_cast<size_t>(m)] += w * pr;
      mom_i[static_cast<size_t>(m)] += w * pi;
      pr *= ur2;
      pi *= ui2;
    }
  }

  // sum_n lambda_n / (n! s^n) sum_a C(n,a) M_r[a] M_i[n-a]
  Complex total(0.0, 0.0);
  double coeff = 1.0;  // 1 / (n! s^n)
  for (int n = 0; n < terms; ++n) {
    if (n > 0) coeff /= (static_cast<double>(n) * s);
    if (spec.lambdas[static_cast<size_t>(n)] != 0.0) {
      Complex inner(0.0, 0.0);
      for (int a = 0; a <= n; ++a)
        inner += binom(n, a) * mom_r[static_cast<size_t>(a)] *
                 mom_i[static_cast<size_t>(n - a)];
      total += spec.lambdas[static_cast<size_t>(n)] * coeff * inner;
    }
  }

  ScaledComplex out;
  out.val = total * std::exp(Complex(0.0, log_pref.imag()));
  out.log_scale = log_pref.real();
  return out;
}

SmearNodes smear_nodes(const SmearingSpec& spec, int order) {
  const double s = spec.s();
  const double sqrt_s = std::sqrt(s);
  const GaussHermiteRule& rule = gauss_hermite(order);
  SmearNodes nd;
  nd.coords.resize(rule.nodes.size());
  nd.weights = rule.weights;
  for (size_t j = 0; j < rule.nodes.size(); ++j)
    nd.coords[j] = sqrt_s * rule.nodes[j];
  return nd;
}

namespace {

/// Polynomial part of the smearing function: P(z) = sum lambda_n (z/s)^n / n!.
Complex lambda_poly(const SmearingSpec& spec, Complex z) {
  const double s = spec.s();
  Complex acc(0.0, 0.0);
  Complex zp(1.0, 0.0);
  double coeff = 1.0;
  for (int n = 0; n < spec.terms(); ++n) {
    if (n > 0) {
      coeff /= (static_cast<double>(n) * s);
      zp *= z;
    }
    acc += spec.lambdas[static_cast<size_t>(n)] * coeff * zp;
  }
  return acc;
}

}  // namespace

ScaledComplex double_smear_overlap(const SmearingSpec& spec, Complex g_alpha,
                                   int kind, int order) {
  const double s = spec.s();
  const double gr = g_alpha.real(), gi = g_alpha.imag();
  const GaussHermiteRule& rule = gauss_hermite(order);
  const size_t nn = rule.nodes.size();

  // Sum/difference coordinates: d = S + D/2, d' = S - D/2 (per component).
  // The smearing Gaussians contribute -(2/s)|S|^2 - |D|^2/(2s) always.
  double a_sig = 0.0, a_del = 0.0;
  double c_sr = 0.0, c_si = 0.0;  // real Sigma centers
  double log_pref = 0.0;
  // kind 2 bookkeeping
  double q = 0.0, a_del3 = 0.0;

  switch (kind) {
    case 0:
      // kernel e^{-|D|^2}
      a_sig = 2.0 / s;
      a_del = 1.0 / (2.0 * s) + 1.0;
      break;
    case 1:
      // kernel e^{-4|G + S|^2}
      a_sig = 2.0 / s + 4.0;
      a_del = 1.0 / (2.0 * s);
      c_sr = -4.0 * gr / a_sig;
      c_si = -4.0 * gi / a_sig;
      log_pref = -4.0 * (gr * gr + gi * gi) +
                 16.0 * (gr * gr + gi * gi) / a_sig;
      break;
    case 2:
      // kernel e^{-2|G+S|^2 - |D|^2/2 - 2i[Dr(Gi+Si) - Di(Gr+Sr)]}
      a_del3 = 0.5 + 1.0 / (2.0 * s);
      a_del = a_del3;
      q = 2.0 + 1.0 / a_del3;
      a_sig = 2.0 / s + q;
      c_sr = -q * gr / a_sig;
      c_si = -q * gi / a_sig;
      log_pref = -q * (gr * gr + gi * gi) +
                 q * q * (gr * gr + gi * gi) / a_sig;
      break;
    default:
      throw DomainError("double_smear_overlap: unknown kind");
  }

  const double inv_ss = 1.0 / std::sqrt(a_sig);
  const double inv_sd = 1.0 / std::sqrt(a_del);
  Complex acc(0.0, 0.0);
  for (size_t j = 0; j < nn; ++j) {
    const double sig_r = c_sr + rule.nodes[j] * inv_ss;
    for (size_t k = 0; k < nn; ++k) {
      const double sig_i = c_si + rule.nodes[k] * inv_ss;
      // Complex inner centers exist only for kind 2.
      Complex cdr(0.0, 0.0), cdi(0.0, 0.0);
      if (kind == 2) {
        cdr = Complex(0.0, -(gi + sig_i) / a_del3);
        cdi = Complex(0.0, (gr + sig_r) / a_del3);
      }
      const double wjk = rule.weights[j] * rule.weights[k];
      Complex inner(0.0, 0.0);
      for (size_t l = 0; l < nn; ++l) {
        const Complex del_r = cdr + rule.nodes[l] * inv_sd;
        for (size_t m = 0; m < nn; ++m) {
          const Complex del_i = cdi + rule.nodes[m] * inv_sd;
          const Complex z1 = (sig_r + 0.5 * del_r) * (sig_r + 0.5 * del_r) +
                             (sig_i + 0.5 * del_i) * (sig_i + 0.5 * del_i);
          const Complex z2 = (sig_r - 0.5 * del_r) * (sig_r - 0.5 * del_r) +
                             (sig_i - 0.5 * del_i) * (sig_i - 0.5 * del_i);
          inner += rule.weights[l] * rule.weights[m] *
                   lambda_poly(spec, z1) * lambda_poly(spec, z2);
        }
      }
      acc += wjk * inner;
    }
  }

  ScaledComplex out;
  out.val = acc / (M_PI * M_PI * s * s) / (a_sig * a_del);
  out.log_scale = log_pref;
  return out;
}

}  // namespace ampsim
