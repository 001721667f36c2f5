#include "ampsim/measures.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

namespace ampsim {

namespace {

constexpr double kTwoOverPi = 2.0 / M_PI;

// Diagonal Wigner contribution of the P mixture displaced to +G:
// (2/pi) integral Pi^{-1}(d) e^{-2|w - G - d|^2} d^2 d.
double wigner_diag(const AmplifiedCoherentState& state, Complex w, int order) {
  const Complex g_alpha = state.mean();
  const double ur = w.real() - g_alpha.real();
  const double ui = w.imag() - g_alpha.imag();
  GaussianKernel k;
  k.ar = -2.0;
  k.ai = -2.0;
  k.br = Complex(4.0 * ur, 0.0);
  k.bi = Complex(4.0 * ui, 0.0);
  k.c = Complex(-2.0 * (ur * ur + ui * ui), 0.0);
  return kTwoOverPi * smear_integral(state.spec, k, order).collapse().real();
}

// Interference contribution: (2/pi) Re integral Pi^{-1}(d) e^{-2|w|^2}
// e^{4i Im(conj(w) (G + d))} d^2 d.
double wigner_cross(const AmplifiedCoherentState& state, Complex w, int order) {
  const Complex g_alpha = state.mean();
  const double wr = w.real(), wi = w.imag();
  GaussianKernel k;
  k.br = Complex(0.0, -4.0 * wi);
  k.bi = Complex(0.0, 4.0 * wr);
  k.c = Complex(-2.0 * (wr * wr + wi * wi),
                4.0 * (wr * g_alpha.imag() - wi * g_alpha.real()));
  return kTwoOverPi * smear_integral(state.spec, k, order).collapse().real();
}

double projected_wigner_point(const ProjectedSuperposition& ps, Complex w,
                              int order) {
  const double sg = sign_value(ps.sign);
  const double diag = wigner_diag(ps.base, w, order) + wigner_diag(ps.base, -w, order);
  const double cross = wigner_cross(ps.base, w, order);
  return (diag + sg * 2.0 * cross) / (4.0 * ps.p_sign);
}

template <typename PointFn>
WignerField build_field(const Grid2D& grid, PointFn&& f) {
  std::vector<double> vals(static_cast<size_t>(grid.x.n) *
                           static_cast<size_t>(grid.p.n));
  for (int ix = 0; ix < grid.x.n; ++ix) {
    const double wr = grid.x.point(ix);
    for (int ip = 0; ip < grid.p.n; ++ip)
      vals[static_cast<size_t>(ix) * static_cast<size_t>(grid.p.n) +
           static_cast<size_t>(ip)] = f(Complex(wr, grid.p.point(ip)));
  }
  return make_field(grid, std::move(vals));
}

// Raw S functional on a sampled field (no normalization check): the grid is
// assumed to either cover the support or hold one localized piece of it.
double s_contribution(const WignerField& f) {
  const int nx = f.grid.x.n, np = f.grid.p.n;
  const double hx = f.grid.x.spacing(), hp = f.grid.p.spacing();
  double acc = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double wtx = trapezoid_weight(i, nx);
    for (int j = 0; j < np; ++j) {
      const double w = f.at(i, j);
      if (w == 0.0) continue;
      const double wxm = i > 0 ? f.at(i - 1, j) : 0.0;
      const double wxp = i + 1 < nx ? f.at(i + 1, j) : 0.0;
      const double wpm = j > 0 ? f.at(i, j - 1) : 0.0;
      const double wpp = j + 1 < np ? f.at(i, j + 1) : 0.0;
      const double lap = (wxp - 2.0 * w + wxm) / (hx * hx) +
                         (wpp - 2.0 * w + wpm) / (hp * hp);
      acc += wtx * trapezoid_weight(j, np) * w * (-0.25 * lap - w);
    }
  }
  return 0.5 * M_PI * acc * hx * hp;
}

// One-time pin of the operator convention: S must vanish for a coherent
// state.
void self_check_coherent_zero() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    WignerField f = wigner_coherent(Complex(0.0, 0.0), Grid2D::square(-4.0, 4.0, 321));
    const double s0 = s_contribution(f);
    if (std::abs(s0) > 1e-3)
      throw ConvergenceError("macroscopicity: coherent-state calibration failed");
  });
}

double purity_from_spec(const SmearingSpec& spec, int order) {
  return double_smear_overlap(spec, Complex(0.0, 0.0), 0, order).collapse().real();
}

}  // namespace

WignerField make_field(const Grid2D& grid, std::vector<double> values) {
  WignerField f{grid, std::move(values), 0.0};
  double acc = 0.0;
  for (int i = 0; i < grid.x.n; ++i)
    for (int j = 0; j < grid.p.n; ++j)
      acc += trapezoid_weight(i, grid.x.n) * trapezoid_weight(j, grid.p.n) *
             f.at(i, j);
  f.integral = acc * grid.x.spacing() * grid.p.spacing();
  return f;
}

WignerField wigner_coherent(Complex beta0, const Grid2D& grid) {
  return build_field(grid, [&](Complex w) {
    return kTwoOverPi * std::exp(-2.0 * std::norm(w - beta0));
  });
}

WignerField wigner(const AmplifiedCoherentState& state, const Grid2D& grid,
                   int order) {
  return build_field(grid, [&](Complex w) { return wigner_diag(state, w, order); });
}

WignerField wigner(const ThermalCoherentState& state, const Grid2D& grid,
                   int order) {
  return wigner(thermal_as_amplified(state), grid, order);
}

WignerField wigner(const ProjectedSuperposition& ps, const Grid2D& grid,
                   int order) {
  return build_field(grid,
                     [&](Complex w) { return projected_wigner_point(ps, w, order); });
}

double purity(const ThermalCoherentState& state, int order) {
  return purity_from_spec(thermal_as_amplified(state).spec, order);
}

double purity(const AmplifiedCoherentState& state, int order) {
  return purity_from_spec(state.spec, order);
}

double purity(const ProjectedSuperposition& ps, int order) {
  const Complex g_alpha = ps.base.mean();
  const SmearingSpec& spec = ps.base.spec;
  const double n1 = double_smear_overlap(spec, g_alpha, 0, order).collapse().real();
  const double n2 = double_smear_overlap(spec, g_alpha, 1, order).collapse().real();
  const double n3 = double_smear_overlap(spec, g_alpha, 2, order).collapse().real();
  const double sg = sign_value(ps.sign);
  if (ps.p_sign <= 0.0)
    throw ZeroProbabilityError("purity: projection outcome has zero probability");
  return (n1 + n2 + sg * 2.0 * n3) / (4.0 * ps.p_sign * ps.p_sign);
}

double macroscopicity(const WignerField& field) {
  self_check_coherent_zero();
  if (std::abs(field.integral - 1.0) > 1e-3)
    throw CoverageError("macroscopicity: field integral deviates from 1 by " +
                        std::to_string(std::abs(field.integral - 1.0)));
  return s_contribution(field);
}

double macroscopicity(const ProjectedSuperposition& ps, double refine_tol,
                      int order) {
  self_check_coherent_zero();
  const SmearingSpec& spec = ps.base.spec;
  const Complex g_alpha = ps.base.mean();
  const double s = spec.s();

  const double blob_sigma = std::sqrt(0.25 + 0.5 * s * spec.noise_weight());
  const double blob_half = 8.0 * blob_sigma;
  const double blob_h = blob_sigma / 12.0;

  const double fringe_radius = 10.0 / std::sqrt(2.0 + 4.0 * s);
  const double g_mag = std::abs(g_alpha);
  const double fringe_wavelength =
      g_mag > 0.0 ? M_PI / (2.0 * g_mag) : std::numeric_limits<double>::infinity();
  const double fringe_h =
      std::min(fringe_wavelength / 32.0, fringe_radius / 32.0);

  auto eval_windows = [&](double scale) {
    std::vector<WignerField> fields;
    if (g_mag - blob_half > 2.0 * fringe_radius) {
      // Disjoint supports: origin interference patch + two blobs.
      Grid1D fo = Grid1D::symmetric(fringe_radius, fringe_h * scale);
      fields.push_back(wigner(ps, Grid2D(fo, fo), order));
      for (double sgn : {1.0, -1.0}) {
        Grid1D bx = Grid1D::centered(sgn * g_alpha.real(), blob_half, blob_h * scale);
        Grid1D bp = Grid1D::centered(sgn * g_alpha.imag(), blob_half, blob_h * scale);
        fields.push_back(wigner(ps, Grid2D(bx, bp), order));
      }
    } else {
      const double half = g_mag + blob_half + fringe_radius;
      const double h = std::min(fringe_h, blob_h) * scale;
      Grid1D gx = Grid1D::symmetric(half, h);
      fields.push_back(wigner(ps, Grid2D(gx, gx), order));
    }
    double mass = 0.0, s_total = 0.0;
    for (const auto& f : fields) {
      mass += f.integral;
      s_total += s_contribution(f);
    }
    if (std::abs(mass - 1.0) > 1e-3)
      throw CoverageError("macroscopicity: windows miss probability mass");
    return s_total;
  };

  const double coarse = eval_windows(1.0);
  const double fine = eval_windows(0.5);
  if (std::abs(fine - coarse) > refine_tol * std::max(std::abs(fine), 1e-6))
    throw ConvergenceError("macroscopicity: grid refinement did not converge");
  return fine;
}

double purity_matched_gain(const std::vector<double>& lambdas, double target_purity,
                           double g_tol, int order) {
  if (!(target_purity > 0.0 && target_purity < 1.0))
    throw DomainError("purity_matched_gain: target purity must be in (0, 1)");
  double lo = 1.0 + 1e-6, hi = 1000.0;
  auto f = [&](double g) {
    return purity_from_spec(SmearingSpec(g, lambdas), order) - target_purity;
  };
  double flo = f(lo), fhi = f(hi);
  if (!(flo > 0.0 && fhi < 0.0))
    throw BracketError("purity_matched_gain: target purity not bracketed in g");
  while (hi - lo > g_tol) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double ideal_purity(double g) { return 1.0 / (2.0 * g * g - 1.0); }

}  // namespace ampsim
