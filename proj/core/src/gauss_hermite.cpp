#include "ampsim/gauss_hermite.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "ampsim/errors.hpp"

namespace ampsim {

namespace {

// Newton iteration on the Hermite recurrence (orthonormal form), seeded by
// the standard asymptotic guesses for successive roots.
GaussHermiteRule compute_rule(int n) {
  constexpr double kEps = 1.0e-14;
  constexpr int kMaxIter = 200;
  const double pim4 = 0.7511255444649425;  // pi^{-1/4}

  GaussHermiteRule rule;
  rule.nodes.assign(static_cast<size_t>(n), 0.0);
  rule.weights.assign(static_cast<size_t>(n), 0.0);

  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[static_cast<size_t>(i - 2)];
    }
    double pp = 0.0;
    int it = 0;
    for (; it < kMaxIter; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 -
             std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= kEps) break;
    }
    if (it >= kMaxIter)
      throw ConvergenceError("gauss_hermite: Newton iteration did not converge");
    rule.nodes[static_cast<size_t>(i)] = z;
    rule.nodes[static_cast<size_t>(n - 1 - i)] = -z;
    rule.weights[static_cast<size_t>(i)] = 2.0 / (pp * pp);
    rule.weights[static_cast<size_t>(n - 1 - i)] = rule.weights[static_cast<size_t>(i)];
  }
  // The roots were visited largest-first; hand them out ascending.
  std::reverse(rule.nodes.begin(), rule.nodes.end());
  std::reverse(rule.weights.begin(), rule.weights.end());
  return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int order) {
  if (order < 1) throw DomainError("gauss_hermite: order must be >= 1");
  static std::map<int, GaussHermiteRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_rule(order)).first;
  return it->second;
}

}  // namespace ampsim
