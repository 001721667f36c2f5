#pragma once

#include <vector>

namespace ampsim {

// Gauss-Hermite rule for integral f(t) exp(-t^2) dt.  Nodes are symmetric
// about zero; weights sum to sqrt(pi).  Rules are cached per order.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussHermiteRule& gauss_hermite(int order);

}  // namespace ampsim
