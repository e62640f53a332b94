#pragma once

#include <functional>

namespace cltb {

struct QuadResult {
  double value;
  double error;
};

// Adaptive Gauss-Kronrod on [a,b] cut into panels no wider than `panel`.
// The absolute tolerance is shared between pieces in proportion to width;
// an absolute target keeps integrands that cancel to ~0 from recursing forever.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double panel = 0.5, double abs_tol = 1e-10);

}  // namespace cltb
