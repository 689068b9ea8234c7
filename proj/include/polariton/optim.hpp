#pragma once

#include <functional>
#include <vector>

#include "polariton/common.hpp"

namespace polariton {

using ObjectiveFn = std::function<double(const std::vector<double>&)>;

struct MinimizeOptions {
  int max_evaluations = 5000;
  double f_tol = 1e-12;       // relative objective decrease
  double g_tol = 1e-8;        // gradient infinity-norm
  double fd_step = 1e-5;      // central-difference step
  int history = 8;            // L-BFGS memory
};

struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  int evaluations = 0;
  int iterations = 0;
  bool converged = false;
};

// L-BFGS with a strong-Wolfe line search; gradients by central differences.
MinimizeResult minimize_lbfgs(const ObjectiveFn& fn, std::vector<double> x0,
                              const MinimizeOptions& opts = {});

}  // namespace polariton
