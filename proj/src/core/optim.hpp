#pragma once

#include <functional>
#include <vector>

namespace ogp {

struct NelderMeadOptions {
  long max_evaluations = 2000;
  double xtol = 1e-10;
  double ftol = 1e-13;
  double initial_step = 0.5;
};

struct NelderMeadResult {
  std::vector<double> x;
  double f = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Downhill simplex minimization. Deterministic for a fixed starting point.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts = {});

}  // namespace ogp
