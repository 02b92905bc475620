#include "optim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ogp {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> x0, const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  NelderMeadResult result;
  long evals = 0;
  const auto eval = [&](const std::vector<double>& x) {
    ++evals;
    return f(x);
  };

  std::vector<std::vector<double>> simplex(n + 1, x0);
  std::vector<double> fx(n + 1);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += opts.initial_step;
  for (std::size_t i = 0; i <= n; ++i) {
    if (evals >= opts.max_evaluations) {
      // Budget too small to even build the simplex.
      result.x = simplex[0];
      result.f = i > 0 ? fx[0] : eval(simplex[0]);
      result.evaluations = evals;
      return result;
    }
    fx[i] = eval(simplex[i]);
  }

  const auto order = [&] {
    std::vector<std::size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    std::vector<std::vector<double>> s2(n + 1);
    std::vector<double> f2(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s2[i] = simplex[idx[i]];
      f2[i] = fx[idx[i]];
    }
    simplex = std::move(s2);
    fx = std::move(f2);
  };

  while (evals < opts.max_evaluations) {
    order();

    double fspread = std::abs(fx[n] - fx[0]);
    double xspread = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        xspread = std::max(xspread, std::abs(simplex[i][j] - simplex[0][j]));
    if (fspread <= opts.ftol * (std::abs(fx[0]) + opts.ftol) && xspread <= opts.xtol) {
      result.converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / double(n);

    const auto blend = [&](double coeff) {
      std::vector<double> x(n);
      for (std::size_t j = 0; j < n; ++j)
        x[j] = centroid[j] + coeff * (simplex[n][j] - centroid[j]);
      return x;
    };

    const std::vector<double> xr = blend(-1.0);
    const double fr = eval(xr);
    if (fr < fx[0]) {
      const std::vector<double> xe = blend(-2.0);
      const double fe = evals < opts.max_evaluations ? eval(xe) : fr;
      if (fe < fr) {
        simplex[n] = xe;
        fx[n] = fe;
      } else {
        simplex[n] = xr;
        fx[n] = fr;
      }
    } else if (fr < fx[n - 1]) {
      simplex[n] = xr;
      fx[n] = fr;
    } else {
      const bool outside = fr < fx[n];
      const std::vector<double> xc = blend(outside ? -0.5 : 0.5);
      const double fc = evals < opts.max_evaluations ? eval(xc) : fr;
      if (fc < std::min(fr, fx[n])) {
        simplex[n] = xc;
        fx[n] = fc;
      } else {
        // Shrink toward the best vertex.
        for (std::size_t i = 1; i <= n; ++i) {
          for (std::size_t j = 0; j < n; ++j)
            simplex[i][j] = simplex[0][j] + 0.5 * (simplex[i][j] - simplex[0][j]);
          if (evals >= opts.max_evaluations) break;
          fx[i] = eval(simplex[i]);
        }
      }
    }
  }

  order();
  result.x = simplex[0];
  result.f = fx[0];
  result.evaluations = evals;
  return result;
}

}  // namespace ogp
