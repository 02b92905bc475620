#include "interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "optim.hpp"
#include "rng.hpp"

namespace ogp {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

Matrix su2_exponential(double j, double d, double e, double b) {
  // exp(i*b*(j sx - d sy + e sz)) in closed form.
  const double rho = std::sqrt(j * j + d * d + e * e);
  if (rho == 0.0) return Matrix::identity(2);
  const double c = std::cos(b * rho);
  const double s = std::sin(b * rho) / rho;
  const Matrix gen{{Complex(e, 0.0), Complex(j, d)}, {Complex(j, -d), Complex(-e, 0.0)}};
  return Matrix::identity(2) * Complex(c, 0.0) + gen * Complex(0.0, s);
}

void check_state(const Matrix& psi, int l, double tol) {
  if (psi.rows() != 4 || psi.cols() != 1)
    fail(ErrorCode::dimension_mismatch, "probe state must be a 4-component column");
  if (l != 1 && l != 2) fail(ErrorCode::invalid_argument, "subspace index must be 1 or 2");
  if (std::abs(vector_norm(psi) - 1.0) > tol)
    fail(ErrorCode::state_outside_subspace, "probe state is not normalized");
  const Matrix outside = psi - subspace_projector(l) * psi;
  if (vector_norm(outside) > tol)
    fail(ErrorCode::state_outside_subspace, "probe state leaks outside its subspace");
}

Matrix loop_operator(int l, const EvolutionOperator& ev) {
  return subspace_projector(l) * ev.matrix() * subspace_projector(3 - l) * ev.matrix();
}

}  // namespace

Matrix subspace_projector(int l) {
  if (l != 1 && l != 2) fail(ErrorCode::invalid_argument, "subspace index must be 1 or 2");
  Matrix p(4, 4);
  const std::size_t base = l == 1 ? 0 : 2;
  p(base, base) = 1.0;
  p(base + 1, base + 1) = 1.0;
  return p;
}

WOperator WOperator::from_params(const WGenParams& p) {
  Matrix wdag(4, 4);
  wdag.set_block(0, 0, su2_exponential(p.j13, p.d13, p.e_shift, p.b_area));
  wdag.set_block(2, 2, su2_exponential(p.j24, p.d24, p.e_shift, p.b_area));
  return WOperator(wdag.adjoint());
}

WOperator WOperator::from_blocks(const Matrix& w1, const Matrix& w2) {
  if (w1.rows() != 2 || w1.cols() != 2 || w2.rows() != 2 || w2.cols() != 2)
    fail(ErrorCode::dimension_mismatch, "W blocks must be 2x2");
  Matrix w(4, 4);
  w.set_block(0, 0, w1);
  w.set_block(2, 2, w2);
  return WOperator(std::move(w));
}

WOperator w_from_params(const WGenParams& p) { return WOperator::from_params(p); }

double run_ancilla(const Matrix& psi, int l, const EvolutionOperator& ev,
                   const WOperator& w, double subspace_tol) {
  check_state(psi, l, subspace_tol);

  // 8-dim state as its two ancilla branches.
  Matrix b0 = psi * Complex(kInvSqrt2, 0.0);  // |0_a> branch after the Hadamard
  Matrix b1 = psi * Complex(kInvSqrt2, 0.0);  // |1_a> branch, untouched until W

  b0 = ev.matrix() * b0;
  b0 = subspace_projector(3 - l) * b0;
  b0 = ev.matrix() * b0;
  b0 = subspace_projector(l) * b0;
  b1 = w.w() * b1;

  const Matrix out0 = (b0 + b1) * Complex(kInvSqrt2, 0.0);
  const double p = vector_norm(out0);
  return p * p;
}

double ancilla_probability_closed_form(const Matrix& psi, int l,
                                       const EvolutionOperator& ev, const WOperator& w) {
  const Matrix gamma_psi = loop_operator(l, ev) * psi;
  const double overlap_term = std::real(inner(psi, w.w_dagger() * gamma_psi));
  const double n = vector_norm(gamma_psi);
  return 0.25 + 0.25 * n * n + 0.5 * overlap_term;
}

double run_direct(const Matrix& psi, int l, const EvolutionOperator& ev,
                  const WOperator& w, double subspace_tol) {
  check_state(psi, l, subspace_tol);
  const Matrix out = w.w_dagger() * (loop_operator(l, ev) * psi);
  const double amp = std::abs(inner(psi, out));
  return amp * amp;
}

std::vector<Matrix> default_probes(int l, RecoverMode mode) {
  const std::size_t base = l == 1 ? 0 : 2;
  Matrix e0(4, 1), e1(4, 1), plus(4, 1);
  e0(base, 0) = 1.0;
  e1(base + 1, 0) = 1.0;
  plus(base, 0) = kInvSqrt2;
  plus(base + 1, 0) = kInvSqrt2;
  std::vector<Matrix> probes = {e0, e1};
  if (mode == RecoverMode::direct) probes.push_back(plus);
  return probes;
}

RecoveryResult recover_gp(const std::vector<Matrix>& probes, int l,
                          const EvolutionOperator& ev, RecoverMode mode,
                          const RecoverOptions& opts) {
  if (probes.empty()) fail(ErrorCode::invalid_argument, "need at least one probe state");
  for (const Matrix& psi : probes) check_state(psi, l, opts.subspace_tol);

  const Matrix gamma_block = ev.block(l, 3 - l) * ev.block(3 - l, l);
  const PolarProjection truth = phi(gamma_block, opts.rank_tol);
  if (truth.rank.status != Definedness::full)
    fail(ErrorCode::invalid_argument,
         "recovery needs a full-rank gamma (not at a singular point)");

  RecoveryResult result;
  result.ground_truth = truth.isometry;

  const auto params_for = [&](const std::vector<double>& x) {
    WGenParams p;
    if (l == 1) {
      p.j13 = x[0];
      p.d13 = x[1];
    } else {
      p.j24 = x[0];
      p.d24 = x[1];
    }
    p.e_shift = x[2];
    p.b_area = x.size() > 3 ? x[3] : 1.0;
    return p;
  };

  long evaluations = 0;
  double best_objective = -1.0;
  const auto negative_objective = [&](const std::vector<double>& x) {
    ++evaluations;
    const WOperator w = WOperator::from_params(params_for(x));
    double sum = 0.0;
    for (const Matrix& psi : probes)
      sum += mode == RecoverMode::ancilla ? run_ancilla(psi, l, ev, w, opts.subspace_tol)
                                          : run_direct(psi, l, ev, w, opts.subspace_tol);
    if (sum > best_objective) {
      best_objective = sum;
      result.trace.emplace_back(evaluations, sum);
    }
    return -sum;
  };

  Rng rng(opts.seed);
  const int restarts = std::max(1, opts.restarts);
  const long stage1 = opts.refine_b_area ? opts.budget * 4 / 5 : opts.budget;

  std::vector<double> best_x = {0.0, 0.0, 0.0};
  double best_f = negative_objective(best_x);
  bool any_converged = false;
  for (int r = 0; r < restarts; ++r) {
    const long remaining = stage1 - evaluations;
    if (remaining < 8) break;
    std::vector<double> x0(3);
    for (double& v : x0) v = rng.uniform(-std::numbers::pi, std::numbers::pi);
    NelderMeadOptions nm;
    nm.max_evaluations = std::min(remaining, std::max<long>(stage1 / restarts, 64));
    nm.initial_step = 0.6;
    const NelderMeadResult res = nelder_mead(negative_objective, x0, nm);
    if (res.f < best_f) {
      best_f = res.f;
      best_x = res.x;
      any_converged = res.converged;
    } else if (res.converged && res.f <= best_f + 1e-12) {
      any_converged = true;
    }
  }

  if (opts.refine_b_area) {
    const long remaining = opts.budget - evaluations;
    if (remaining >= 10) {
      std::vector<double> x0 = best_x;
      x0.push_back(1.0);
      NelderMeadOptions nm;
      nm.max_evaluations = remaining;
      nm.initial_step = 0.05;
      const NelderMeadResult res = nelder_mead(negative_objective, x0, nm);
      if (res.f < best_f) {
        best_f = res.f;
        best_x = res.x;
        any_converged = res.converged;
      }
    }
  }

  result.params = params_for(best_x);
  result.objective = -best_f;
  result.evaluations = evaluations;
  result.converged = any_converged;

  const WOperator w_best = WOperator::from_params(result.params);
  result.estimate = w_best.block(l);
  result.distance_raw = (result.estimate - result.ground_truth).frobenius_norm();
  result.distance_aligned = phase_aligned_distance(result.estimate, result.ground_truth);
  result.probe_probabilities.reserve(probes.size());
  for (const Matrix& psi : probes)
    result.probe_probabilities.push_back(
        mode == RecoverMode::ancilla ? run_ancilla(psi, l, ev, w_best, opts.subspace_tol)
                                     : run_direct(psi, l, ev, w_best, opts.subspace_tol));
  return result;
}

}  // namespace ogp
