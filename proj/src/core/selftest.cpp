#include "selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "interferometer.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace ogp {

namespace {

using std::numbers::pi;

// Scaling-and-squaring Taylor exponential, independent of the closed-form
// evolution it cross-checks.
Matrix expm(const Matrix& a) {
  int squarings = 0;
  double norm = a.max_abs() * static_cast<double>(a.rows());
  while (norm > 0.25) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  const Matrix as = a * Complex(scale, 0.0);
  Matrix term = Matrix::identity(a.rows());
  Matrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = term * as * Complex(1.0 / k, 0.0);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

PulseSpec random_pulse(Rng& rng, double max_area = 4.0 * pi) {
  PulseSpec p;
  p.couplings = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                 rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                 rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  p.area = rng.uniform(0.0, max_area);
  return p;
}

PulseSpec random_full_rank_sin_pulse(Rng& rng) {
  for (;;) {
    const PulseSpec p = random_pulse(rng);
    const TMatrix tm = t_matrix(p.couplings);
    if (tm.svd.s[1] < 1e-3) continue;
    const double m = std::min(std::abs(std::sin(p.area * tm.svd.s[0])),
                              std::abs(std::sin(p.area * tm.svd.s[1])));
    if (m > 1e-3) return p;
  }
}

Matrix random_probe(Rng& rng, int l) {
  Matrix psi(4, 1);
  const std::size_t base = l == 1 ? 0 : 2;
  psi(base, 0) = rng.complex_normal();
  psi(base + 1, 0) = rng.complex_normal();
  const double n = vector_norm(psi);
  return psi * Complex(1.0 / n, 0.0);
}

using SuiteFn = std::function<double(Rng&)>;  // returns worst error

struct SuiteSpec {
  const char* name;
  double tolerance;
  SuiteFn run;
};

double suite_svd_reconstruction(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = i % 2 == 0 ? 2 : 4;
    const Matrix m = rng.complex_gaussian(n, n);
    worst = std::max(worst, (svd_reconstruct(svd(m)) - m).frobenius_norm());
  }
  return worst;
}

double suite_phi_unitary(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Matrix u = rng.haar_unitary(i % 2 == 0 ? 2 : 4);
    worst = std::max(worst, (phi(u).isometry - u).max_abs());
  }
  return worst;
}

double suite_phi_polar_factor(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = i % 2 == 0 ? 2 : 4;
    const Matrix u = rng.haar_unitary(n);
    const Matrix p = rng.positive_definite(n, 0.3);
    worst = std::max(worst, (phi(p * u).isometry - u).max_abs());
  }
  return worst;
}

double suite_pseudoinverse(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = i % 2 == 0 ? 2 : 4;
    const Matrix m = rng.positive_definite(n, 0.0);
    const Matrix g = pseudo_inverse(m);
    worst = std::max(worst, (m * g * m - m).max_abs());
    worst = std::max(worst, (g * m * g - g).max_abs());
    worst = std::max(worst, ((m * g).adjoint() - m * g).max_abs());
    worst = std::max(worst, ((g * m).adjoint() - g * m).max_abs());
  }
  return worst;
}

double suite_herm_fn(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Matrix h = rng.hermitian(i % 2 == 0 ? 2 : 4, 2.0);
    const Matrix c = herm_fn(h, [](double x) { return std::cos(x); });
    const Matrix s = herm_fn(h, [](double x) { return std::sin(x); });
    worst = std::max(worst,
                     (c * c + s * s - Matrix::identity(h.rows())).max_abs());
  }
  return worst;
}

double suite_partial_isometry(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    // Force assorted ranks through explicit singular spectra.
    const std::size_t n = 3;
    const Matrix u = rng.haar_unitary(n);
    const Matrix v = rng.haar_unitary(n);
    const Matrix m =
        u * Matrix::diagonal_real({rng.uniform(0.5, 2.0), i % 3 == 0 ? 0.0 : 1.0, 0.0}) *
        v.adjoint();
    const PolarProjection p = phi(m);
    if (p.rank.status == Definedness::undefined) continue;
    const Matrix left = p.isometry * p.isometry.adjoint();
    const Matrix right = p.isometry.adjoint() * p.isometry;
    worst = std::max(worst, (left * left - left).max_abs());
    worst = std::max(worst, (left - left.adjoint()).max_abs());
    worst = std::max(worst, (right * right - right).max_abs());
    worst = std::max(worst, (right - right.adjoint()).max_abs());
  }
  return worst;
}

double suite_transport_parallel(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    const PulseSpec pulse = random_full_rank_sin_pulse(rng);
    for (int l = 1; l <= 2; ++l) {
      const FramePath path = transported_frame_path(pulse, l, 10000);
      worst = std::max(worst, (wz_transport(path) - Matrix::identity(2)).max_abs());
    }
  }
  return worst;
}

double suite_transport_convergence(Rng&) {
  // Smooth synthetic path with a genuinely nonzero connection.
  const auto frame_at = [](double s) {
    Matrix cols(4, 2);
    const Complex phase = std::exp(Complex(0.0, 0.8 * s));
    cols(0, 0) = phase * std::cos(s);
    cols(2, 0) = phase * std::sin(s);
    cols(1, 1) = std::cos(0.7 * s);
    cols(3, 1) = std::sin(0.7 * s);
    return Frame(cols);
  };
  const auto path_with = [&](std::size_t n) {
    std::vector<PathSample> samples;
    for (std::size_t k = 0; k < n; ++k) {
      const double s = 1.3 * static_cast<double>(k) / static_cast<double>(n - 1);
      samples.push_back({s, frame_at(s)});
    }
    return FramePath(std::move(samples));
  };
  const Matrix reference = wz_transport(path_with(100000));
  double worst = 0.0;
  for (std::size_t n : {200, 400, 800}) {
    const double err_n = (wz_transport(path_with(n)) - reference).frobenius_norm();
    const double err_2n = (wz_transport(path_with(2 * n)) - reference).frobenius_norm();
    const double ratio = err_n / err_2n;
    worst = std::max(worst, std::abs(ratio - 2.0));
  }
  return worst;
}

double suite_gauge_covariance(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 25; ++i) {
    SigmaMap sigmas;
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l) sigmas[{k, l}] = rng.complex_gaussian(2, 2);
    std::map<int, Matrix> changes = {{1, rng.haar_unitary(2)}, {2, rng.haar_unitary(2)}};
    const SigmaMap transformed = gauge_transform(sigmas, changes);
    for (const std::vector<int>& chain :
         {std::vector<int>{1}, {2}, {1, 2}, {2, 1}}) {
      const int head = chain.front();
      const Matrix& u = changes.at(head);
      const GpResult before = off_diagonal_gp(gamma(sigmas, chain));
      const GpResult after = off_diagonal_gp(gamma(transformed, chain));
      worst = std::max(
          worst, (after.isometry - u.adjoint() * before.isometry * u).max_abs());
    }
  }
  return worst;
}

double suite_evolution_unitarity(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Matrix u = evolve(random_pulse(rng)).matrix();
    worst = std::max(worst, (u.adjoint() * u - Matrix::identity(4)).max_abs());
  }
  return worst;
}

double suite_evolution_oracle(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PulseSpec p = random_pulse(rng);
    const Matrix direct = evolve(p).matrix();
    const Matrix oracle =
        expm(effective_hamiltonian(p.couplings) * Complex(0.0, -p.area));
    worst = std::max(worst, (direct - oracle).frobenius_norm());
  }
  return worst;
}

double suite_kappa2_law(Rng& rng) {
  double worst = 0.0;
  const Matrix minus_one = -Matrix::identity(2);
  for (int i = 0; i < 50; ++i) {
    const auto [gp12, gp21] = gp_kappa2_single(random_full_rank_sin_pulse(rng));
    worst = std::max(worst, (gp12.isometry - minus_one).max_abs());
    worst = std::max(worst, (gp21.isometry - minus_one).max_abs());
  }
  return worst;
}

double suite_singular_exclusivity(Rng& rng) {
  // cos and sin of the same argument can never vanish together; the floor
  // max(|cos|,|sin|) >= 1/sqrt(2) quantifies the mutual exclusion.
  double floor = 1.0;
  for (int i = 0; i < 5; ++i) {
    const PulseSpec p = random_full_rank_sin_pulse(rng);
    const TMatrix tm = t_matrix(p.couplings);
    for (int k = 0; k < 20000; ++k) {
      const double a = 4.0 * pi * k / 19999.0;
      for (double s : tm.svd.s)
        floor = std::min(floor, std::max(std::abs(std::cos(a * s)),
                                         std::abs(std::sin(a * s))));
    }
  }
  return std::max(0.0, 1.0 / std::sqrt(2.0) - floor);
}

double suite_sector_boundaries(Rng&) {
  const RingCouplings c{1.0, 0.5, 1.0, 0.5, 0.0, 0.0, 0.0, 0.0};  // s = (1.5, 0.5)
  std::vector<double> grid;
  for (int i = 0; i <= 1000; ++i) grid.push_back(2.0 * pi * i / 1000.0);
  const std::vector<SweepRow> rows = sweep_area(c, grid);
  const std::vector<double> expected = {pi / 3.0, pi, 5.0 * pi / 3.0};
  double worst = 0.0;
  for (double target : expected) {
    double best = 1e9;
    for (const SweepRow& row : rows)
      if (row.boundary & 1) best = std::min(best, std::abs(row.area - target));
    worst = std::max(worst, best);
  }
  return worst;
}

double suite_interferometer_closed_form(Rng& rng) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const PulseSpec pulse = random_pulse(rng);
    const EvolutionOperator ev = evolve(pulse);
    const int l = i % 2 == 0 ? 1 : 2;
    const Matrix psi = random_probe(rng, l);
    WGenParams wp;
    wp.j13 = rng.uniform(-2.0, 2.0);
    wp.j24 = rng.uniform(-2.0, 2.0);
    wp.d13 = rng.uniform(-2.0, 2.0);
    wp.d24 = rng.uniform(-2.0, 2.0);
    wp.e_shift = rng.uniform(-2.0, 2.0);
    wp.b_area = rng.uniform(0.0, 2.0);
    const WOperator w = w_from_params(wp);
    worst = std::max(worst, std::abs(run_ancilla(psi, l, ev, w) -
                                     ancilla_probability_closed_form(psi, l, ev, w)));
  }
  return worst;
}

double suite_interferometer_bound(Rng& rng) {
  // No sampled W may beat the per-probe ceiling |gamma psi|^2.
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const PulseSpec pulse = random_full_rank_sin_pulse(rng);
    const EvolutionOperator ev = evolve(pulse);
    const Matrix gamma12 = ev.block(1, 2) * ev.block(2, 1);
    const Matrix psi = random_probe(rng, 1);
    const double ceiling = std::pow(vector_norm(gamma12 * psi.block(0, 0, 2, 1)), 2);
    for (int k = 0; k < 40; ++k) {
      WGenParams wp;
      wp.j13 = rng.uniform(-pi, pi);
      wp.d13 = rng.uniform(-pi, pi);
      wp.e_shift = rng.uniform(-pi, pi);
      const double p = run_direct(psi, 1, ev, w_from_params(wp));
      worst = std::max(worst, p - ceiling);
    }
  }
  return std::max(0.0, worst);
}

double suite_recovery_direct(Rng& rng) {
  RecoverOptions opts;
  opts.seed = rng.raw();
  const PulseSpec pulse{{1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0}, pi / 2.0};
  const RecoveryResult res = recover_gp(default_probes(1, RecoverMode::direct), 1,
                                        evolve(pulse), RecoverMode::direct, opts);
  return res.distance_aligned;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed, double tol_override) {
  const SuiteSpec suites[] = {
      {"svd-reconstruction", 1e-10, suite_svd_reconstruction},
      {"phi-unitary-fixed-point", 1e-12, suite_phi_unitary},
      {"phi-polar-factor", 1e-9, suite_phi_polar_factor},
      {"pseudoinverse-penrose", 1e-10, suite_pseudoinverse},
      {"herm-fn-trig-identity", 1e-10, suite_herm_fn},
      {"partial-isometry-projectors", 1e-9, suite_partial_isometry},
      {"transport-parallel-identity", 1e-6, suite_transport_parallel},
      {"transport-convergence-rate", 0.6, suite_transport_convergence},
      {"gauge-covariance", 1e-9, suite_gauge_covariance},
      {"evolution-unitarity", 1e-10, suite_evolution_unitarity},
      {"evolution-exponential-oracle", 1e-10, suite_evolution_oracle},
      {"kappa2-single-pulse-law", 1e-10, suite_kappa2_law},
      {"singular-point-exclusivity", 1e-12, suite_singular_exclusivity},
      {"sector-boundaries", 1e-9, suite_sector_boundaries},
      {"interferometer-closed-form", 1e-12, suite_interferometer_closed_form},
      {"interferometer-bound", 1e-9, suite_interferometer_bound},
      {"recovery-direct", 1e-4, suite_recovery_direct},
  };

  const auto fnv1a = [](const char* s) {
    std::uint64_t h = 1469598103934665603ull;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ull;
    return h;
  };

  SelftestReport report;
  for (const SuiteSpec& spec : suites) {
    Rng rng(seed ^ fnv1a(spec.name));
    SelftestSuite s;
    s.name = spec.name;
    s.tolerance = tol_override > 0.0 ? tol_override : spec.tolerance;
    s.worst_error = spec.run(rng);
    s.passed = s.worst_error <= s.tolerance;
    report.suites.push_back(std::move(s));
  }
  return report;
}

}  // namespace ogp
