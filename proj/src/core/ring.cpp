#include "ring.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"
#include "optim.hpp"

namespace ogp {

namespace {

const Matrix kPauliX{{0.0, 1.0}, {1.0, 0.0}};
const Matrix kPauliY{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Two single-qubit operators embedded in the 4-qubit register (qubit 1 is
// the most significant factor).
Matrix two_site(int qa, const Matrix& a, int qb, const Matrix& b) {
  Matrix out = Matrix::identity(1);
  for (int q = 0; q < 4; ++q) {
    if (q == qa)
      out = kron(out, a);
    else if (q == qb)
      out = kron(out, b);
    else
      out = kron(out, Matrix::identity(2));
  }
  return out;
}

Matrix xy_bond(int qa, int qb) {
  return (two_site(qa, kPauliX, qb, kPauliX) + two_site(qa, kPauliY, qb, kPauliY)) * 0.5;
}

Matrix dm_bond(int qa, int qb) {
  return (two_site(qa, kPauliX, qb, kPauliY) - two_site(qa, kPauliY, qb, kPauliX)) * 0.5;
}

Matrix diag_fn(const std::vector<double>& s, double area, double (*f)(double)) {
  std::vector<double> d(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) d[i] = f(area * s[i]);
  return Matrix::diagonal_real(d);
}

EvolutionOperator evolution_from_t(const TMatrix& tm, double area) {
  const Matrix& u = tm.svd.u;
  const Matrix& v = tm.svd.v;
  const Matrix cosd = diag_fn(tm.svd.s, area, std::cos);
  const Matrix sind = diag_fn(tm.svd.s, area, std::sin);
  const Complex mi(0.0, -1.0);
  Matrix m(4, 4);
  m.set_block(0, 0, u * cosd * u.adjoint());
  m.set_block(0, 2, mi * (u * sind * v.adjoint()));
  m.set_block(2, 0, mi * (v * sind * u.adjoint()));
  m.set_block(2, 2, v * cosd * v.adjoint());
  return EvolutionOperator(std::move(m));
}

int sign_of(double x) { return x >= 0.0 ? 1 : -1; }

Definedness status_from_deficient(int deficient) {
  if (deficient == 0) return Definedness::full;
  if (deficient >= 2) return Definedness::undefined;
  return Definedness::partial;
}

}  // namespace

TMatrix t_matrix(const RingCouplings& c, bool strict_positive, double rank_tol) {
  Matrix t{{Complex(c.j12, -c.d12), Complex(c.j41, c.d41)},
           {Complex(c.j23, c.d23), Complex(c.j34, -c.d34)}};
  TMatrix out{t, svd(t)};
  if (strict_positive && out.svd.s[1] <= rank_tol * out.svd.s[0])
    fail(ErrorCode::singular_t, "coupling matrix T is singular");
  return out;
}

Matrix full_hamiltonian(const RingCouplings& c) {
  Matrix h(16, 16);
  const std::array<std::pair<int, int>, 4> bonds = {{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
  const std::array<double, 4> j = {c.j12, c.j23, c.j34, c.j41};
  const std::array<double, 4> dz = {c.d12, c.d23, c.d34, c.d41};
  for (int b = 0; b < 4; ++b) {
    const auto [qa, qb] = bonds[b];
    if (j[b] != 0.0) h += xy_bond(qa, qb) * j[b];
    if (dz[b] != 0.0) h += dm_bond(qa, qb) * dz[b];
  }
  return h;
}

Matrix effective_hamiltonian(const RingCouplings& c) {
  const TMatrix tm = t_matrix(c);
  Matrix h(4, 4);
  h.set_block(0, 2, tm.matrix);
  h.set_block(2, 0, tm.matrix.adjoint());
  return h;
}

EvolutionOperator evolve(const PulseSpec& pulse, bool strict_positive) {
  return evolution_from_t(t_matrix(pulse.couplings, strict_positive), pulse.area);
}

Kappa1Result gp_kappa1(const PulseSpec& pulse, double rank_tol) {
  const TMatrix tm = t_matrix(pulse.couplings, true, rank_tol);
  const Matrix cosd = diag_fn(tm.svd.s, pulse.area, std::cos);
  const Matrix sigma11 = tm.svd.u * cosd * tm.svd.u.adjoint();
  const Matrix sigma22 = tm.svd.v * cosd * tm.svd.v.adjoint();

  Kappa1Result out;
  const PolarProjection p1 = phi(sigma11, rank_tol);
  const PolarProjection p2 = phi(sigma22, rank_tol);
  out.gp1 = {p1.isometry, p1.rank};
  out.gp2 = {p2.isometry, p2.rank};

  if (p1.rank.status == Definedness::full && p2.rank.status == Definedness::full) {
    const int sign_major = sign_of(cosd(0, 0).real());
    const int sign_minor = sign_of(cosd(1, 1).real());
    SectorLabel base;
    base.c = sign_major < 0 ? 1 : 0;
    base.d = sign_major != sign_minor ? 1 : 0;
    base.conjugating_unitary = tm.svd.u;
    out.label1 = base;
    base.conjugating_unitary = tm.svd.v;
    out.label2 = base;
  }
  return out;
}

std::pair<GpResult, GpResult> gp_kappa2_single(const PulseSpec& pulse, double rank_tol) {
  const EvolutionOperator ev = evolve(pulse, true);
  const Matrix gamma12 = ev.block(1, 2) * ev.block(2, 1);
  const Matrix gamma21 = ev.block(2, 1) * ev.block(1, 2);
  const PolarProjection p12 = phi(gamma12, rank_tol);
  const PolarProjection p21 = phi(gamma21, rank_tol);
  return {{p12.isometry, p12.rank}, {p21.isometry, p21.rank}};
}

EvolutionOperator compose_pulses(const PulseSpec& first, const PulseSpec& second,
                                 double off_diagonal_tol) {
  const TMatrix tm1 = t_matrix(first.couplings);
  double worst = 0.0;
  for (double s : tm1.svd.s) worst = std::max(worst, std::abs(std::cos(first.area * s)));
  if (worst > off_diagonal_tol)
    fail(ErrorCode::first_pulse_not_off_diagonal,
         "first pulse must map each subspace onto the other (cos(area*S) ~ 0)");
  const EvolutionOperator u1 = evolution_from_t(tm1, first.area);
  const EvolutionOperator u2 = evolve(second);
  return EvolutionOperator(u2.matrix() * u1.matrix());
}

std::pair<GpResult, GpResult> gp_kappa2_composed(const PulseSpec& first,
                                                 const PulseSpec& second,
                                                 double rank_tol,
                                                 double off_diagonal_tol) {
  t_matrix(second.couplings, true, rank_tol);
  const EvolutionOperator total = compose_pulses(first, second, off_diagonal_tol);
  const Matrix gamma12 = total.block(1, 2) * total.block(2, 1);
  const Matrix gamma21 = total.block(2, 1) * total.block(1, 2);
  const PolarProjection p12 = phi(gamma12, rank_tol);
  const PolarProjection p21 = phi(gamma21, rank_tol);
  return {{p12.isometry, p12.rank}, {p21.isometry, p21.rank}};
}

double sign_aligned_distance(const Matrix& a, const Matrix& b) {
  return std::min((a - b).frobenius_norm(), (a + b).frobenius_norm());
}

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double cross = std::abs((a.adjoint() * b).trace());
  return std::sqrt(std::max(0.0, na * na + nb * nb - 2.0 * cross));
}

namespace {

RingCouplings couplings_from_t(const Matrix& t) {
  RingCouplings c;
  c.j12 = t(0, 0).real();
  c.d12 = -t(0, 0).imag();
  c.j41 = t(0, 1).real();
  c.d41 = t(0, 1).imag();
  c.j23 = t(1, 0).real();
  c.d23 = t(1, 0).imag();
  c.j34 = t(1, 1).real();
  c.d34 = -t(1, 1).imag();
  return c;
}

PulseSpec pulse_from_params(const std::vector<double>& x) {
  PulseSpec p;
  p.couplings = {x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]};
  p.area = x[8];
  return p;
}

std::vector<double> params_from_pulse(const PulseSpec& p) {
  return {p.couplings.j12, p.couplings.j23, p.couplings.j34, p.couplings.j41,
          p.couplings.d12, p.couplings.d23, p.couplings.d34, p.couplings.d41,
          p.area};
}

}  // namespace

Su2TargetResult su2_target(const Matrix& target, double tol) {
  if (target.rows() != 2 || target.cols() != 2)
    fail(ErrorCode::dimension_mismatch, "SU(2) target must be 2x2");
  const double check_tol = std::max(tol, 1e-8);
  if (!target.is_unitary(check_tol))
    fail(ErrorCode::not_unitary, "target is not unitary");
  const Complex det = target(0, 0) * target(1, 1) - target(0, 1) * target(1, 0);
  if (std::abs(det - Complex(1.0, 0.0)) > check_tol)
    fail(ErrorCode::invalid_argument, "target determinant must be 1");

  using std::numbers::pi;
  const double cos_phi = std::clamp(target.trace().real() / 2.0, -1.0, 1.0);
  const double phi_angle = std::acos(cos_phi);

  // Eigenbasis of the target; for +-1 any basis works.
  Matrix x = Matrix::identity(2);
  if (std::sin(phi_angle) > 1e-8) {
    const Matrix a = (target - target.adjoint()) * Complex(0.0, -0.5);
    x = eig_hermitian(a).vectors;
  }

  // With cos(area*S) = t*Z the product sigma11*sigma22 is t^2 times a
  // rotation, so the phase pair (phi+pi)/2 lands exactly on the target.
  const double theta = -(phi_angle + pi) / 2.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Matrix q{{Complex(inv_sqrt2, 0.0), Complex(0.0, inv_sqrt2)},
                 {Complex(inv_sqrt2, 0.0), Complex(0.0, -inv_sqrt2)}};
  const Matrix r_neg_theta{{std::cos(theta), std::sin(theta)},
                           {-std::sin(theta), std::cos(theta)}};
  const Matrix s_diag = Matrix::diagonal_real({7.0 * pi / 4.0, 3.0 * pi / 4.0});
  const Matrix t = x * q * s_diag * r_neg_theta * q.adjoint() * x.adjoint();

  Su2TargetResult result;
  result.first.couplings = {1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0};
  result.first.area = pi / 2.0;
  result.second = {couplings_from_t(t), 1.0};

  const auto distance_for = [&](const PulseSpec& second) {
    try {
      const auto gp = gp_kappa2_composed(result.first, second);
      if (gp.first.status.status != Definedness::full) return 1e3;
      return sign_aligned_distance(gp.first.isometry, target);
    } catch (const Error&) {
      return 1e3;
    }
  };

  result.distance = distance_for(result.second);
  if (result.distance > tol / 16.0) {
    NelderMeadOptions opts;
    opts.max_evaluations = 4000;
    opts.initial_step = 0.05;
    const auto objective = [&](const std::vector<double>& v) {
      return distance_for(pulse_from_params(v));
    };
    const NelderMeadResult nm =
        nelder_mead(objective, params_from_pulse(result.second), opts);
    if (nm.f < result.distance) {
      result.second = pulse_from_params(nm.x);
      result.distance = nm.f;
    }
  }
  result.converged = result.distance <= tol;
  return result;
}

std::vector<SweepRow> sweep_area(const RingCouplings& c, const std::vector<double>& grid,
                                 double zero_tol) {
  if (grid.size() < 2)
    fail(ErrorCode::invalid_argument, "area grid needs at least 2 points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      fail(ErrorCode::invalid_argument, "area grid must increase strictly");

  const TMatrix tm = t_matrix(c, true);
  const double s0 = tm.svd.s[0];
  const double s1 = tm.svd.s[1];

  const auto make_row = [&](double area, int boundary) {
    SweepRow row;
    row.area = area;
    const double cos0 = std::cos(area * s0), cos1 = std::cos(area * s1);
    const double sin0 = std::sin(area * s0), sin1 = std::sin(area * s1);
    row.cos_sign = {sign_of(cos0), sign_of(cos1)};
    row.c = row.cos_sign[0] < 0 ? 1 : 0;
    row.d = row.cos_sign[0] != row.cos_sign[1] ? 1 : 0;
    const int k1_deficient = (std::abs(cos0) <= zero_tol) + (std::abs(cos1) <= zero_tol);
    const int k2_deficient = (std::abs(sin0) <= zero_tol) + (std::abs(sin1) <= zero_tol);
    row.kappa1_status = {status_from_deficient(k1_deficient),
                         status_from_deficient(k1_deficient)};
    row.kappa2_status = status_from_deficient(k2_deficient);
    row.boundary = boundary;
    return row;
  };

  // Locate zero crossings of cos(s_i * a) and sin(s_i * a) between adjacent
  // grid points by bisection; these are the sector boundaries (kind 1) and
  // the kappa = 2 singular points (kind 2).
  struct Candidate {
    double area;
    int kind;
  };
  std::vector<Candidate> candidates;
  const auto bisect = [](auto&& f, double lo, double hi) {
    double flo = f(lo);
    for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (sign_of(fm) == sign_of(flo)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double a0 = grid[i - 1], a1 = grid[i];
    for (double s : {s0, s1}) {
      const auto fcos = [s](double a) { return std::cos(s * a); };
      const auto fsin = [s](double a) { return std::sin(s * a); };
      if (sign_of(fcos(a0)) != sign_of(fcos(a1)))
        candidates.push_back({bisect(fcos, a0, a1), 1});
      if (sign_of(fsin(a0)) != sign_of(fsin(a1)))
        candidates.push_back({bisect(fsin, a0, a1), 2});
    }
  }
  // Zeros landing on a grid point (the range endpoints in particular) never
  // produce a sign change, so catch them by value.
  for (double a : grid)
    for (double s : {s0, s1}) {
      if (std::abs(std::cos(s * a)) <= zero_tol) candidates.push_back({a, 1});
      if (std::abs(std::sin(s * a)) <= zero_tol && a > 0.0)
        candidates.push_back({a, 2});
    }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) { return a.area < b.area; });
  std::vector<Candidate> merged;
  for (const Candidate& cand : candidates) {
    if (!merged.empty() && cand.area - merged.back().area <= 5e-10)
      merged.back().kind |= cand.kind;
    else
      merged.push_back(cand);
  }

  std::vector<SweepRow> rows;
  rows.reserve(grid.size() + merged.size());
  std::size_t next = 0;
  for (double a : grid) {
    while (next < merged.size() && merged[next].area < a) {
      rows.push_back(make_row(merged[next].area, merged[next].kind));
      ++next;
    }
    rows.push_back(make_row(a, 0));
  }
  for (; next < merged.size(); ++next)
    rows.push_back(make_row(merged[next].area, merged[next].kind));
  return rows;
}

FramePath transported_frame_path(const PulseSpec& pulse, int l, std::size_t n_samples) {
  if (l != 1 && l != 2) fail(ErrorCode::invalid_argument, "subspace index must be 1 or 2");
  if (n_samples < 2) fail(ErrorCode::invalid_argument, "need at least 2 samples");
  if (!(pulse.area > 0.0))
    fail(ErrorCode::invalid_argument, "transported path needs a positive pulse area");

  const TMatrix tm = t_matrix(pulse.couplings);
  Matrix start(4, 2);
  start(l == 1 ? 0 : 2, 0) = 1.0;
  start(l == 1 ? 1 : 3, 1) = 1.0;

  std::vector<PathSample> samples;
  samples.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double a = pulse.area * static_cast<double>(k) / static_cast<double>(n_samples - 1);
    const EvolutionOperator u = evolution_from_t(tm, a);
    samples.push_back({a, Frame(u.matrix() * start)});
  }
  return FramePath(std::move(samples));
}

}  // namespace ogp
