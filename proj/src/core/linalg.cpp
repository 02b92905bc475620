#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ogp {

namespace {

constexpr int kMaxSweeps = 60;

struct Rotation {
  double c;
  double s;
  Complex w;  // phase of the off-diagonal entry
};

// Unitary G = [[c, s], [-s*conj(w), c*conj(w)]] diagonalizing the Hermitian
// block [[app, apq], [conj(apq), aqq]] with apq = |apq| * w.
Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double r = std::abs(apq);
  const Complex w = apq / r;
  const double tau = (aqq - app) / (2.0 * r);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c, w};
}

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

void sort_descending(std::vector<double>& values, Matrix& columns) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  std::vector<double> sv(n);
  Matrix sc(columns.rows(), n);
  for (std::size_t j = 0; j < n; ++j) {
    sv[j] = values[order[j]];
    sc.set_column(j, columns.column(order[j]));
  }
  values = std::move(sv);
  columns = std::move(sc);
}

// Deterministic completion of a partial orthonormal column set to a square
// unitary, used when the input is rank deficient.
void complete_orthonormal_columns(Matrix& u, std::size_t filled) {
  const std::size_t n = u.rows();
  std::size_t candidate = 0;
  for (std::size_t j = filled; j < u.cols(); ++j) {
    for (; candidate <= n; ++candidate) {
      if (candidate == n)
        fail(ErrorCode::invalid_argument, "orthonormal completion failed");
      Matrix col(n, 1);
      col(candidate, 0) = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < j; ++k) {
          Matrix prev = u.column(k);
          col -= prev * inner(prev, col);
        }
      const double nn = vector_norm(col);
      if (nn > 0.5) {
        u.set_column(j, col * Complex(1.0 / nn, 0.0));
        ++candidate;
        break;
      }
    }
  }
}

}  // namespace

const char* definedness_name(Definedness d) {
  switch (d) {
    case Definedness::full: return "full";
    case Definedness::partial: return "partial";
    case Definedness::undefined: return "undefined";
  }
  return "?";
}

Eigensystem eig_hermitian(const Matrix& m, double hermiticity_tol) {
  if (!m.square())
    fail(ErrorCode::dimension_mismatch, "eig_hermitian needs a square matrix");
  if (!m.is_hermitian(hermiticity_tol))
    fail(ErrorCode::not_hermitian, "matrix is not Hermitian within tolerance");

  const std::size_t n = m.rows();
  Matrix a = (m + m.adjoint()) * Complex(0.5, 0.0);
  Matrix v = Matrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        if (std::abs(apq) <= 1e-18 * scale) continue;
        const Rotation g = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
        const Complex wc = std::conj(g.w);
        // A <- G^dagger A G, columns first then rows.
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = g.c * aip - g.s * wc * aiq;
          a(i, q) = g.s * aip + g.c * wc * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = g.c * apj - g.s * g.w * aqj;
          a(q, j) = g.s * apj + g.c * g.w * aqj;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = g.c * vip - g.s * wc * viq;
          v(i, q) = g.s * vip + g.c * wc * viq;
        }
      }
  }

  Eigensystem out;
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a(i, i).real();
  out.vectors = std::move(v);
  sort_descending(out.values, out.vectors);
  return out;
}

Svd svd(const Matrix& m) {
  if (m.rows() < m.cols()) {
    Svd f = svd(m.adjoint());
    return {std::move(f.v), std::move(f.s), std::move(f.u)};
  }

  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Matrix g = m;
  Matrix v = Matrix::identity(cols);

  // Hestenes: rotate column pairs until all are mutually orthogonal. Never
  // forms m^dagger m, so tiny singular values keep their relative accuracy.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p)
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += std::norm(g(i, p));
          beta += std::norm(g(i, q));
          gamma += std::conj(g(i, p)) * g(i, q);
        }
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Rotation rot = jacobi_rotation(alpha, beta, gamma);
        const Complex wc = std::conj(rot.w);
        for (std::size_t i = 0; i < rows; ++i) {
          const Complex gip = g(i, p), giq = g(i, q);
          g(i, p) = rot.c * gip - rot.s * wc * giq;
          g(i, q) = rot.s * gip + rot.c * wc * giq;
        }
        for (std::size_t i = 0; i < cols; ++i) {
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = rot.c * vip - rot.s * wc * viq;
          v(i, q) = rot.s * vip + rot.c * wc * viq;
        }
      }
    if (!rotated) break;
  }

  std::vector<double> s(cols);
  for (std::size_t j = 0; j < cols; ++j) s[j] = vector_norm(g.column(j));
  Matrix both(rows + cols, cols);
  both.set_block(0, 0, g);
  both.set_block(rows, 0, v);
  sort_descending(s, both);
  g = both.block(0, 0, rows, cols);
  v = both.block(rows, 0, cols, cols);

  Matrix u(rows, rows);
  const double smax = s.empty() ? 0.0 : s[0];
  std::size_t filled = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (s[j] > smax * 1e-300 && s[j] > 0.0) {
      u.set_column(j, g.column(j) * Complex(1.0 / s[j], 0.0));
      filled = j + 1;
    } else {
      break;
    }
  }
  complete_orthonormal_columns(u, filled);
  return {std::move(u), std::move(s), std::move(v)};
}

Matrix svd_reconstruct(const Svd& f) {
  const std::size_t rows = f.u.rows();
  const std::size_t cols = f.v.rows();
  Matrix out(rows, cols);
  for (std::size_t k = 0; k < f.s.size(); ++k)
    out += f.u.column(k) * Complex(f.s[k], 0.0) * f.v.column(k).adjoint();
  return out;
}

Matrix pseudo_inverse(const Matrix& m, double tol) {
  const Svd f = svd(m);
  const double smax = f.s.empty() ? 0.0 : f.s[0];
  Matrix out(m.cols(), m.rows());
  for (std::size_t k = 0; k < f.s.size(); ++k) {
    if (f.s[k] <= tol * smax || f.s[k] == 0.0) continue;
    out += f.v.column(k) * Complex(1.0 / f.s[k], 0.0) * f.u.column(k).adjoint();
  }
  return out;
}

Matrix herm_fn(const Matrix& m, const std::function<double(double)>& f,
               double hermiticity_tol) {
  const Eigensystem e = eig_hermitian(m, hermiticity_tol);
  std::vector<double> fd(e.values.size());
  for (std::size_t i = 0; i < fd.size(); ++i) fd[i] = f(e.values[i]);
  return e.vectors * Matrix::diagonal_real(fd) * e.vectors.adjoint();
}

PolarProjection phi(const Matrix& m, double tol) {
  if (!m.square())
    fail(ErrorCode::dimension_mismatch, "phi needs a square matrix");
  const std::size_t n = m.rows();
  const Svd f = svd(m);
  const double smax = f.s.empty() ? 0.0 : f.s[0];

  int rank = 0;
  for (double sv : f.s)
    if (sv > tol * smax && sv > 0.0) ++rank;

  PolarProjection out;
  out.isometry = Matrix::zero(n, n);
  for (int k = 0; k < rank; ++k)
    out.isometry += f.u.column(static_cast<std::size_t>(k)) *
                    f.v.column(static_cast<std::size_t>(k)).adjoint();
  out.rank.rank = rank;
  if (rank == static_cast<int>(n))
    out.rank.status = Definedness::full;
  else if (rank == 0)
    out.rank.status = Definedness::undefined;
  else
    out.rank.status = Definedness::partial;
  return out;
}

}  // namespace ogp
