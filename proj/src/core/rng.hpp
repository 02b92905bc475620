#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "matrix.hpp"

namespace ogp {

// Deterministic random source. mt19937_64 is bit-exact across platforms and
// the [0,1) mapping below avoids the implementation-defined behavior of
// std::uniform_real_distribution, so seeded streams reproduce everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0,1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  Matrix complex_gaussian(std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = complex_normal();
    return m;
  }

  // Haar-distributed unitary: Gram-Schmidt of a complex Ginibre matrix.
  Matrix haar_unitary(std::size_t n) {
    for (;;) {
      Matrix g = complex_gaussian(n, n);
      if (orthonormalize_columns(g)) return g;
    }
  }

  Matrix hermitian(std::size_t n, double scale = 1.0) {
    Matrix g = complex_gaussian(n, n);
    return (g + g.adjoint()) * Complex(0.5 * scale, 0.0);
  }

  Matrix positive_definite(std::size_t n, double shift = 0.1) {
    Matrix g = complex_gaussian(n, n);
    return g.adjoint() * g + Matrix::identity(n) * Complex(shift, 0.0);
  }

  // Haar on SU(2): uniform point on the unit 3-sphere.
  Matrix su2() {
    double q[4];
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (double& v : q) {
        v = normal();
        norm2 += v * v;
      }
    } while (norm2 < 1e-12);
    const double inv = 1.0 / std::sqrt(norm2);
    const double a = q[0] * inv, b = q[1] * inv, c = q[2] * inv, d = q[3] * inv;
    return Matrix{{Complex(a, b), Complex(c, d)}, {Complex(-c, d), Complex(a, -b)}};
  }

  std::uint64_t raw() { return gen_(); }

 private:
  static bool orthonormalize_columns(Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Matrix col = m.column(j);
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t k = 0; k < j; ++k) {
          Matrix prev = m.column(k);
          col -= prev * inner(prev, col);
        }
      const double n = vector_norm(col);
      if (n < 1e-8) return false;
      m.set_column(j, col * Complex(1.0 / n, 0.0));
    }
    return true;
  }

  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ogp
