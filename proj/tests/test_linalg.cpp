#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/linalg.hpp"
#include "core/rng.hpp"
#include "oracles.hpp"

using namespace ogp;
using std::numbers::pi;

namespace {

double col_overlap(const Matrix& m, std::size_t j, const Matrix& expected) {
  return std::abs(inner(expected, m.column(j)));
}

}  // namespace

TEST_CASE("eig_hermitian on diagonal input") {
  const Matrix m{{3.0, 0.0}, {0.0, 1.0}};
  const Eigensystem e = eig_hermitian(m);
  CHECK(e.values[0] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.vectors.approx_equal(Matrix::identity(2), 1e-14));
}

TEST_CASE("eig_hermitian of the x flip") {
  const Matrix m{{0.0, 1.0}, {1.0, 0.0}};
  const Eigensystem e = eig_hermitian(m);
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(e.values[1] == doctest::Approx(-1.0).epsilon(1e-14));
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(col_overlap(e.vectors, 0, Matrix{{inv}, {inv}}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(col_overlap(e.vectors, 1, Matrix{{inv}, {-inv}}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian matches the characteristic polynomial") {
  // trace 4, det 3.75 -> eigenvalues 2.5 and 1.5
  const Matrix m{{2.0, 0.5}, {0.5, 2.0}};
  const Eigensystem e = eig_hermitian(m);
  CHECK(e.values[0] == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(e.values[1] == doctest::Approx(1.5).epsilon(1e-13));
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  const Matrix m{{0.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(eig_hermitian(m), Error);
}

TEST_CASE("eig_hermitian reconstructs random Hermitian matrices") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 15;
    const Matrix m = rng.hermitian(n, 2.0);
    const Eigensystem e = eig_hermitian(m);
    const Matrix rebuilt =
        e.vectors * Matrix::diagonal_real(e.values) * e.vectors.adjoint();
    CHECK((rebuilt - m).frobenius_norm() <= 1e-12 * std::max(1.0, m.frobenius_norm()));
    CHECK(e.vectors.is_unitary(1e-12));
    for (std::size_t k = 1; k < n; ++k) CHECK(e.values[k - 1] >= e.values[k]);
  }
}

TEST_CASE("svd of simple matrices") {
  SUBCASE("identity") {
    const Svd f = svd(Matrix::identity(2));
    CHECK(f.s[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f.s[1] == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("symmetric mix") {
    const Svd f = svd(Matrix{{1.0, 0.5}, {0.5, 1.0}});
    CHECK(f.s[0] == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(f.s[1] == doctest::Approx(0.5).epsilon(1e-13));
  }
  SUBCASE("rank one") {
    const Svd f = svd(Matrix{{1.0, 1.0}, {1.0, 1.0}});
    CHECK(f.s[0] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(f.s[1] == doctest::Approx(0.0).epsilon(1e-13));
  }
}

TEST_CASE("svd reconstruction and orthogonality on random matrices") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const std::size_t rows = 2 + i % 4;
    const std::size_t cols = 2 + (i / 4) % 4;
    const Matrix m = rng.complex_gaussian(rows, cols);
    const Svd f = svd(m);
    CHECK((svd_reconstruct(f) - m).frobenius_norm() <= 1e-10);
    CHECK(f.u.is_unitary(1e-12));
    CHECK(f.v.is_unitary(1e-12));
    for (std::size_t k = 0; k < f.s.size(); ++k) {
      CHECK(f.s[k] >= 0.0);
      if (k > 0) CHECK(f.s[k - 1] >= f.s[k]);
    }
  }
}

TEST_CASE("svd keeps tiny singular values accurate") {
  // A matrix built with an explicit 1e-13 singular value must come back with
  // it, not with sqrt(machine-epsilon) noise.
  Rng rng(13);
  const Matrix u = rng.haar_unitary(2);
  const Matrix v = rng.haar_unitary(2);
  const Matrix m = u * Matrix::diagonal_real({1.0, 1e-13}) * v.adjoint();
  const Svd f = svd(m);
  CHECK(f.s[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.s[1] == doctest::Approx(1e-13).epsilon(1e-2));
}

TEST_CASE("pseudo_inverse basics") {
  CHECK(pseudo_inverse(Matrix{{2.0, 0.0}, {0.0, 0.0}})
            .approx_equal(Matrix{{0.5, 0.0}, {0.0, 0.0}}, 1e-14));
  CHECK(pseudo_inverse(Matrix::identity(3)).approx_equal(Matrix::identity(3), 1e-14));
  // Thresholded zero: 1e-15 is below tol * 4.
  CHECK(pseudo_inverse(Matrix{{4.0, 0.0}, {0.0, 1e-15}}, 1e-12)
            .approx_equal(Matrix{{0.25, 0.0}, {0.0, 0.0}}, 1e-14));
}

TEST_CASE("pseudo_inverse satisfies the Moore-Penrose identities") {
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 3;
    Matrix m = rng.positive_definite(n, 0.0);
    if (i % 3 == 0) {
      // Exactly rank-deficient Hermitian PSD.
      const Matrix u = rng.haar_unitary(n);
      std::vector<double> d(n, 0.0);
      for (std::size_t k = 0; k + 1 < n; ++k) d[k] = rng.uniform(0.2, 2.0);
      m = u * Matrix::diagonal_real(d) * u.adjoint();
    }
    const Matrix g = pseudo_inverse(m);
    CHECK((m * g * m - m).max_abs() <= 1e-10);
    CHECK((g * m * g - g).max_abs() <= 1e-10);
    CHECK(((m * g).adjoint() - m * g).max_abs() <= 1e-10);
    CHECK(((g * m).adjoint() - g * m).max_abs() <= 1e-10);
  }
}

TEST_CASE("herm_fn on closed-form cases") {
  const auto cos_fn = [](double x) { return std::cos(x); };
  const auto sin_fn = [](double x) { return std::sin(x); };

  CHECK(herm_fn(Matrix{{0.0, 0.0}, {0.0, pi}}, cos_fn)
            .approx_equal(Matrix{{1.0, 0.0}, {0.0, -1.0}}, 1e-14));
  CHECK(herm_fn(Matrix::zero(3, 3), sin_fn).approx_equal(Matrix::zero(3, 3), 1e-14));
  // cos is even, so cos((pi/3) * flip) = cos(pi/3) * identity.
  const Matrix flip{{0.0, 1.0}, {1.0, 0.0}};
  CHECK(herm_fn(flip * (pi / 3.0), cos_fn)
            .approx_equal(Matrix::identity(2) * 0.5, 1e-13));
  CHECK_THROWS_AS(herm_fn(Matrix{{0.0, 1.0}, {0.0, 0.0}}, cos_fn), Error);
}

TEST_CASE("herm_fn trig identity") {
  Rng rng(15);
  for (int i = 0; i < 40; ++i) {
    const Matrix h = rng.hermitian(2 + i % 4, 2.0);
    const Matrix c = herm_fn(h, [](double x) { return std::cos(x); });
    const Matrix s = herm_fn(h, [](double x) { return std::sin(x); });
    CHECK((c * c + s * s - Matrix::identity(h.rows())).max_abs() <= 1e-10);
    CHECK(c.is_hermitian(1e-10));
  }
}

TEST_CASE("phi on closed-form cases") {
  SUBCASE("negative scale") {
    const PolarProjection p = phi(Matrix::identity(2) * -2.0);
    CHECK(p.isometry.approx_equal(-Matrix::identity(2), 1e-14));
    CHECK(p.rank.status == Definedness::full);
    CHECK(p.rank.rank == 2);
  }
  SUBCASE("rank deficient") {
    const PolarProjection p = phi(Matrix{{0.0, 0.0}, {0.0, Complex(0.0, 3.0)}});
    CHECK(p.isometry.approx_equal(Matrix{{0.0, 0.0}, {0.0, Complex(0.0, 1.0)}}, 1e-14));
    CHECK(p.rank.status == Definedness::partial);
    CHECK(p.rank.rank == 1);
  }
  SUBCASE("zero matrix") {
    const PolarProjection p = phi(Matrix::zero(2, 2));
    CHECK(p.rank.status == Definedness::undefined);
    CHECK(p.rank.rank == 0);
    CHECK(p.isometry.max_abs() == 0.0);
  }
}

TEST_CASE("phi fixes unitaries and strips positive factors") {
  Rng rng(16);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 3;
    const Matrix u = rng.haar_unitary(n);
    CHECK((phi(u).isometry - u).max_abs() <= 1e-12);
    const Matrix p = rng.positive_definite(n, 0.3);
    CHECK((phi(p * u).isometry - u).max_abs() <= 1e-9);
  }
}

TEST_CASE("phi outputs are partial isometries") {
  Rng rng(17);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 3;
    const Matrix u = rng.haar_unitary(n);
    const Matrix v = rng.haar_unitary(n);
    std::vector<double> d = {rng.uniform(0.5, 2.0), i % 2 ? rng.uniform(0.5, 2.0) : 0.0,
                             i % 3 ? 0.0 : rng.uniform(0.5, 2.0)};
    const PolarProjection p = phi(u * Matrix::diagonal_real(d) * v.adjoint());
    if (p.rank.status == Definedness::undefined) continue;
    const Matrix left = p.isometry * p.isometry.adjoint();
    const Matrix right = p.isometry.adjoint() * p.isometry;
    CHECK(left.is_projector(1e-9));
    CHECK(right.is_projector(1e-9));
  }
}
