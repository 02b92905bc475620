#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>

#include "core/holonomy.hpp"
#include "core/rng.hpp"
#include "oracles.hpp"

using namespace ogp;
using std::numbers::pi;

namespace {

Matrix basis_column(std::size_t dim, std::size_t index) {
  Matrix m(dim, 1);
  m(index, 0) = 1.0;
  return m;
}

// 1-dim frame e^{i theta(s)} e_0 sampled uniformly on [0, 1].
FramePath phase_path(double total_phase, std::size_t n_samples) {
  std::vector<PathSample> samples;
  for (std::size_t k = 0; k < n_samples; ++k) {
    const double s = static_cast<double>(k) / static_cast<double>(n_samples - 1);
    Matrix v(2, 1);
    v(0, 0) = std::exp(Complex(0.0, total_phase * s));
    samples.push_back({s, Frame(v)});
  }
  return FramePath(std::move(samples));
}

// Smooth 2-dim path in a 4-dim ambient space whose connection does not
// commute with itself at different parameters: frames are dragged by
// exp(i s A) exp(i 0.7 s B) with non-commuting involutions A and B.
Frame twisted_frame(double s) {
  const Matrix a{{0.0, 0.0, 1.0, 0.0},
                 {0.0, 0.0, 0.0, 1.0},
                 {1.0, 0.0, 0.0, 0.0},
                 {0.0, 1.0, 0.0, 0.0}};
  const Matrix b{{0.0, 1.0, 0.0, 0.0},
                 {1.0, 0.0, 0.0, 0.0},
                 {0.0, 0.0, 0.0, -1.0},
                 {0.0, 0.0, -1.0, 0.0}};
  const auto rot = [](const Matrix& g, double t) {
    return Matrix::identity(4) * Complex(std::cos(t), 0.0) + g * Complex(0.0, std::sin(t));
  };
  const Matrix u = rot(a, s) * rot(b, 0.7 * s);
  return Frame(u.block(0, 0, 4, 2));
}

FramePath twisted_path(std::size_t n) {
  std::vector<PathSample> samples;
  for (std::size_t k = 0; k < n; ++k) {
    const double s = 1.3 * static_cast<double>(k) / static_cast<double>(n - 1);
    samples.push_back({s, twisted_frame(s)});
  }
  return FramePath(std::move(samples));
}

}  // namespace

TEST_CASE("frame ingestion policy") {
  Rng rng(21);
  const Matrix u = rng.haar_unitary(4);
  const Matrix good = u.block(0, 0, 4, 2);

  SUBCASE("clean input is kept verbatim") {
    const Frame f(good);
    CHECK(f.vectors().approx_equal(good, 0.0));
  }
  SUBCASE("small defects get repaired") {
    Matrix dirty = good;
    dirty(0, 0) += 1e-10;
    const Frame f(dirty);
    const Matrix gram = f.vectors().adjoint() * f.vectors();
    CHECK((gram - Matrix::identity(2)).max_abs() <= 1e-13);
  }
  SUBCASE("large defects are rejected") {
    Matrix bad = good;
    bad(0, 0) += 1e-3;
    CHECK_THROWS_AS(Frame{bad}, Error);
  }
  SUBCASE("dependent vectors are rejected") {
    Matrix dep(4, 2);
    dep(0, 0) = 1.0;
    dep(0, 1) = 1.0;
    CHECK_THROWS_AS(Frame{dep}, Error);
  }
}

TEST_CASE("frame path validation") {
  const Frame f(basis_column(2, 0));
  CHECK_THROWS_AS(FramePath({{0.0, f}}), Error);
  CHECK_THROWS_AS(FramePath({{0.0, f}, {0.0, f}}), Error);
  CHECK_THROWS_AS(FramePath({{0.5, f}, {1.0, f}}), Error);
  CHECK_NOTHROW(FramePath({{0.0, f}, {1.0, f}}));
}

TEST_CASE("decomposition validation") {
  const Frame f1(Matrix::identity(4).block(0, 0, 4, 2));
  const Frame f2(Matrix::identity(4).block(0, 2, 4, 2));
  CHECK_NOTHROW(Decomposition({f1, f2}));
  CHECK_THROWS_AS(Decomposition({f1}), Error);           // incomplete
  CHECK_THROWS_AS(Decomposition({f1, f1}), Error);       // not orthogonal
}

TEST_CASE("overlap of frames") {
  const Frame f1(Matrix::identity(4).block(0, 0, 4, 2));
  const Frame f2(Matrix::identity(4).block(0, 2, 4, 2));
  CHECK(overlap(f1, f1).approx_equal(Matrix::identity(2), 1e-15));
  CHECK(overlap(f1, f2).max_abs() == 0.0);

  Matrix mixed(2, 1);
  mixed(0, 0) = 1.0 / std::sqrt(2.0);
  mixed(1, 0) = 1.0 / std::sqrt(2.0);
  const Frame fa(basis_column(2, 0));
  const Frame fb(mixed);
  CHECK(std::abs(overlap(fa, fb)(0, 0) - Complex(1.0 / std::sqrt(2.0), 0.0)) <= 1e-15);

  CHECK_THROWS_AS(overlap(fa, f1), Error);
}

TEST_CASE("transport of a constant path is the identity") {
  Rng rng(22);
  const Frame f(rng.haar_unitary(4).block(0, 0, 4, 2));
  const FramePath path({{0.0, f}, {0.4, f}, {1.0, f}});
  CHECK(wz_transport(path).approx_equal(Matrix::identity(2), 1e-14));
}

TEST_CASE("transport of a pure phase path") {
  // theta: 0 -> pi gives the scalar exp(-i pi); the bra-side derivative
  // convention is pinned here.
  const Matrix w = wz_transport(phase_path(pi, 100));
  CHECK(std::abs(w(0, 0) - Complex(-1.0, 0.0)) <= 1e-12);

  // Brute-force oracle: raw overlap chain at 10x and 100x resolution.
  for (std::size_t n : {1000, 10000}) {
    const FramePath fine = phase_path(pi, n);
    Complex chain = 1.0;
    for (std::size_t j = fine.size() - 1; j >= 1; --j)
      chain *= overlap(fine.samples()[j].frame, fine.samples()[j - 1].frame)(0, 0);
    CHECK(std::abs(chain - Complex(-1.0, 0.0)) <= 1e-4);
  }

  // A quarter turn keeps the sign convention visible.
  const Matrix q = wz_transport(phase_path(pi / 2.0, 200));
  CHECK(std::abs(q(0, 0) - Complex(0.0, -1.0)) <= 1e-12);
}

TEST_CASE("transport error halves when the sampling doubles") {
  const Matrix reference = wz_transport(twisted_path(20000));
  for (std::size_t n : {125, 250, 500}) {
    const double err_n = (wz_transport(twisted_path(n)) - reference).frobenius_norm();
    const double err_2n =
        (wz_transport(twisted_path(2 * n)) - reference).frobenius_norm();
    const double ratio = err_n / err_2n;
    CHECK(ratio >= 1.5);
    CHECK(ratio <= 2.5);
  }
}

TEST_CASE("transport rejects rank-deficient steps") {
  const Frame a(basis_column(4, 0));
  const Frame b(basis_column(4, 1));  // orthogonal jump
  const FramePath path({{0.0, a}, {1.0, b}});
  CHECK_THROWS_AS(wz_transport(path), Error);
}

TEST_CASE("sigma basics") {
  Rng rng(23);
  const Frame f(rng.haar_unitary(4).block(0, 0, 4, 2));
  const FramePath constant({{0.0, f}, {1.0, f}});
  CHECK(sigma(f, constant).approx_equal(Matrix::identity(2), 1e-13));

  // Build a frame orthogonal to f's span: complete f to a basis.
  Matrix full(4, 4);
  full.set_block(0, 0, f.vectors());
  Svd fsvd = svd(f.vectors());
  full.set_block(0, 2, fsvd.u.block(0, 2, 4, 2));
  const Frame perp(full.block(0, 2, 4, 2));
  CHECK(sigma(perp, constant).max_abs() <= 1e-13);
}

TEST_CASE("gamma chains compose right to left") {
  Rng rng(24);
  SigmaMap sigmas;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l) sigmas[{k, l}] = rng.complex_gaussian(2, 2);

  CHECK(gamma(sigmas, {1}).matrix.approx_equal(sigmas[{1, 1}], 0.0));
  CHECK(gamma(sigmas, {1, 2}).matrix.approx_equal(sigmas[{1, 2}] * sigmas[{2, 1}], 1e-15));
  CHECK(gamma(sigmas, {2, 1}).matrix.approx_equal(sigmas[{2, 1}] * sigmas[{1, 2}], 1e-15));
  CHECK(gamma(sigmas, {1, 2, 3}).matrix.approx_equal(
      sigmas[{1, 3}] * sigmas[{3, 2}] * sigmas[{2, 1}], 1e-15));

  CHECK_THROWS_AS(gamma(sigmas, {1, 1}), Error);
  CHECK_THROWS_AS(gamma(sigmas, {1, 4}), Error);

  SigmaMap ragged = sigmas;
  ragged[{1, 2}] = rng.complex_gaussian(2, 3);
  CHECK_THROWS_AS(gamma(ragged, {1, 2}), Error);
}

TEST_CASE("off_diagonal_gp statuses") {
  CHECK(off_diagonal_gp({{1}, -Matrix::identity(2)})
            .isometry.approx_equal(-Matrix::identity(2), 1e-14));
  CHECK(off_diagonal_gp({{1}, Matrix::zero(2, 2)}).status.status ==
        Definedness::undefined);
  const GpResult partial = off_diagonal_gp({{1}, Matrix{{-0.25, 0.0}, {0.0, 0.0}}});
  CHECK(partial.status.status == Definedness::partial);
  CHECK(partial.isometry.approx_equal(Matrix{{-1.0, 0.0}, {0.0, 0.0}}, 1e-14));
}

TEST_CASE("gauge transformation") {
  Rng rng(25);
  SigmaMap sigmas;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l) sigmas[{k, l}] = rng.complex_gaussian(2, 2);

  SUBCASE("identity changes leave sigmas alone") {
    const std::map<int, Matrix> id = {{1, Matrix::identity(2)}, {2, Matrix::identity(2)}};
    const SigmaMap same = gauge_transform(sigmas, id);
    for (const auto& [kl, m] : sigmas) CHECK(same.at(kl).approx_equal(m, 1e-15));
  }

  SUBCASE("non-unitary changes are rejected") {
    const std::map<int, Matrix> bad = {{1, Matrix{{2.0, 0.0}, {0.0, 1.0}}}};
    CHECK_THROWS_AS(gauge_transform(sigmas, bad), Error);
  }

  SUBCASE("covariance of the extracted phases") {
    for (int trial = 0; trial < 25; ++trial) {
      SigmaMap s2;
      for (int k = 1; k <= 2; ++k)
        for (int l = 1; l <= 2; ++l) s2[{k, l}] = rng.complex_gaussian(2, 2);
      const std::map<int, Matrix> changes = {{1, rng.haar_unitary(2)},
                                             {2, rng.haar_unitary(2)}};
      const SigmaMap transformed = gauge_transform(s2, changes);
      for (const std::vector<int>& chain :
           {std::vector<int>{1}, {2}, {1, 2}, {2, 1}}) {
        const Matrix& u = changes.at(chain.front());
        const GpResult before = off_diagonal_gp(gamma(s2, chain));
        const GpResult after = off_diagonal_gp(gamma(transformed, chain));
        CHECK((after.isometry - u.adjoint() * before.isometry * u).max_abs() <= 1e-9);

        if (chain.size() == 2) {
          // Eigenvalue multiset of the kappa = 2 phase is gauge invariant.
          auto [b1, b2] = oracles::eigenvalues_2x2(before.isometry);
          auto [a1, a2] = oracles::eigenvalues_2x2(after.isometry);
          const double direct = std::abs(a1 - b1) + std::abs(a2 - b2);
          const double swapped = std::abs(a1 - b2) + std::abs(a2 - b1);
          CHECK(std::min(direct, swapped) <= 1e-9);
        }
      }
    }
  }

  SUBCASE("diagonal phase change conjugates the kappa = 1 phase") {
    const Matrix u{{1.0, 0.0}, {0.0, Complex(0.0, 1.0)}};
    const std::map<int, Matrix> changes = {{1, u}};
    const SigmaMap transformed = gauge_transform(sigmas, changes);
    const GpResult before = off_diagonal_gp(gamma(sigmas, {1}));
    const GpResult after = off_diagonal_gp(gamma(transformed, {1}));
    CHECK((after.isometry - u.adjoint() * before.isometry * u).max_abs() <= 1e-9);
  }
}

TEST_CASE("frame path JSON round-trips bit exactly") {
  Rng rng(26);
  std::vector<PathSample> samples;
  for (int k = 0; k < 5; ++k) {
    Matrix cols = rng.haar_unitary(4).block(0, 0, 4, 2);
    samples.push_back({k == 0 ? 0.0 : k * 0.1 + rng.uniform() * 1e-3, Frame(cols)});
  }
  const FramePath path(std::move(samples));
  const FramePath parsed = parse_frame_path(frame_path_to_json(path));
  REQUIRE(parsed.size() == path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    CHECK(parsed.samples()[i].s == path.samples()[i].s);
    const Matrix& a = path.samples()[i].frame.vectors();
    const Matrix& b = parsed.samples()[i].frame.vectors();
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) {
        CHECK(a(r, c).real() == b(r, c).real());
        CHECK(a(r, c).imag() == b(r, c).imag());
      }
  }

  const auto file = std::filesystem::temp_directory_path() / "ogp_path_roundtrip.json";
  save_frame_path(path, file.string());
  const FramePath loaded = load_frame_path(file.string());
  CHECK(loaded.samples().back().s == path.samples().back().s);
  std::filesystem::remove(file);

  CHECK_THROWS_AS(parse_frame_path("{not json"), Error);
  CHECK_THROWS_AS(parse_frame_path("{\"ambient_dim\": 2}"), Error);
  CHECK_THROWS_AS(load_frame_path("/nonexistent/path.json"), Error);
}
