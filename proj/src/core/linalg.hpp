#pragma once

#include <functional>
#include <vector>

#include "matrix.hpp"

namespace ogp {

// Relative threshold below which an eigen/singular value counts as zero.
inline constexpr double default_rank_tol = 1e-10;

inline constexpr double default_hermiticity_tol = 1e-9;

// Eigenvalues are sorted descending; vectors holds the matching orthonormal
// eigenvector columns.
struct Eigensystem {
  std::vector<double> values;
  Matrix vectors;
};

// m = u * diag(s) * v^dagger with s sorted descending. u and v are square
// unitaries even for rank-deficient or rectangular input.
struct Svd {
  Matrix u;
  std::vector<double> s;
  Matrix v;
};

enum class Definedness { full, partial, undefined };

struct RankStatus {
  int rank = 0;
  Definedness status = Definedness::undefined;
};

// Partial-isometry part of a matrix together with its rank classification.
struct PolarProjection {
  Matrix isometry;
  RankStatus rank;
};

const char* definedness_name(Definedness d);

// Cyclic Jacobi diagonalization of a Hermitian matrix. Throws not_hermitian
// when the input fails the hermiticity check.
Eigensystem eig_hermitian(const Matrix& m, double hermiticity_tol = default_hermiticity_tol);

// One-sided Jacobi SVD. Small singular values come out with high relative
// accuracy, which the rank classification below depends on.
Svd svd(const Matrix& m);

Matrix svd_reconstruct(const Svd& f);

// Moore-Penrose pseudoinverse; singular values <= tol * s_max map to zero.
Matrix pseudo_inverse(const Matrix& m, double tol = default_rank_tol);

// Q f(lambda) Q^dagger for Hermitian input.
Matrix herm_fn(const Matrix& m, const std::function<double(double)>& f,
               double hermiticity_tol = default_hermiticity_tol);

// Polar projection m -> pinv(sqrt(m m^dagger)) * m. Full rank gives a
// unitary, lower rank a partial isometry, zero the zero matrix.
PolarProjection phi(const Matrix& m, double tol = default_rank_tol);

}  // namespace ogp
