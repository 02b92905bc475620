#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "frame.hpp"
#include "holonomy.hpp"
#include "linalg.hpp"

namespace ogp {

// XY and z-axis Dzyaloshinskii-Moriya coupling strengths per bond of the
// cyclic four-qubit chain, bonds (1,2), (2,3), (3,4), (4,1).
struct RingCouplings {
  double j12 = 0.0, j23 = 0.0, j34 = 0.0, j41 = 0.0;
  double d12 = 0.0, d23 = 0.0, d34 = 0.0, d41 = 0.0;
};

// A pulse is fully described by its couplings and the time integral of the
// scalar envelope; the envelope shape never enters the dynamics.
struct PulseSpec {
  RingCouplings couplings;
  double area = 0.0;
};

struct TMatrix {
  Matrix matrix;  // 2x2
  Svd svd;
};

// Indices of |1000>, |0010>, |0100>, |0001> inside the 16-dim register,
// qubit 1 the most significant bit.
inline constexpr std::array<std::size_t, 4> single_excitation_indices = {8, 2, 4, 1};

// Coupling matrix between the two 2-dim subspaces spanned by
// {|1000>,|0010>} and {|0100>,|0001>}. In strict mode a rank-deficient T is
// rejected, matching the S > 0 assumption behind the closed-form evolution
// sector analysis.
TMatrix t_matrix(const RingCouplings& c, bool strict_positive = false,
                 double rank_tol = default_rank_tol);

// Full 16-dim chain Hamiltonian (envelope factored out). Commutes with the
// total excitation number.
Matrix full_hamiltonian(const RingCouplings& c);

// Restriction to the single-excitation subspace in the ordered basis above:
// block off-diagonal with upper-right block T.
Matrix effective_hamiltonian(const RingCouplings& c);

// Closed-form pulse propagator on the single-excitation subspace with its
// four 2x2 blocks; equals exp(-i * area * H_eff).
class EvolutionOperator {
 public:
  explicit EvolutionOperator(Matrix m) : matrix_(std::move(m)) {}

  const Matrix& matrix() const { return matrix_; }

  // k, l in {1, 2}.
  Matrix block(int k, int l) const {
    return matrix_.block(k == 1 ? 0 : 2, l == 1 ? 0 : 2, 2, 2);
  }

 private:
  Matrix matrix_;  // 4x4
};

EvolutionOperator evolve(const PulseSpec& pulse, bool strict_positive = false);

// kappa = 1 sector label: the geometric phase equals
// (-1)^c * Q * Z^d * Q^dagger with Z = diag(1, -1), signs read from
// cos(area * s_i) in descending singular-value order.
struct SectorLabel {
  int c = 0;
  int d = 0;
  Matrix conjugating_unitary;  // U for subspace 1, V for subspace 2
};

struct Kappa1Result {
  GpResult gp1, gp2;
  std::optional<SectorLabel> label1, label2;  // present only at full rank
};

Kappa1Result gp_kappa1(const PulseSpec& pulse, double rank_tol = default_rank_tol);

// Both orderings of the kappa = 2 phase for a single pulse; equals -1 at
// full rank of sin(area * S).
std::pair<GpResult, GpResult> gp_kappa2_single(const PulseSpec& pulse,
                                               double rank_tol = default_rank_tol);

// Two-pulse propagator. The first pulse must be fully off-diagonal
// (cos(area * S) ~ 0) so the second pulse also parallel transports both
// subspaces; otherwise first_pulse_not_off_diagonal is thrown.
EvolutionOperator compose_pulses(const PulseSpec& first, const PulseSpec& second,
                                 double off_diagonal_tol = 1e-8);

std::pair<GpResult, GpResult> gp_kappa2_composed(const PulseSpec& first,
                                                 const PulseSpec& second,
                                                 double rank_tol = default_rank_tol,
                                                 double off_diagonal_tol = 1e-8);

struct Su2TargetResult {
  PulseSpec first, second;
  double distance = 0.0;  // Frobenius after sign alignment
  bool converged = false;
};

// Finds a two-pulse sequence whose kappa = 2 phase matches an arbitrary
// SU(2) target: analytic construction plus a simplex polish.
Su2TargetResult su2_target(const Matrix& target, double tol = 1e-6);

// Frobenius distance minimized over the +-1 phase ambiguity of SU(2).
double sign_aligned_distance(const Matrix& a, const Matrix& b);

// Frobenius distance minimized over a global U(1) phase.
double phase_aligned_distance(const Matrix& a, const Matrix& b);

struct SweepRow {
  double area = 0.0;
  std::array<int, 2> cos_sign = {1, 1};
  int c = 0;
  int d = 0;
  std::array<Definedness, 2> kappa1_status = {Definedness::full, Definedness::full};
  Definedness kappa2_status = Definedness::full;
  int boundary = 0;  // bitmask: 1 kappa1 boundary, 2 kappa2 singular point
};

// Classifies every grid area and inserts bisection-refined rows wherever a
// cosine or sine eigenvalue crosses zero. Classification uses an absolute
// threshold on the O(1)-scaled cos/sin eigenvalues so refined rows report
// partial/undefined correctly.
std::vector<SweepRow> sweep_area(const RingCouplings& c, const std::vector<double>& grid,
                                 double zero_tol = 1e-9);

// Frames of subspace l (1 or 2) dragged by the pulse, sampled uniformly in
// partial area. Feeds the discrete-transport cross-checks.
FramePath transported_frame_path(const PulseSpec& pulse, int l, std::size_t n_samples);

}  // namespace ogp
