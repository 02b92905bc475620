#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace ogp {

// Projector onto H_1 (span of basis vectors 1,2) or H_2 (3,4).
Matrix subspace_projector(int l);

// Parameters of the block-diagonal generator h used to drive the variable
// unitary: cross couplings across the ring diagonals plus a relative energy
// shift, with its own pulse area.
struct WGenParams {
  double j13 = 0.0, j24 = 0.0;
  double d13 = 0.0, d24 = 0.0;
  double e_shift = 0.0;
  double b_area = 1.0;
};

// Block-diagonal variable unitary. The generator's blocks are traceless
// Hermitian, so each block of W is SU(2).
class WOperator {
 public:
  static WOperator from_params(const WGenParams& p);
  // Test hook: assemble directly from the two blocks of W.
  static WOperator from_blocks(const Matrix& w1, const Matrix& w2);

  const Matrix& w() const { return w_; }             // applied on the ancilla branch
  Matrix w_dagger() const { return w_.adjoint(); }   // exp(+i b h)
  Matrix block(int l) const { return w_.block(l == 1 ? 0 : 2, l == 1 ? 0 : 2, 2, 2); }

 private:
  explicit WOperator(Matrix w) : w_(std::move(w)) {}
  Matrix w_;  // 4x4
};

WOperator w_from_params(const WGenParams& p);

// Ancilla interferometer: Hadamard, conditional evolution/projection
// sequence on the |0_a> branch, conditional W on |1_a>, Hadamard, then the
// probability of the |0_a> output port.
double run_ancilla(const Matrix& psi, int l, const EvolutionOperator& ev,
                   const WOperator& w, double subspace_tol = 1e-8);

// Closed form 1/4 + 1/4 <psi|gamma^+ gamma|psi> + 1/2 Re <psi|W^+ gamma|psi>
// the pipeline must reproduce.
double ancilla_probability_closed_form(const Matrix& psi, int l,
                                       const EvolutionOperator& ev, const WOperator& w);

// Ancilla-free loop: |<psi| W^+ P_l U P_{3-l} U |psi>|^2.
double run_direct(const Matrix& psi, int l, const EvolutionOperator& ev,
                  const WOperator& w, double subspace_tol = 1e-8);

enum class RecoverMode { ancilla, direct };

struct RecoverOptions {
  long budget = 20000;
  std::uint64_t seed = 0;
  double rank_tol = default_rank_tol;
  bool refine_b_area = true;
  int restarts = 16;
  double subspace_tol = 1e-8;
};

struct RecoveryResult {
  WGenParams params;
  Matrix estimate;      // recovered block of W on H_l
  Matrix ground_truth;  // polar part of gamma_{l(3-l)}
  double distance_raw = 0.0;
  double distance_aligned = 0.0;
  double objective = 0.0;  // summed probability at the optimum
  long evaluations = 0;
  bool converged = false;
  std::vector<double> probe_probabilities;
  std::vector<std::pair<long, double>> trace;  // (evaluation, best objective)
};

// Probability-maximizing recovery of the kappa = 2 geometric phase over the
// generator parameters acting on H_l. Requires a full-rank gamma. A result
// with converged = false carries the best point found.
RecoveryResult recover_gp(const std::vector<Matrix>& probes, int l,
                          const EvolutionOperator& ev, RecoverMode mode,
                          const RecoverOptions& opts = {});

// Ancilla mode: the two basis probes of H_l. Direct mode adds their balanced
// superposition; a single probe pins W only up to its stabilizer.
std::vector<Matrix> default_probes(int l, RecoverMode mode);

}  // namespace ogp
