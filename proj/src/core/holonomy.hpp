#pragma once

#include <map>
#include <utility>
#include <vector>

#include "frame.hpp"
#include "linalg.hpp"

namespace ogp {

// Overlap matrix [a|b]_pq = <a_p|b_q> (first argument conjugated).
Matrix overlap(const Frame& a, const Frame& b);

// Discrete Wilczek-Zee transport along a sampled path. Each step contributes
// the polar-projected overlap of consecutive frames, composed so that the
// chain equals F(t)^+ P(s_{M-1}) ... P(s_1) F(0) restricted to the subspace;
// the continuum limit is the time-ordered exponential of the connection
// <d_s l^p | l^q>. A transport generated by an evolution whose block-diagonal
// generator vanishes yields the identity. Throws degenerate_path when a step
// overlap is rank deficient.
Matrix wz_transport(const FramePath& path, double rank_tol = default_rank_tol);

struct SigmaMatrix {
  int k = 0;
  int l = 0;
  Matrix matrix;
};

// Map keyed by (k, l) subspace index pairs.
using SigmaMap = std::map<std::pair<int, int>, Matrix>;

// sigma_kl = [F_k(0)|F_l(t)] * transport(path_l).
Matrix sigma(const Frame& k_frame_at_0, const FramePath& l_path,
             double rank_tol = default_rank_tol);
SigmaMatrix sigma(int k, const Frame& k_frame_at_0, int l, const FramePath& l_path,
                  double rank_tol = default_rank_tol);

struct GammaChain {
  std::vector<int> indices;
  Matrix matrix;
};

// gamma_{l1...lk} = sigma_{l1 lk} sigma_{lk lk-1} ... sigma_{l2 l1}.
// Indices must be distinct and every needed sigma present.
GammaChain gamma(const SigmaMap& sigmas, const std::vector<int>& chain);

struct GpResult {
  Matrix isometry;
  RankStatus status;
};

GpResult off_diagonal_gp(const GammaChain& g, double tol = default_rank_tol);

// Frame change at parameter 0: sigma_kl -> U_k^dagger sigma_kl U_l for every
// pair with a unitary assigned to either index.
SigmaMap gauge_transform(const SigmaMap& sigmas,
                         const std::map<int, Matrix>& frame_changes,
                         double unitary_tol = 1e-8);

}  // namespace ogp
