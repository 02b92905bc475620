#include "holonomy.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace ogp {

Matrix overlap(const Frame& a, const Frame& b) {
  if (a.ambient_dim() != b.ambient_dim())
    fail(ErrorCode::dimension_mismatch, "overlap needs a shared ambient space");
  return a.vectors().adjoint() * b.vectors();
}

Matrix wz_transport(const FramePath& path, double rank_tol) {
  const auto& samples = path.samples();
  const std::size_t n = path.subspace_dim();
  Matrix w = Matrix::identity(n);
  // Latest step leftmost; polar reprojection keeps the product norm-stable.
  for (std::size_t j = samples.size() - 1; j >= 1; --j) {
    const Matrix step = overlap(samples[j].frame, samples[j - 1].frame);
    const PolarProjection p = phi(step, rank_tol);
    if (p.rank.status != Definedness::full) {
      std::ostringstream msg;
      msg << "consecutive frames lose rank between s=" << samples[j - 1].s
          << " and s=" << samples[j].s;
      fail(ErrorCode::degenerate_path, msg.str());
    }
    w = w * p.isometry;
  }
  return w;
}

Matrix sigma(const Frame& k_frame_at_0, const FramePath& l_path, double rank_tol) {
  if (k_frame_at_0.ambient_dim() != l_path.ambient_dim())
    fail(ErrorCode::dimension_mismatch, "sigma needs a shared ambient space");
  return overlap(k_frame_at_0, l_path.final_frame()) * wz_transport(l_path, rank_tol);
}

SigmaMatrix sigma(int k, const Frame& k_frame_at_0, int l, const FramePath& l_path,
                  double rank_tol) {
  return {k, l, sigma(k_frame_at_0, l_path, rank_tol)};
}

GammaChain gamma(const SigmaMap& sigmas, const std::vector<int>& chain) {
  if (chain.empty()) fail(ErrorCode::invalid_argument, "empty index chain");
  if (std::set<int>(chain.begin(), chain.end()).size() != chain.size())
    fail(ErrorCode::invalid_argument, "chain indices must be distinct");

  const auto lookup = [&](int a, int b) -> const Matrix& {
    const auto it = sigmas.find({a, b});
    if (it == sigmas.end()) {
      std::ostringstream msg;
      msg << "missing sigma_(" << a << "," << b << ")";
      fail(ErrorCode::missing_sigma, msg.str());
    }
    return it->second;
  };

  const std::size_t kappa = chain.size();
  Matrix m = kappa == 1 ? lookup(chain[0], chain[0])
                        : lookup(chain[0], chain[kappa - 1]);
  for (std::size_t j = kappa - 1; j >= 1; --j) m = m * lookup(chain[j], chain[j - 1]);
  if (!m.square())
    fail(ErrorCode::dimension_mismatch, "gamma chain does not close to a square matrix");
  return {chain, std::move(m)};
}

GpResult off_diagonal_gp(const GammaChain& g, double tol) {
  const PolarProjection p = phi(g.matrix, tol);
  return {p.isometry, p.rank};
}

SigmaMap gauge_transform(const SigmaMap& sigmas,
                         const std::map<int, Matrix>& frame_changes,
                         double unitary_tol) {
  for (const auto& [idx, u] : frame_changes)
    if (!u.is_unitary(unitary_tol)) {
      std::ostringstream msg;
      msg << "frame change for subspace " << idx << " is not unitary";
      fail(ErrorCode::not_unitary, msg.str());
    }
  SigmaMap out;
  for (const auto& [kl, m] : sigmas) {
    Matrix t = m;
    if (const auto uk = frame_changes.find(kl.first); uk != frame_changes.end())
      t = uk->second.adjoint() * t;
    if (const auto ul = frame_changes.find(kl.second); ul != frame_changes.end())
      t = t * ul->second;
    out.emplace(kl, std::move(t));
  }
  return out;
}

}  // namespace ogp
