#pragma once

#include <string>
#include <vector>

#include "matrix.hpp"

namespace ogp {

// Ordered orthonormal basis spanning a subspace of the ambient space.
// Vectors are the columns of an ambient_dim x dim matrix.
//
// Ingestion policy: a Gram defect up to 1e-12 is accepted as-is, up to 1e-8
// it is repaired by Gram-Schmidt (tolerates file-format rounding), anything
// larger is rejected as bad input.
class Frame {
 public:
  explicit Frame(Matrix columns);

  std::size_t ambient_dim() const { return vectors_.rows(); }
  std::size_t dim() const { return vectors_.cols(); }
  const Matrix& vectors() const { return vectors_; }

  static constexpr double accept_defect = 1e-12;
  static constexpr double repair_defect = 1e-8;

 private:
  Matrix vectors_;
};

// Complete decomposition of the ambient space into mutually orthogonal
// subspaces at a common parameter value.
class Decomposition {
 public:
  explicit Decomposition(std::vector<Frame> frames, double ortho_tol = 1e-8);

  const std::vector<Frame>& frames() const { return frames_; }
  std::size_t ambient_dim() const { return frames_.front().ambient_dim(); }

 private:
  std::vector<Frame> frames_;
};

struct PathSample {
  double s = 0.0;
  Frame frame;
};

// Discretely sampled path of frames, parameter strictly increasing from 0.
class FramePath {
 public:
  explicit FramePath(std::vector<PathSample> samples);

  const std::vector<PathSample>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const Frame& initial_frame() const { return samples_.front().frame; }
  const Frame& final_frame() const { return samples_.back().frame; }
  std::size_t ambient_dim() const { return samples_.front().frame.ambient_dim(); }
  std::size_t subspace_dim() const { return samples_.front().frame.dim(); }

 private:
  std::vector<PathSample> samples_;
};

// JSON file format: {"ambient_dim": N, "subspace_dim": n,
//   "samples": [{"s": t, "vectors": [[[re, im], ...N], ...n]}, ...]}.
// Doubles round-trip bit exactly.
FramePath load_frame_path(const std::string& filename);
FramePath parse_frame_path(const std::string& json_text);
std::string frame_path_to_json(const FramePath& path);
void save_frame_path(const FramePath& path, const std::string& filename);

}  // namespace ogp
