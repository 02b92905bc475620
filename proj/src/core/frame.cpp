#include "frame.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "errors.hpp"

namespace ogp {

namespace {

double gram_defect(const Matrix& cols) {
  return (cols.adjoint() * cols - Matrix::identity(cols.cols())).frobenius_norm();
}

Matrix gram_schmidt(Matrix cols) {
  for (std::size_t j = 0; j < cols.cols(); ++j) {
    Matrix c = cols.column(j);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t k = 0; k < j; ++k) {
        Matrix prev = cols.column(k);
        c -= prev * inner(prev, c);
      }
    const double n = vector_norm(c);
    if (n < 1e-8)
      fail(ErrorCode::bad_frame, "frame vectors are linearly dependent");
    cols.set_column(j, c * Complex(1.0 / n, 0.0));
  }
  return cols;
}

}  // namespace

Frame::Frame(Matrix columns) : vectors_(std::move(columns)) {
  if (vectors_.cols() == 0 || vectors_.cols() > vectors_.rows())
    fail(ErrorCode::bad_frame, "frame must have 1..ambient_dim vectors");
  const double defect = gram_defect(vectors_);
  if (defect <= accept_defect) return;
  if (defect < repair_defect) {
    vectors_ = gram_schmidt(std::move(vectors_));
    return;
  }
  std::ostringstream msg;
  msg << "frame is not orthonormal (Gram defect " << defect << ")";
  fail(ErrorCode::bad_frame, msg.str());
}

Decomposition::Decomposition(std::vector<Frame> frames, double ortho_tol)
    : frames_(std::move(frames)) {
  if (frames_.empty()) fail(ErrorCode::bad_frame, "decomposition needs frames");
  const std::size_t ambient = frames_.front().ambient_dim();
  std::size_t total = 0;
  for (const Frame& f : frames_) {
    if (f.ambient_dim() != ambient)
      fail(ErrorCode::dimension_mismatch, "frames live in different ambient spaces");
    total += f.dim();
  }
  if (total != ambient)
    fail(ErrorCode::bad_frame, "subspace dimensions do not sum to the ambient dimension");
  for (std::size_t a = 0; a < frames_.size(); ++a)
    for (std::size_t b = a + 1; b < frames_.size(); ++b) {
      const double cross =
          (frames_[a].vectors().adjoint() * frames_[b].vectors()).max_abs();
      if (cross > ortho_tol)
        fail(ErrorCode::bad_frame, "subspaces are not mutually orthogonal");
    }
}

FramePath::FramePath(std::vector<PathSample> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 2)
    fail(ErrorCode::invalid_argument, "frame path needs at least 2 samples");
  const std::size_t ambient = samples_.front().frame.ambient_dim();
  const std::size_t dim = samples_.front().frame.dim();
  if (std::abs(samples_.front().s) > 1e-12)
    fail(ErrorCode::invalid_argument, "frame path must start at parameter 0");
  double prev = samples_.front().s;
  for (std::size_t i = 1; i < samples_.size(); ++i) {
    const PathSample& smp = samples_[i];
    if (smp.frame.ambient_dim() != ambient || smp.frame.dim() != dim)
      fail(ErrorCode::dimension_mismatch, "frame path mixes frame shapes");
    if (!(smp.s > prev))
      fail(ErrorCode::invalid_argument, "frame path parameters must increase strictly");
    prev = smp.s;
  }
}

FramePath parse_frame_path(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("frame path JSON: ") + e.what());
  }
  try {
    const auto ambient = j.at("ambient_dim").get<std::size_t>();
    const auto dim = j.at("subspace_dim").get<std::size_t>();
    std::vector<PathSample> samples;
    for (const auto& smp : j.at("samples")) {
      Matrix cols(ambient, dim);
      const auto& vecs = smp.at("vectors");
      if (vecs.size() != dim)
        fail(ErrorCode::parse, "sample has wrong number of vectors");
      for (std::size_t v = 0; v < dim; ++v) {
        if (vecs[v].size() != ambient)
          fail(ErrorCode::parse, "vector has wrong length");
        for (std::size_t i = 0; i < ambient; ++i)
          cols(i, v) = Complex(vecs[v][i].at(0).get<double>(),
                               vecs[v][i].at(1).get<double>());
      }
      samples.push_back({smp.at("s").get<double>(), Frame(std::move(cols))});
    }
    return FramePath(std::move(samples));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("frame path JSON: ") + e.what());
  }
}

FramePath load_frame_path(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) fail(ErrorCode::io, "cannot open " + filename);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_frame_path(buf.str());
}

std::string frame_path_to_json(const FramePath& path) {
  nlohmann::json j;
  j["ambient_dim"] = path.ambient_dim();
  j["subspace_dim"] = path.subspace_dim();
  j["samples"] = nlohmann::json::array();
  for (const PathSample& smp : path.samples()) {
    nlohmann::json vecs = nlohmann::json::array();
    for (std::size_t v = 0; v < path.subspace_dim(); ++v) {
      nlohmann::json vec = nlohmann::json::array();
      for (std::size_t i = 0; i < path.ambient_dim(); ++i) {
        const Complex z = smp.frame.vectors()(i, v);
        vec.push_back({z.real(), z.imag()});
      }
      vecs.push_back(std::move(vec));
    }
    j["samples"].push_back({{"s", smp.s}, {"vectors", std::move(vecs)}});
  }
  return j.dump(2);
}

void save_frame_path(const FramePath& path, const std::string& filename) {
  std::ofstream out(filename);
  if (!out) fail(ErrorCode::io, "cannot write " + filename);
  out << frame_path_to_json(path) << '\n';
}

}  // namespace ogp
