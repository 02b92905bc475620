// extern "C" bridge around the C++ core. Exceptions stop here: every entry
// point maps them to status codes and stashes the detail in a thread-local
// message retrievable through ogp_last_error().

#include "ogp/ogp.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "core/frame.hpp"
#include "core/holonomy.hpp"
#include "core/interferometer.hpp"
#include "core/linalg.hpp"
#include "core/ring.hpp"
#include "core/selftest.hpp"

struct ogp_matrix {
  ogp::Matrix m;
};
struct ogp_evolution {
  ogp::EvolutionOperator ev;
};
struct ogp_gp {
  ogp::GpResult r;
};
struct ogp_sweep {
  std::vector<ogp::SweepRow> rows;
};
struct ogp_path_set {
  std::vector<ogp::FramePath> paths;
};
struct ogp_recovery {
  ogp::RecoveryResult r;
};

namespace {

thread_local std::string g_last_error;

ogp_status map_code(ogp::ErrorCode code) {
  using ogp::ErrorCode;
  switch (code) {
    case ErrorCode::invalid_argument: return OGP_ERR_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return OGP_ERR_DIMENSION_MISMATCH;
    case ErrorCode::not_hermitian: return OGP_ERR_NOT_HERMITIAN;
    case ErrorCode::not_unitary: return OGP_ERR_NOT_UNITARY;
    case ErrorCode::bad_frame: return OGP_ERR_BAD_FRAME;
    case ErrorCode::degenerate_path: return OGP_ERR_DEGENERATE_PATH;
    case ErrorCode::missing_sigma: return OGP_ERR_MISSING_SIGMA;
    case ErrorCode::singular_t: return OGP_ERR_SINGULAR_T;
    case ErrorCode::first_pulse_not_off_diagonal:
      return OGP_ERR_FIRST_PULSE_NOT_OFF_DIAGONAL;
    case ErrorCode::state_outside_subspace: return OGP_ERR_STATE_OUTSIDE_SUBSPACE;
    case ErrorCode::parse: return OGP_ERR_PARSE;
    case ErrorCode::io: return OGP_ERR_IO;
    case ErrorCode::convergence: return OGP_ERR_CONVERGENCE;
  }
  return OGP_ERR_INTERNAL;
}

template <typename F>
ogp_status guarded(F&& body) {
  try {
    return body();
  } catch (const ogp::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OGP_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return OGP_ERR_INTERNAL;
  }
}

ogp_status null_argument(const char* what) {
  g_last_error = std::string("null argument: ") + what;
  return OGP_ERR_NULL_ARGUMENT;
}

ogp::RingCouplings to_core(const ogp_couplings& c) {
  return {c.j12, c.j23, c.j34, c.j41, c.d12, c.d23, c.d34, c.d41};
}

ogp::PulseSpec to_core(const ogp_pulse& p) { return {to_core(p.couplings), p.area}; }

ogp::WGenParams to_core(const ogp_w_params& w) {
  ogp::WGenParams out;
  out.j13 = w.j13;
  out.j24 = w.j24;
  out.d13 = w.d13;
  out.d24 = w.d24;
  out.e_shift = w.e_shift;
  out.b_area = w.b_area;
  return out;
}

ogp_definedness to_c(ogp::Definedness d) {
  switch (d) {
    case ogp::Definedness::full: return OGP_GP_FULL;
    case ogp::Definedness::partial: return OGP_GP_PARTIAL;
    case ogp::Definedness::undefined: return OGP_GP_UNDEFINED;
  }
  return OGP_GP_UNDEFINED;
}

ogp::Matrix state_from(const double psi[8]) {
  ogp::Matrix m(4, 1);
  for (std::size_t i = 0; i < 4; ++i) m(i, 0) = ogp::Complex(psi[2 * i], psi[2 * i + 1]);
  return m;
}

void write_interleaved(const ogp::Matrix& m, double* buffer) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      buffer[idx++] = m(i, j).real();
      buffer[idx++] = m(i, j).imag();
    }
}

double rank_tol_or_default(double tol) { return tol > 0.0 ? tol : ogp::default_rank_tol; }

ogp_gp* make_gp(ogp::GpResult r) { return new ogp_gp{std::move(r)}; }

}  // namespace

extern "C" {

const char* ogp_status_name(ogp_status status) {
  switch (status) {
    case OGP_OK: return "ok";
    case OGP_ERR_NULL_ARGUMENT: return "null argument";
    case OGP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case OGP_ERR_DIMENSION_MISMATCH: return "dimension mismatch";
    case OGP_ERR_NOT_HERMITIAN: return "not hermitian";
    case OGP_ERR_NOT_UNITARY: return "not unitary";
    case OGP_ERR_BAD_FRAME: return "bad frame";
    case OGP_ERR_DEGENERATE_PATH: return "degenerate path";
    case OGP_ERR_MISSING_SIGMA: return "missing sigma";
    case OGP_ERR_SINGULAR_T: return "singular T";
    case OGP_ERR_FIRST_PULSE_NOT_OFF_DIAGONAL: return "first pulse not off-diagonal";
    case OGP_ERR_STATE_OUTSIDE_SUBSPACE: return "state outside subspace";
    case OGP_ERR_PARSE: return "parse error";
    case OGP_ERR_IO: return "io error";
    case OGP_ERR_CONVERGENCE: return "convergence failure";
    case OGP_ERR_INTERNAL: return "internal error";
  }
  return "?";
}

const char* ogp_last_error(void) { return g_last_error.c_str(); }

const char* ogp_version(void) { return "1.0.0"; }

/* ---------------- matrices ---------------- */

ogp_status ogp_matrix_create(size_t rows, size_t cols, const double* data,
                             ogp_matrix** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    if (rows == 0 || cols == 0)
      ogp::fail(ogp::ErrorCode::invalid_argument, "matrix must be non-empty");
    ogp::Matrix m(rows, cols);
    if (data) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          m(i, j) = ogp::Complex(data[idx], data[idx + 1]);
          idx += 2;
        }
    }
    *out = new ogp_matrix{std::move(m)};
    return OGP_OK;
  });
}

void ogp_matrix_free(ogp_matrix* m) { delete m; }

size_t ogp_matrix_rows(const ogp_matrix* m) { return m ? m->m.rows() : 0; }

size_t ogp_matrix_cols(const ogp_matrix* m) { return m ? m->m.cols() : 0; }

ogp_status ogp_matrix_get(const ogp_matrix* m, size_t row, size_t col, double* re,
                          double* im) {
  if (!m) return null_argument("matrix");
  if (!re || !im) return null_argument("re/im");
  if (row >= m->m.rows() || col >= m->m.cols()) {
    g_last_error = "matrix index out of range";
    return OGP_ERR_DIMENSION_MISMATCH;
  }
  *re = m->m(row, col).real();
  *im = m->m(row, col).imag();
  return OGP_OK;
}

ogp_status ogp_matrix_copy_data(const ogp_matrix* m, double* buffer) {
  if (!m) return null_argument("matrix");
  if (!buffer) return null_argument("buffer");
  write_interleaved(m->m, buffer);
  return OGP_OK;
}

ogp_status ogp_polar_project(const ogp_matrix* m, double rank_tol,
                             ogp_matrix** isometry, int* rank,
                             ogp_definedness* status) {
  if (!m) return null_argument("matrix");
  if (!isometry) return null_argument("isometry");
  return guarded([&] {
    const ogp::PolarProjection p = ogp::phi(m->m, rank_tol_or_default(rank_tol));
    *isometry = new ogp_matrix{p.isometry};
    if (rank) *rank = p.rank.rank;
    if (status) *status = to_c(p.rank.status);
    return OGP_OK;
  });
}

/* ---------------- ring model ---------------- */

ogp_status ogp_t_singular_values(const ogp_couplings* c, double out[2]) {
  if (!c) return null_argument("couplings");
  if (!out) return null_argument("out");
  return guarded([&] {
    const ogp::TMatrix tm = ogp::t_matrix(to_core(*c));
    out[0] = tm.svd.s[0];
    out[1] = tm.svd.s[1];
    return OGP_OK;
  });
}

ogp_status ogp_full_hamiltonian(const ogp_couplings* c, ogp_matrix** out) {
  if (!c) return null_argument("couplings");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new ogp_matrix{ogp::full_hamiltonian(to_core(*c))};
    return OGP_OK;
  });
}

ogp_status ogp_effective_hamiltonian(const ogp_couplings* c, ogp_matrix** out) {
  if (!c) return null_argument("couplings");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new ogp_matrix{ogp::effective_hamiltonian(to_core(*c))};
    return OGP_OK;
  });
}

ogp_status ogp_evolve(const ogp_pulse* pulse, int strict_positive_s,
                      ogp_evolution** out) {
  if (!pulse) return null_argument("pulse");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new ogp_evolution{ogp::evolve(to_core(*pulse), strict_positive_s != 0)};
    return OGP_OK;
  });
}

ogp_status ogp_compose(const ogp_pulse* first, const ogp_pulse* second,
                       double off_diagonal_tol, ogp_evolution** out) {
  if (!first || !second) return null_argument("pulse");
  if (!out) return null_argument("out");
  return guarded([&] {
    const double tol = off_diagonal_tol > 0.0 ? off_diagonal_tol : 1e-8;
    *out = new ogp_evolution{
        ogp::compose_pulses(to_core(*first), to_core(*second), tol)};
    return OGP_OK;
  });
}

void ogp_evolution_free(ogp_evolution* ev) { delete ev; }

ogp_status ogp_evolution_matrix(const ogp_evolution* ev, ogp_matrix** out) {
  if (!ev) return null_argument("evolution");
  if (!out) return null_argument("out");
  *out = new ogp_matrix{ev->ev.matrix()};
  return OGP_OK;
}

ogp_status ogp_evolution_block(const ogp_evolution* ev, int k, int l, ogp_matrix** out) {
  if (!ev) return null_argument("evolution");
  if (!out) return null_argument("out");
  if ((k != 1 && k != 2) || (l != 1 && l != 2)) {
    g_last_error = "block indices must be 1 or 2";
    return OGP_ERR_INVALID_ARGUMENT;
  }
  *out = new ogp_matrix{ev->ev.block(k, l)};
  return OGP_OK;
}

/* ---------------- geometric phases ---------------- */

void ogp_gp_free(ogp_gp* gp) { delete gp; }

ogp_status ogp_gp_matrix(const ogp_gp* gp, ogp_matrix** out) {
  if (!gp) return null_argument("gp");
  if (!out) return null_argument("out");
  *out = new ogp_matrix{gp->r.isometry};
  return OGP_OK;
}

int ogp_gp_rank(const ogp_gp* gp) { return gp ? gp->r.status.rank : 0; }

ogp_definedness ogp_gp_status(const ogp_gp* gp) {
  return gp ? to_c(gp->r.status.status) : OGP_GP_UNDEFINED;
}

ogp_status ogp_gp_kappa1(const ogp_pulse* pulse, double rank_tol, ogp_gp** gp1,
                         ogp_gp** gp2, ogp_sector_label* label1,
                         ogp_sector_label* label2, int* labels_present) {
  if (!pulse) return null_argument("pulse");
  if (!gp1 || !gp2) return null_argument("gp out");
  return guarded([&] {
    const ogp::Kappa1Result res =
        ogp::gp_kappa1(to_core(*pulse), rank_tol_or_default(rank_tol));
    *gp1 = make_gp(res.gp1);
    *gp2 = make_gp(res.gp2);
    if (labels_present) *labels_present = res.label1.has_value() ? 1 : 0;
    if (res.label1 && label1) {
      label1->c = res.label1->c;
      label1->d = res.label1->d;
      write_interleaved(res.label1->conjugating_unitary, label1->conjugating_unitary);
    }
    if (res.label2 && label2) {
      label2->c = res.label2->c;
      label2->d = res.label2->d;
      write_interleaved(res.label2->conjugating_unitary, label2->conjugating_unitary);
    }
    return OGP_OK;
  });
}

ogp_status ogp_gp_kappa2_single(const ogp_pulse* pulse, double rank_tol, ogp_gp** gp12,
                                ogp_gp** gp21) {
  if (!pulse) return null_argument("pulse");
  if (!gp12 || !gp21) return null_argument("gp out");
  return guarded([&] {
    auto [r12, r21] = ogp::gp_kappa2_single(to_core(*pulse), rank_tol_or_default(rank_tol));
    *gp12 = make_gp(std::move(r12));
    *gp21 = make_gp(std::move(r21));
    return OGP_OK;
  });
}

ogp_status ogp_gp_kappa2_composed(const ogp_pulse* first, const ogp_pulse* second,
                                  double rank_tol, ogp_gp** gp12, ogp_gp** gp21) {
  if (!first || !second) return null_argument("pulse");
  if (!gp12 || !gp21) return null_argument("gp out");
  return guarded([&] {
    auto [r12, r21] = ogp::gp_kappa2_composed(to_core(*first), to_core(*second),
                                              rank_tol_or_default(rank_tol));
    *gp12 = make_gp(std::move(r12));
    *gp21 = make_gp(std::move(r21));
    return OGP_OK;
  });
}

ogp_status ogp_su2_target(const double target[8], double tol, ogp_pulse* first,
                          ogp_pulse* second, double* distance) {
  if (!target) return null_argument("target");
  if (!first || !second) return null_argument("pulse out");
  return guarded([&] {
    ogp::Matrix t(2, 2);
    t(0, 0) = ogp::Complex(target[0], target[1]);
    t(0, 1) = ogp::Complex(target[2], target[3]);
    t(1, 0) = ogp::Complex(target[4], target[5]);
    t(1, 1) = ogp::Complex(target[6], target[7]);
    const ogp::Su2TargetResult res = ogp::su2_target(t, tol > 0.0 ? tol : 1e-6);
    const auto fill = [](const ogp::PulseSpec& p, ogp_pulse* out) {
      out->couplings = {p.couplings.j12, p.couplings.j23, p.couplings.j34,
                        p.couplings.j41, p.couplings.d12, p.couplings.d23,
                        p.couplings.d34, p.couplings.d41};
      out->area = p.area;
    };
    fill(res.first, first);
    fill(res.second, second);
    if (distance) *distance = res.distance;
    if (!res.converged) {
      g_last_error = "su2 target search did not reach the requested tolerance";
      return OGP_ERR_CONVERGENCE;
    }
    return OGP_OK;
  });
}

/* ---------------- sweeps ---------------- */

ogp_status ogp_sweep_run(const ogp_couplings* c, double start, double stop, double step,
                         double zero_tol, ogp_sweep** out) {
  if (!c) return null_argument("couplings");
  if (!out) return null_argument("out");
  return guarded([&] {
    if (!(step > 0.0) || !(stop > start))
      ogp::fail(ogp::ErrorCode::invalid_argument, "need stop > start and step > 0");
    if ((stop - start) / step > 5e7)
      ogp::fail(ogp::ErrorCode::invalid_argument, "grid too large");
    std::vector<double> grid;
    for (double a = start; a <= stop + step * 1e-9; a += step) grid.push_back(a);
    if (grid.back() < stop - step * 1e-9) grid.push_back(stop);
    const double tol = zero_tol > 0.0 ? zero_tol : 1e-9;
    *out = new ogp_sweep{ogp::sweep_area(to_core(*c), grid, tol)};
    return OGP_OK;
  });
}

void ogp_sweep_free(ogp_sweep* s) { delete s; }

size_t ogp_sweep_size(const ogp_sweep* s) { return s ? s->rows.size() : 0; }

ogp_status ogp_sweep_get(const ogp_sweep* s, size_t index, ogp_sweep_row* out) {
  if (!s) return null_argument("sweep");
  if (!out) return null_argument("out");
  if (index >= s->rows.size()) {
    g_last_error = "sweep row index out of range";
    return OGP_ERR_INVALID_ARGUMENT;
  }
  const ogp::SweepRow& row = s->rows[index];
  out->area = row.area;
  out->cos_sign_1 = row.cos_sign[0];
  out->cos_sign_2 = row.cos_sign[1];
  out->c = row.c;
  out->d = row.d;
  out->kappa1_status_1 = to_c(row.kappa1_status[0]);
  out->kappa1_status_2 = to_c(row.kappa1_status[1]);
  out->kappa2_status = to_c(row.kappa2_status);
  out->boundary = row.boundary;
  return OGP_OK;
}

/* ---------------- frame paths ---------------- */

ogp_status ogp_path_set_create(ogp_path_set** out) {
  if (!out) return null_argument("out");
  *out = new ogp_path_set{};
  return OGP_OK;
}

void ogp_path_set_free(ogp_path_set* ps) { delete ps; }

ogp_status ogp_path_set_add_file(ogp_path_set* ps, const char* filename) {
  if (!ps) return null_argument("path set");
  if (!filename) return null_argument("filename");
  return guarded([&] {
    ps->paths.push_back(ogp::load_frame_path(filename));
    return OGP_OK;
  });
}

ogp_status ogp_path_set_add_json(ogp_path_set* ps, const char* json_text) {
  if (!ps) return null_argument("path set");
  if (!json_text) return null_argument("json");
  return guarded([&] {
    ps->paths.push_back(ogp::parse_frame_path(json_text));
    return OGP_OK;
  });
}

size_t ogp_path_set_size(const ogp_path_set* ps) { return ps ? ps->paths.size() : 0; }

namespace {

ogp_status check_path_index(const ogp_path_set* ps, size_t l) {
  if (l < 1 || l > ps->paths.size()) {
    g_last_error = "path index out of range (paths are numbered from 1)";
    return OGP_ERR_INVALID_ARGUMENT;
  }
  return OGP_OK;
}

}  // namespace

ogp_status ogp_path_set_transport(const ogp_path_set* ps, size_t l, ogp_matrix** out) {
  if (!ps) return null_argument("path set");
  if (!out) return null_argument("out");
  if (ogp_status st = check_path_index(ps, l); st != OGP_OK) return st;
  return guarded([&] {
    *out = new ogp_matrix{ogp::wz_transport(ps->paths[l - 1])};
    return OGP_OK;
  });
}

ogp_status ogp_path_set_sigma(const ogp_path_set* ps, size_t k, size_t l,
                              ogp_matrix** out) {
  if (!ps) return null_argument("path set");
  if (!out) return null_argument("out");
  if (ogp_status st = check_path_index(ps, k); st != OGP_OK) return st;
  if (ogp_status st = check_path_index(ps, l); st != OGP_OK) return st;
  return guarded([&] {
    *out = new ogp_matrix{
        ogp::sigma(ps->paths[k - 1].initial_frame(), ps->paths[l - 1])};
    return OGP_OK;
  });
}

ogp_status ogp_path_set_gp(const ogp_path_set* ps, const size_t* chain, size_t chain_len,
                           double rank_tol, ogp_gp** out) {
  if (!ps) return null_argument("path set");
  if (!chain) return null_argument("chain");
  if (!out) return null_argument("out");
  for (size_t i = 0; i < chain_len; ++i)
    if (ogp_status st = check_path_index(ps, chain[i]); st != OGP_OK) return st;
  return guarded([&] {
    ogp::SigmaMap sigmas;
    std::vector<int> idx(chain, chain + chain_len);
    for (size_t a = 0; a < chain_len; ++a)
      for (size_t b = 0; b < chain_len; ++b) {
        const std::pair<int, int> key{idx[a], idx[b]};
        if (sigmas.count(key)) continue;
        sigmas[key] = ogp::sigma(ps->paths[chain[a] - 1].initial_frame(),
                                 ps->paths[chain[b] - 1]);
      }
    const ogp::GammaChain g = ogp::gamma(sigmas, idx);
    *out = make_gp(ogp::off_diagonal_gp(g, rank_tol_or_default(rank_tol)));
    return OGP_OK;
  });
}

ogp_status ogp_path_set_check_decomposition(const ogp_path_set* ps, double ortho_tol) {
  if (!ps) return null_argument("path set");
  return guarded([&] {
    std::vector<ogp::Frame> frames;
    for (const auto& p : ps->paths) frames.push_back(p.initial_frame());
    ogp::Decomposition dec(std::move(frames), ortho_tol > 0.0 ? ortho_tol : 1e-8);
    return OGP_OK;
  });
}

/* ---------------- interferometer ---------------- */

ogp_status ogp_run_ancilla(const ogp_evolution* ev, int l, const double psi[8],
                           const ogp_w_params* w, double* probability) {
  if (!ev) return null_argument("evolution");
  if (!psi) return null_argument("psi");
  if (!w) return null_argument("w params");
  if (!probability) return null_argument("probability");
  return guarded([&] {
    *probability = ogp::run_ancilla(state_from(psi), l, ev->ev,
                                    ogp::w_from_params(to_core(*w)));
    return OGP_OK;
  });
}

ogp_status ogp_run_direct(const ogp_evolution* ev, int l, const double psi[8],
                          const ogp_w_params* w, double* probability) {
  if (!ev) return null_argument("evolution");
  if (!psi) return null_argument("psi");
  if (!w) return null_argument("w params");
  if (!probability) return null_argument("probability");
  return guarded([&] {
    *probability =
        ogp::run_direct(state_from(psi), l, ev->ev, ogp::w_from_params(to_core(*w)));
    return OGP_OK;
  });
}

void ogp_recover_options_default(ogp_recover_options* opts) {
  if (!opts) return;
  opts->budget = 20000;
  opts->seed = 0;
  opts->rank_tol = 0.0;
  opts->refine_b_area = 1;
  opts->restarts = 16;
}

ogp_status ogp_recover(const ogp_evolution* ev, int l, ogp_recover_mode mode,
                       const double* probes, size_t n_probes,
                       const ogp_recover_options* opts, ogp_recovery** out) {
  if (!ev) return null_argument("evolution");
  if (!out) return null_argument("out");
  return guarded([&] {
    const ogp::RecoverMode m =
        mode == OGP_RECOVER_ANCILLA ? ogp::RecoverMode::ancilla : ogp::RecoverMode::direct;
    std::vector<ogp::Matrix> probe_states;
    if (probes && n_probes > 0) {
      probe_states.reserve(n_probes);
      for (size_t i = 0; i < n_probes; ++i) probe_states.push_back(state_from(probes + 8 * i));
    } else {
      probe_states = ogp::default_probes(l, m);
    }
    ogp::RecoverOptions o;
    if (opts) {
      o.budget = opts->budget;
      o.seed = opts->seed;
      if (opts->rank_tol > 0.0) o.rank_tol = opts->rank_tol;
      o.refine_b_area = opts->refine_b_area != 0;
      o.restarts = opts->restarts;
    }
    ogp::RecoveryResult res = ogp::recover_gp(probe_states, l, ev->ev, m, o);
    const bool converged = res.converged;
    *out = new ogp_recovery{std::move(res)};
    if (!converged) {
      g_last_error = "recovery optimizer exhausted its budget before settling";
      return OGP_ERR_CONVERGENCE;
    }
    return OGP_OK;
  });
}

void ogp_recovery_free(ogp_recovery* r) { delete r; }

ogp_status ogp_recovery_params(const ogp_recovery* r, ogp_w_params* out) {
  if (!r) return null_argument("recovery");
  if (!out) return null_argument("out");
  out->j13 = r->r.params.j13;
  out->j24 = r->r.params.j24;
  out->d13 = r->r.params.d13;
  out->d24 = r->r.params.d24;
  out->e_shift = r->r.params.e_shift;
  out->b_area = r->r.params.b_area;
  return OGP_OK;
}

ogp_status ogp_recovery_estimate(const ogp_recovery* r, ogp_matrix** out) {
  if (!r) return null_argument("recovery");
  if (!out) return null_argument("out");
  *out = new ogp_matrix{r->r.estimate};
  return OGP_OK;
}

ogp_status ogp_recovery_ground_truth(const ogp_recovery* r, ogp_matrix** out) {
  if (!r) return null_argument("recovery");
  if (!out) return null_argument("out");
  *out = new ogp_matrix{r->r.ground_truth};
  return OGP_OK;
}

double ogp_recovery_distance_raw(const ogp_recovery* r) {
  return r ? r->r.distance_raw : -1.0;
}

double ogp_recovery_distance_aligned(const ogp_recovery* r) {
  return r ? r->r.distance_aligned : -1.0;
}

double ogp_recovery_objective(const ogp_recovery* r) { return r ? r->r.objective : 0.0; }

long ogp_recovery_evaluations(const ogp_recovery* r) { return r ? r->r.evaluations : 0; }

int ogp_recovery_converged(const ogp_recovery* r) {
  return r && r->r.converged ? 1 : 0;
}

size_t ogp_recovery_probe_count(const ogp_recovery* r) {
  return r ? r->r.probe_probabilities.size() : 0;
}

ogp_status ogp_recovery_probe_probability(const ogp_recovery* r, size_t index,
                                          double* probability) {
  if (!r) return null_argument("recovery");
  if (!probability) return null_argument("probability");
  if (index >= r->r.probe_probabilities.size()) {
    g_last_error = "probe index out of range";
    return OGP_ERR_INVALID_ARGUMENT;
  }
  *probability = r->r.probe_probabilities[index];
  return OGP_OK;
}

size_t ogp_recovery_trace_size(const ogp_recovery* r) {
  return r ? r->r.trace.size() : 0;
}

ogp_status ogp_recovery_trace_get(const ogp_recovery* r, size_t index, long* evaluation,
                                  double* objective) {
  if (!r) return null_argument("recovery");
  if (index >= r->r.trace.size()) {
    g_last_error = "trace index out of range";
    return OGP_ERR_INVALID_ARGUMENT;
  }
  if (evaluation) *evaluation = r->r.trace[index].first;
  if (objective) *objective = r->r.trace[index].second;
  return OGP_OK;
}

/* ---------------- selftest ---------------- */

ogp_status ogp_selftest(unsigned long long seed, double tol_override,
                        ogp_selftest_callback callback, void* user, int* failures) {
  return guarded([&] {
    const ogp::SelftestReport report = ogp::run_selftest(seed, tol_override);
    if (callback)
      for (const auto& s : report.suites)
        callback(s.name.c_str(), s.passed ? 1 : 0, s.worst_error, s.tolerance, user);
    if (failures) *failures = report.failures();
    return OGP_OK;
  });
}

} /* extern "C" */
