#pragma once

#include <stdexcept>
#include <string>

namespace ogp {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  not_hermitian,
  not_unitary,
  bad_frame,
  degenerate_path,
  missing_sigma,
  singular_t,
  first_pulse_not_off_diagonal,
  state_outside_subspace,
  parse,
  io,
  convergence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace ogp
