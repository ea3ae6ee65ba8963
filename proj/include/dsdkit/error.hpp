#pragma once

#include <stdexcept>
#include <string>

namespace dsdkit {

// Every failure mode the library reports. The CLI maps a subset of these
// onto process exit codes; everything else surfaces as a generic error.
enum class errc {
  duplicate_edge,
  self_loop_in_input,
  parse_error,
  degenerate_graph,
  size_limit,
  disconnected,
  isolated_vertex,
  eigensolver_failure,
  connectivity_mismatch,
  invalid_parameter,
  invalid_vertex,
  numerical_singularity,
  invalid_spectrum,
  nonconvergent_walk,
  invalid_weights,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace dsdkit
