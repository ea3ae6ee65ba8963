#include "dsdkit/error.hpp"

namespace dsdkit {

const char* errc_name(errc code) {
  switch (code) {
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::self_loop_in_input: return "SelfLoopInInput";
    case errc::parse_error: return "ParseError";
    case errc::degenerate_graph: return "DegenerateGraph";
    case errc::size_limit: return "SizeLimit";
    case errc::disconnected: return "Disconnected";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::eigensolver_failure: return "EigensolverFailure";
    case errc::connectivity_mismatch: return "ConnectivityMismatch";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::invalid_vertex: return "InvalidVertex";
    case errc::numerical_singularity: return "NumericalSingularity";
    case errc::invalid_spectrum: return "InvalidSpectrum";
    case errc::nonconvergent_walk: return "NonconvergentWalk";
    case errc::invalid_weights: return "InvalidWeights";
  }
  return "UnknownError";
}

}  // namespace dsdkit
