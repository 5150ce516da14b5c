#include "abel/error.hpp"

namespace abel {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_mesh: return "invalid-mesh";
    case Errc::domain_error: return "domain-error";
    case Errc::degenerate_node: return "degenerate-node";
    case Errc::singular_system: return "singular-system";
    case Errc::out_of_range: return "out-of-range";
    case Errc::invalid_measurement: return "invalid-measurement";
    case Errc::oracle_failure: return "oracle-failure";
    case Errc::file_not_found: return "file-not-found";
    case Errc::parse_error: return "parse-error";
    case Errc::io_error: return "io-error";
  }
  return "unknown";
}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace abel
