#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abel {

/// Failure categories raised by the library. Each maps to a distinct
/// process exit code in the command-line tool.
enum class Errc {
  invalid_argument,
  invalid_mesh,
  domain_error,
  degenerate_node,
  singular_system,
  out_of_range,
  invalid_measurement,
  oracle_failure,
  file_not_found,
  parse_error,
  io_error,
};

[[nodiscard]] std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

}  // namespace abel
