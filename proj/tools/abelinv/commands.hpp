#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "abel/direct_solvers.hpp"
#include "abel/error.hpp"
#include "abel/synthetic.hpp"
#include "abel/tomography.hpp"

namespace abelinv {

enum class Subcommand { Forward, Invert, Regularize, Errors, Smooth, Synthetic, Tomo };

struct RunConfig {
  Subcommand subcommand = Subcommand::Invert;
  std::filesystem::path input;
  std::filesystem::path output;
  std::optional<std::filesystem::path> truth;        ///< synthetic: r,k ground truth
  std::optional<std::filesystem::path> diagnostics;  ///< JSON copy of the key=value report
  std::optional<std::filesystem::path> mesh;         ///< synthetic: custom nodes (column x)

  abel::Method method = abel::Method::First;
  abel::EndpointRule endpoint = abel::EndpointRule::ExtrapolateLinear;
  abel::DerivativeScheme qprime = abel::DerivativeScheme::ForwardDifference;

  std::optional<double> alpha;
  std::optional<double> delta;
  std::optional<double> smooth_p;
  std::optional<std::size_t> resample_n;

  abel::PhantomKind phantom = abel::PhantomKind::Parabolic;
  double k0 = 1.0;
  double radius = 1.0;
  std::size_t n = 11;
  double noise = 0.0;
  std::uint64_t seed = 0;

  double planck_reference = 1.0;
  double source_temperature_c = 894.4;

  bool plot = false;
};

/// Exit status for a library error: 3 + the Errc ordinal, so every category
/// gets its own code. 0 is success, 1 an unexpected failure, 2 a usage error.
[[nodiscard]] int exit_code(abel::Errc code) noexcept;

/// Executes one subcommand. Diagnostics go to `out` as key=value lines and
/// errors to `err` as a single line; returns the process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace abelinv
