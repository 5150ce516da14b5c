#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "abel/mesh.hpp"

namespace abel::testing {

/// Nonuniform mesh on [0, radius] with steps drawn from [0.2, 1] and rescaled.
inline Mesh random_mesh(std::mt19937_64& gen, std::size_t n, double radius = 1.0) {
  std::uniform_real_distribution<double> step(0.2, 1.0);
  std::vector<double> nodes(n, 0.0);
  for (std::size_t j = 1; j < n; ++j) nodes[j] = nodes[j - 1] + step(gen);
  const double scale = radius / nodes.back();
  for (auto& v : nodes) v *= scale;
  nodes.back() = radius;
  return custom_mesh(std::move(nodes));
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (const double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace abel::testing
