#include "abel/mesh.hpp"

#include <cmath>
#include <string>

#include "abel/error.hpp"

namespace abel {

Mesh uniform_mesh(std::size_t n, double radius) {
  if (n < Mesh::min_size) {
    fail(Errc::invalid_argument, "uniform mesh needs at least 3 nodes, got " + std::to_string(n));
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    fail(Errc::invalid_argument, "mesh radius must be positive and finite");
  }
  std::vector<double> nodes(n);
  const auto last = static_cast<double>(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    nodes[j] = static_cast<double>(j) * radius / last;
  }
  nodes.back() = radius;
  return Mesh(std::move(nodes));
}

Mesh custom_mesh(std::vector<double> nodes) {
  if (nodes.size() < Mesh::min_size) {
    fail(Errc::invalid_mesh, "mesh needs at least 3 nodes, got " + std::to_string(nodes.size()));
  }
  if (nodes.front() != 0.0) {
    fail(Errc::invalid_mesh, "first mesh node must be 0");
  }
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    if (!std::isfinite(nodes[j + 1]) || !(nodes[j + 1] > nodes[j])) {
      fail(Errc::invalid_mesh,
           "mesh nodes must be strictly increasing (node " + std::to_string(j + 1) + ")");
    }
  }
  return Mesh(std::move(nodes));
}

}  // namespace abel
