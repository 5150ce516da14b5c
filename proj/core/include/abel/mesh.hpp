#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace abel {

/// Shared node grid for the ray coordinate x and the radius r:
/// 0 = x_0 = r_0 < x_1 = r_1 < ... < x_{n-1} = r_{n-1} = R.
///
/// A Mesh can only be obtained through uniform_mesh() or custom_mesh(), both
/// of which validate the invariants, so every instance is well formed.
class Mesh {
 public:
  static constexpr std::size_t min_size = 3;

  [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
  [[nodiscard]] double radius() const noexcept { return nodes_.back(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return nodes_[i]; }
  [[nodiscard]] double step(std::size_t j) const noexcept { return nodes_[j + 1] - nodes_[j]; }
  [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }

  friend Mesh uniform_mesh(std::size_t n, double radius);
  friend Mesh custom_mesh(std::vector<double> nodes);

 private:
  explicit Mesh(std::vector<double> nodes) : nodes_(std::move(nodes)) {}

  std::vector<double> nodes_;
};

/// nodes[j] = j * radius / (n - 1). Throws invalid_argument for n < 3 or radius <= 0.
[[nodiscard]] Mesh uniform_mesh(std::size_t n, double radius);

/// Validates an arbitrary node list. Throws invalid_mesh when the first node
/// is not 0, nodes are not strictly increasing or fewer than 3 are given.
/// Duplicates are rejected, never merged.
[[nodiscard]] Mesh custom_mesh(std::vector<double> nodes);

}  // namespace abel
