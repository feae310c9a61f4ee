#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace strictrank::confspace {

/// k points of R^dim, stored point-major. Points must be pairwise distinct.
class Configuration {
 public:
  /// Throws CollisionError if two points coincide, Malformed on bad shape.
  Configuration(std::size_t k, std::size_t dim, std::vector<double> coords);

  std::size_t points() const noexcept { return k_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> point(std::size_t i) const noexcept {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

  double min_pairwise_distance() const;

 private:
  std::size_t k_;
  std::size_t dim_;
  std::vector<double> coords_;
};

/// Tangent vector at a configuration, same layout as Configuration::coords.
using Tangent = std::vector<double>;

/// (sum over ordered pairs i != j of 1/|u_i - u_j|^2)^2 * sum_l <v_l, w_l>.
double config_metric(const Configuration& u, std::span<const double> v,
                     std::span<const double> w);

/// Conformal factor (sum_{i != j} 1/|u_i - u_j|^2)^2 alone.
double conformal_factor(std::span<const double> coords, std::size_t k, std::size_t dim);

struct PathSample {
  double t;
  std::vector<double> coords;  // k * dim
};

/// Samples with strictly increasing t. Interior samples must be collision
/// free; the last sample may be a collision.
struct SampledPath {
  std::size_t k = 0;
  std::size_t dim = 0;
  std::vector<PathSample> samples;
};

/// Trapezoidal quadrature of sqrt(g(gamma', gamma')) with central-difference
/// velocities (one-sided at the ends). Throws CollisionError at an interior
/// collision; returns +infinity if only the final endpoint collides.
double path_length(const SampledPath& path);

/// Two points in R^1 moving from (0, 1) towards (0, 0) along (0, 1 - t),
/// sampled uniformly on [0, 1 - epsilon] with `samples` points.
SampledPath collision_path(double epsilon, std::size_t samples);

/// Closed-form length of collision_path on [0, 1 - epsilon]:
/// integral of 2 / (1 - t)^2 = 2 (1/epsilon - 1).
double collision_path_exact_length(double epsilon);

struct LengthRow {
  double epsilon;
  double length;
  double exact;
};

std::vector<LengthRow> collision_length_table(std::span<const double> epsilons,
                                              std::size_t samples);

nlohmann::json to_json(const std::vector<LengthRow>& table, std::size_t samples);

}  // namespace strictrank::confspace
