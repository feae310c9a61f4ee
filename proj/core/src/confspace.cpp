#include "strictrank/confspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "strictrank/error.hpp"

namespace strictrank::confspace {

namespace {

double squared_distance(std::span<const double> coords, std::size_t dim, std::size_t a,
                        std::size_t b) {
  double s = 0.0;
  for (std::size_t d = 0; d < dim; ++d) {
    const double diff = coords[a * dim + d] - coords[b * dim + d];
    s += diff * diff;
  }
  return s;
}

bool has_collision(std::span<const double> coords, std::size_t k, std::size_t dim) {
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (squared_distance(coords, dim, i, j) == 0.0) return true;
  return false;
}

}  // namespace

Configuration::Configuration(std::size_t k, std::size_t dim, std::vector<double> coords)
    : k_(k), dim_(dim), coords_(std::move(coords)) {
  if (k < 2 || dim < 1 || coords_.size() != k * dim) {
    throw Error(ErrorKind::Malformed, "configuration needs k >= 2 points of dim >= 1, got " +
                                          std::to_string(coords_.size()) + " coordinates");
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (squared_distance(coords_, dim, i, j) == 0.0) {
        throw Error(ErrorKind::CollisionError,
                    "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide", i,
                    j);
      }
    }
  }
}

double Configuration::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k_; ++i)
    for (std::size_t j = i + 1; j < k_; ++j)
      best = std::min(best, std::sqrt(squared_distance(coords_, dim_, i, j)));
  return best;
}

double conformal_factor(std::span<const double> coords, std::size_t k, std::size_t dim) {
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) s += 2.0 / squared_distance(coords, dim, i, j);
  return s * s;
}

double config_metric(const Configuration& u, std::span<const double> v,
                     std::span<const double> w) {
  if (v.size() != u.coords().size() || w.size() != u.coords().size()) {
    throw Error(ErrorKind::Malformed, "tangent vectors must have k * dim components");
  }
  double dot = 0.0;
  for (std::size_t c = 0; c < v.size(); ++c) dot += v[c] * w[c];
  return conformal_factor(u.coords(), u.points(), u.dim()) * dot;
}

double path_length(const SampledPath& path) {
  const auto& s = path.samples;
  const std::size_t k = path.k;
  const std::size_t dim = path.dim;
  const std::size_t width = k * dim;
  if (s.size() < 2) return 0.0;
  for (std::size_t m = 0; m < s.size(); ++m) {
    if (s[m].coords.size() != width) {
      throw Error(ErrorKind::Malformed, "path sample " + std::to_string(m) + " has wrong size");
    }
    if (m > 0 && !(s[m].t > s[m - 1].t)) {
      throw Error(ErrorKind::Malformed, "path sample times must be strictly increasing");
    }
  }
  for (std::size_t m = 0; m + 1 < s.size(); ++m) {
    if (has_collision(s[m].coords, k, dim)) {
      throw Error(ErrorKind::CollisionError,
                  "path sample " + std::to_string(m) + " has coinciding points", m);
    }
  }
  if (has_collision(s.back().coords, k, dim)) return std::numeric_limits<double>::infinity();

  std::vector<double> speed(s.size());
  std::vector<double> velocity(width);
  for (std::size_t m = 0; m < s.size(); ++m) {
    const std::size_t lo = m == 0 ? 0 : m - 1;
    const std::size_t hi = m + 1 == s.size() ? m : m + 1;
    const double dt = s[hi].t - s[lo].t;
    double v2 = 0.0;
    for (std::size_t c = 0; c < width; ++c) {
      velocity[c] = (s[hi].coords[c] - s[lo].coords[c]) / dt;
      v2 += velocity[c] * velocity[c];
    }
    speed[m] = std::sqrt(conformal_factor(s[m].coords, k, dim) * v2);
  }
  double length = 0.0;
  for (std::size_t m = 0; m + 1 < s.size(); ++m) {
    length += 0.5 * (speed[m] + speed[m + 1]) * (s[m + 1].t - s[m].t);
  }
  return length;
}

SampledPath collision_path(double epsilon, std::size_t samples) {
  if (!(epsilon > 0.0 && epsilon < 1.0) || samples < 2) {
    throw Error(ErrorKind::Malformed, "need 0 < epsilon < 1 and at least 2 samples");
  }
  SampledPath path{2, 1, {}};
  path.samples.reserve(samples);
  const double t_end = 1.0 - epsilon;
  for (std::size_t m = 0; m < samples; ++m) {
    const double t = t_end * static_cast<double>(m) / static_cast<double>(samples - 1);
    path.samples.push_back({t, {0.0, 1.0 - t}});
  }
  return path;
}

double collision_path_exact_length(double epsilon) { return 2.0 * (1.0 / epsilon - 1.0); }

std::vector<LengthRow> collision_length_table(std::span<const double> epsilons,
                                              std::size_t samples) {
  std::vector<LengthRow> rows;
  for (double eps : epsilons) {
    rows.push_back({eps, path_length(collision_path(eps, samples)),
                    collision_path_exact_length(eps)});
  }
  return rows;
}

nlohmann::json to_json(const std::vector<LengthRow>& table, std::size_t samples) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table) {
    rows.push_back({{"epsilon", r.epsilon},
                    {"length", r.length},
                    {"exact", r.exact},
                    {"relative_error", std::abs(r.length - r.exact) / r.exact}});
  }
  return {{"samples", samples}, {"rows", rows}};
}

}  // namespace strictrank::confspace
