#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "strictrank/pc_matrix.hpp"

namespace strictrank::harness {

/// Stateless counter-based generator: each (seed, stream, counter) maps to a
/// fixed 64-bit value through SplitMix64 finalization. Results do not depend
/// on call order, thread, or platform.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  std::uint64_t bits(std::uint64_t counter) const noexcept;
  /// Uniform in [0, 1) with 53 random bits.
  double uniform(std::uint64_t counter) const noexcept;
  /// Uniform in [lo, hi).
  double uniform(std::uint64_t counter, double lo, double hi) const noexcept;
};

/// Upper-triangle logs i.i.d. uniform on [-spread, spread], keyed by (seed, trial).
PCMatrix random_pc_matrix(std::size_t n, double spread, std::uint64_t seed, std::uint64_t trial);

/// Weights-based consistent matrix (log weights uniform on [-weight_spread,
/// weight_spread]) with i.i.d. uniform [-noise, noise] added to each upper log.
PCMatrix random_perturbed_matrix(std::size_t n, double weight_spread, double noise,
                                 std::uint64_t seed, std::uint64_t trial);

/// The three 3x3 matrices illustrating instability of the R-condition under
/// orthogonal projection; upper logs (1,-1,1), (1,3,-1), (1,-9,-4).
std::array<PCMatrix, 3> instability_counterexamples();

struct InstabilityStats {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::uint64_t r_before_count = 0;
  std::uint64_t r_lost_count = 0;
  std::uint64_t locus_changed_count = 0;
  std::uint64_t admissible_before_count = 0;
  std::uint64_t seed = 0;
  double spread = 0.0;

  friend bool operator==(const InstabilityStats&, const InstabilityStats&) = default;
};

/// For n = 3 the counterexamples occupy trials 0..2; the remaining trials use
/// random_pc_matrix(n, spread, seed, trial). workers = 0 picks the hardware
/// concurrency. Tallies are independent of the worker count.
InstabilityStats instability_experiment(std::size_t n, std::uint64_t trials, double spread,
                                        std::uint64_t seed, unsigned workers = 0);

nlohmann::json to_json(const InstabilityStats& stats);

}  // namespace strictrank::harness
