#include "strictrank/harness.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "strictrank/error.hpp"
#include "strictrank/projection.hpp"
#include "strictrank/ranking.hpp"

namespace strictrank::harness {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Tally {
  std::uint64_t r_before = 0;
  std::uint64_t r_lost = 0;
  std::uint64_t locus_changed = 0;
  std::uint64_t admissible_before = 0;

  void add(const LocusChangeReport& report) {
    if (report.admissible_before) ++admissible_before;
    if (!report.r_before) return;
    ++r_before;
    if (!report.r_after) {
      ++r_lost;
    } else if (report.locus_changed) {
      ++locus_changed;
    }
  }
};

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
  const std::uint64_t keyed = mix64(seed + kGolden * (stream + 1));
  return mix64(keyed + kGolden * (counter + 1));
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
  return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

double CounterRng::uniform(std::uint64_t counter, double lo, double hi) const noexcept {
  return lo + (hi - lo) * uniform(counter);
}

PCMatrix random_pc_matrix(std::size_t n, double spread, std::uint64_t seed, std::uint64_t trial) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "random matrices need n >= 3");
  const CounterRng rng{seed, trial};
  std::vector<double> logs(pair_count(n));
  for (std::size_t k = 0; k < logs.size(); ++k) {
    logs[k] = spread == 0.0 ? 0.0 : rng.uniform(k, -spread, spread);
  }
  return from_log_coords(UpperTriangleVector(n, std::move(logs)));
}

PCMatrix random_perturbed_matrix(std::size_t n, double weight_spread, double noise,
                                 std::uint64_t seed, std::uint64_t trial) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "random matrices need n >= 3");
  const CounterRng rng{mix64(seed ^ 0x5EEDFACEULL), trial};
  std::vector<double> log_w(n);
  for (std::size_t i = 0; i < n; ++i) log_w[i] = rng.uniform(i, -weight_spread, weight_spread);
  std::vector<double> logs(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t p = pair_index(n, i, j);
      logs[p] = log_w[i] - log_w[j] + rng.uniform(n + p, -noise, noise);
    }
  }
  return from_log_coords(UpperTriangleVector(n, std::move(logs)));
}

std::array<PCMatrix, 3> instability_counterexamples() {
  auto make = [](std::vector<double> logs) {
    return from_log_coords(UpperTriangleVector(3, std::move(logs)));
  };
  return {make({1.0, -1.0, 1.0}), make({1.0, 3.0, -1.0}), make({1.0, -9.0, -4.0})};
}

InstabilityStats instability_experiment(std::size_t n, std::uint64_t trials, double spread,
                                        std::uint64_t seed, unsigned workers) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "instability experiment needs n >= 3");
  if (trials < 1) throw Error(ErrorKind::Malformed, "instability experiment needs trials >= 1");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

  const auto fixed = instability_counterexamples();
  const std::uint64_t pinned = n == 3 ? std::min<std::uint64_t>(trials, fixed.size()) : 0;

  auto run_trial = [&](std::uint64_t t, Tally& tally) {
    const PCMatrix a = t < pinned ? fixed[t] : random_pc_matrix(n, spread, seed, t);
    tally.add(locus_change_report(a));
  };

  std::vector<Tally> partial(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::uint64_t t = w; t < trials; t += workers) run_trial(t, partial[w]);
      });
    }
  }

  InstabilityStats stats{n, trials, 0, 0, 0, 0, seed, spread};
  for (const auto& p : partial) {
    stats.r_before_count += p.r_before;
    stats.r_lost_count += p.r_lost;
    stats.locus_changed_count += p.locus_changed;
    stats.admissible_before_count += p.admissible_before;
  }
  return stats;
}

nlohmann::json to_json(const InstabilityStats& stats) {
  const double denom = stats.trials ? static_cast<double>(stats.trials) : 1.0;
  return {{"n", stats.n},
          {"trials", stats.trials},
          {"spread", stats.spread},
          {"seed", stats.seed},
          {"r_before_count", stats.r_before_count},
          {"r_lost_count", stats.r_lost_count},
          {"locus_changed_count", stats.locus_changed_count},
          {"admissible_before_count", stats.admissible_before_count},
          {"r_lost_fraction", static_cast<double>(stats.r_lost_count) / denom},
          {"locus_changed_fraction", static_cast<double>(stats.locus_changed_count) / denom}};
}

}  // namespace strictrank::harness
