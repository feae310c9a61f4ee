#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "strictrank/pc_matrix.hpp"

namespace strictrank {

// Convention used throughout: a(i, j) = w_i / w_j, so a(i, j) > 1 means item i
// outranks item j.

/// Entrywise sign of ln a(i, j), values in {-1, 0, +1}; skew-symmetric.
class CharacteristicRankingMatrix {
 public:
  CharacteristicRankingMatrix(std::size_t n, std::vector<int> upper_signs);
  static CharacteristicRankingMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t size() const noexcept { return n_; }
  int operator()(std::size_t i, std::size_t j) const noexcept;
  const std::vector<int>& upper() const noexcept { return upper_; }
  std::vector<std::vector<int>> rows() const;

  CharacteristicRankingMatrix permuted(const std::vector<std::size_t>& sigma) const;

  friend bool operator==(const CharacteristicRankingMatrix&,
                         const CharacteristicRankingMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<int> upper_;
};

struct LocusIndex {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j), i < j, a(i, j) > 1
  friend bool operator==(const LocusIndex&, const LocusIndex&) = default;
};

/// sigma lists items from lowest to highest rank. weights, when present, are
/// strictly increasing along sigma.
struct Ranking {
  std::vector<std::size_t> sigma;
  std::optional<std::vector<double>> weights;
};

struct LociStats {
  std::size_t n = 0;
  std::uint64_t total = 0;
  std::uint64_t admissible = 0;
};

bool satisfies_r_condition(const PCMatrix& a, double tie_tol = 0.0);

CharacteristicRankingMatrix characteristic_matrix(const PCMatrix& a, double tie_tol = 0.0);

/// Throws RConditionViolated when some off-diagonal entry is a tie.
LocusIndex locus_index(const PCMatrix& a, double tie_tol = 0.0);

/// Sorts items by tournament score (number of items they outrank). A strict
/// ranking exists iff the scores are exactly {0, ..., n-1}. O(n^2).
/// Throws ZeroOffDiagonal if an off-diagonal sign is 0.
std::optional<std::vector<std::size_t>> admissible_permutation(
    const CharacteristicRankingMatrix& c);

bool is_admissible_locus(const PCMatrix& a, double tie_tol = 0.0);

/// Geometric row means normalized to min weight 1. Throws NotConsistent.
std::vector<double> weights_from_consistent(const PCMatrix& a, double tol = 1e-9);

/// Throws NotAdmissible unless a lies in an admissible locus. Weights are
/// attached only for consistent input.
Ranking ranking_from_matrix(const PCMatrix& a, double tol = 1e-9, double tie_tol = 0.0);

/// Classifies all 2^(n(n-1)/2) sign patterns. Throws TooSmall / TooLarge
/// outside 3 <= n <= 7.
LociStats enumerate_loci(std::size_t n);

/// The sign pattern whose upper-triangle bit k (pair order) set means +1.
CharacteristicRankingMatrix sign_pattern(std::size_t n, std::uint64_t bits);

nlohmann::json to_json(const CharacteristicRankingMatrix& c);
nlohmann::json to_json(const LociStats& stats);

/// {"order", "weights", "admissible", "characteristic"}; order is null when
/// the ranking is missing.
nlohmann::json ranking_json(const std::optional<Ranking>& ranking,
                            const CharacteristicRankingMatrix& c);

}  // namespace strictrank
