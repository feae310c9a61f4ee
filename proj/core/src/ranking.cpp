#include "strictrank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "strictrank/consistency.hpp"
#include "strictrank/error.hpp"

namespace strictrank {

namespace {

int sign_of_log(double ratio, double tie_tol) {
  const double l = std::log(ratio);
  if (std::abs(l) <= tie_tol) return 0;
  return l > 0.0 ? 1 : -1;
}

}  // namespace

CharacteristicRankingMatrix::CharacteristicRankingMatrix(std::size_t n,
                                                         std::vector<int> upper_signs)
    : n_(n), upper_(std::move(upper_signs)) {
  if (upper_.size() != pair_count(n)) {
    throw Error(ErrorKind::Malformed, "characteristic matrix needs " +
                                          std::to_string(pair_count(n)) + " upper signs");
  }
  for (int s : upper_) {
    if (s < -1 || s > 1) throw Error(ErrorKind::Malformed, "signs must be in {-1, 0, 1}");
  }
}

CharacteristicRankingMatrix CharacteristicRankingMatrix::from_rows(
    const std::vector<std::vector<int>>& rows) {
  const std::size_t n = rows.size();
  std::vector<int> upper;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw Error(ErrorKind::Malformed, "sign matrix must be square", i);
    if (rows[i][i] != 0) throw Error(ErrorKind::BadDiagonal, "sign diagonal must be 0", i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[j][i] != -rows[i][j]) {
        throw Error(ErrorKind::NonReciprocal, "sign matrix must be skew-symmetric", i, j);
      }
      upper.push_back(rows[i][j]);
    }
  }
  return CharacteristicRankingMatrix(n, std::move(upper));
}

int CharacteristicRankingMatrix::operator()(std::size_t i, std::size_t j) const noexcept {
  if (i == j) return 0;
  return i < j ? upper_[pair_index(n_, i, j)] : -upper_[pair_index(n_, j, i)];
}

std::vector<std::vector<int>> CharacteristicRankingMatrix::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

CharacteristicRankingMatrix CharacteristicRankingMatrix::permuted(
    const std::vector<std::size_t>& sigma) const {
  std::vector<int> upper(pair_count(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) upper[pair_index(n_, i, j)] = (*this)(sigma[i], sigma[j]);
  return CharacteristicRankingMatrix(n_, std::move(upper));
}

bool satisfies_r_condition(const PCMatrix& a, double tie_tol) {
  for (double x : a.upper()) {
    if (std::abs(std::log(x)) <= tie_tol) return false;
  }
  return true;
}

CharacteristicRankingMatrix characteristic_matrix(const PCMatrix& a, double tie_tol) {
  std::vector<int> upper;
  for (double x : a.upper()) upper.push_back(sign_of_log(x, tie_tol));
  return CharacteristicRankingMatrix(a.size(), std::move(upper));
}

LocusIndex locus_index(const PCMatrix& a, double tie_tol) {
  LocusIndex out{a.size(), {}};
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int s = sign_of_log(a(i, j), tie_tol);
      if (s == 0) {
        throw Error(ErrorKind::RConditionViolated,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ") is a tie", i, j,
                    a(i, j));
      }
      if (s > 0) out.pairs.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<std::vector<std::size_t>> admissible_permutation(
    const CharacteristicRankingMatrix& c) {
  const std::size_t n = c.size();
  std::vector<std::size_t> score(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int s = c(i, j);
      if (s == 0) {
        throw Error(ErrorKind::ZeroOffDiagonal,
                    "sign (" + std::to_string(i) + "," + std::to_string(j) + ") is 0", i, j);
      }
      ++score[s > 0 ? i : j];
    }
  }
  // Transitive tournament <=> score sequence is a permutation of 0..n-1;
  // position in the ascending order is then the score itself.
  std::vector<std::size_t> sigma(n, n);
  for (std::size_t item = 0; item < n; ++item) {
    if (sigma[score[item]] != n) return std::nullopt;
    sigma[score[item]] = item;
  }
  return sigma;
}

bool is_admissible_locus(const PCMatrix& a, double tie_tol) {
  if (!satisfies_r_condition(a, tie_tol)) return false;
  return admissible_permutation(characteristic_matrix(a, tie_tol)).has_value();
}

std::vector<double> weights_from_consistent(const PCMatrix& a, double tol) {
  const double deviation = max_triad_deviation(a);
  if (deviation > tol) {
    throw Error(ErrorKind::NotConsistent,
                "matrix is not consistent (max triad deviation " + std::to_string(deviation) +
                    ")",
                std::nullopt, std::nullopt, deviation);
  }
  const std::size_t n = a.size();
  std::vector<double> log_mean(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) log_mean[i] += std::log(a(i, j));
    log_mean[i] /= static_cast<double>(n);
  }
  const double lowest = *std::min_element(log_mean.begin(), log_mean.end());
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::exp(log_mean[i] - lowest);
  return w;
}

Ranking ranking_from_matrix(const PCMatrix& a, double tol, double tie_tol) {
  if (!satisfies_r_condition(a, tie_tol)) {
    throw Error(ErrorKind::NotAdmissible, "matrix violates the R-condition (tied comparison)");
  }
  auto sigma = admissible_permutation(characteristic_matrix(a, tie_tol));
  if (!sigma) {
    throw Error(ErrorKind::NotAdmissible,
                "sign pattern of the matrix is not a transitive tournament");
  }
  Ranking out{std::move(*sigma), std::nullopt};
  if (is_consistent(a, tol)) out.weights = weights_from_consistent(a, tol);
  return out;
}

CharacteristicRankingMatrix sign_pattern(std::size_t n, std::uint64_t bits) {
  std::vector<int> upper(pair_count(n));
  for (std::size_t k = 0; k < upper.size(); ++k) upper[k] = ((bits >> k) & 1u) ? 1 : -1;
  return CharacteristicRankingMatrix(n, std::move(upper));
}

LociStats enumerate_loci(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::TooSmall, "enumeration needs n >= 3");
  if (n > 7) {
    throw Error(ErrorKind::TooLarge,
                "enumeration over 2^(n(n-1)/2) patterns is limited to n <= 7, got " +
                    std::to_string(n));
  }
  LociStats stats{n, std::uint64_t{1} << pair_count(n), 0};
  for (std::uint64_t bits = 0; bits < stats.total; ++bits) {
    if (admissible_permutation(sign_pattern(n, bits))) ++stats.admissible;
  }
  return stats;
}

nlohmann::json to_json(const CharacteristicRankingMatrix& c) { return c.rows(); }

nlohmann::json to_json(const LociStats& stats) {
  return {{"n", stats.n}, {"total", stats.total}, {"admissible", stats.admissible}};
}

nlohmann::json ranking_json(const std::optional<Ranking>& ranking,
                            const CharacteristicRankingMatrix& c) {
  nlohmann::json out;
  out["order"] = ranking ? nlohmann::json(ranking->sigma) : nlohmann::json(nullptr);
  out["weights"] = ranking && ranking->weights ? nlohmann::json(*ranking->weights)
                                               : nlohmann::json(nullptr);
  out["admissible"] = ranking.has_value();
  out["characteristic"] = to_json(c);
  return out;
}

}  // namespace strictrank
