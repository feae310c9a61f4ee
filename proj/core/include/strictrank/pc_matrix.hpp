#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace strictrank {

/// Number of strict upper-triangle pairs of an n x n matrix.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Position of pair (i, j), i < j, in lexicographic upper-triangle order.
constexpr std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Flat coordinates of the strict upper triangle, pairs (i, j) with i < j in
/// lexicographic order. Used as the optimization chart for additive matrices.
struct UpperTriangleVector {
  std::size_t n = 0;
  std::vector<double> coords;

  UpperTriangleVector() = default;
  UpperTriangleVector(std::size_t n_items, std::vector<double> values);

  std::size_t size() const noexcept { return coords.size(); }
  double operator[](std::size_t k) const noexcept { return coords[k]; }
  double& operator[](std::size_t k) noexcept { return coords[k]; }
  double at(std::size_t i, std::size_t j) const noexcept { return coords[pair_index(n, i, j)]; }

  friend bool operator==(const UpperTriangleVector&, const UpperTriangleVector&) = default;
};

struct RawMatrixOptions {
  double reciprocity_tol = 1e-9;
  double diagonal_tol = 1e-9;
};

/// Multiplicative pairwise-comparisons matrix. The strict upper triangle is
/// authoritative; the diagonal is 1 and a(j, i) is stored as 1 / a(i, j).
class PCMatrix {
 public:
  /// Validates a dense n x n array. Throws Error naming the first offending
  /// location (row-major scan).
  static PCMatrix from_rows(const std::vector<std::vector<double>>& raw,
                            const RawMatrixOptions& options = {});

  /// Builds from the n(n-1)/2 upper-triangle ratios; each must be > 0.
  static PCMatrix from_upper(std::size_t n, std::span<const double> upper);

  /// Consistent matrix a(i, j) = w_i / w_j.
  static PCMatrix from_weights(std::span<const double> weights);

  static PCMatrix ones(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return dense_[i * n_ + j]; }
  std::vector<double> upper() const;
  std::vector<std::vector<double>> rows() const;

  /// Simultaneous row/column relabeling: result(i, j) = a(sigma[i], sigma[j]).
  PCMatrix permuted(std::span<const std::size_t> sigma) const;

  friend bool operator==(const PCMatrix&, const PCMatrix&) = default;

 private:
  PCMatrix(std::size_t n, std::span<const double> upper);

  std::size_t n_ = 0;
  std::vector<double> dense_;
};

/// Log-space view of a PC matrix: skew-symmetric, zero diagonal.
class AdditivePCMatrix {
 public:
  AdditivePCMatrix(std::size_t n, std::span<const double> upper);
  explicit AdditivePCMatrix(const UpperTriangleVector& v);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return dense_[i * n_ + j]; }
  std::vector<double> upper() const;

  friend bool operator==(const AdditivePCMatrix&, const AdditivePCMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> dense_;
};

AdditivePCMatrix to_additive(const PCMatrix& a);
PCMatrix from_additive(const AdditivePCMatrix& l);

UpperTriangleVector upper_coords(const AdditivePCMatrix& l);
AdditivePCMatrix from_upper_coords(const UpperTriangleVector& v);

/// Upper-triangle natural logs of a, i.e. upper_coords(to_additive(a)).
UpperTriangleVector log_coords(const PCMatrix& a);
PCMatrix from_log_coords(const UpperTriangleVector& v);

}  // namespace strictrank
