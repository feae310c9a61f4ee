#include "strictrank/pc_matrix.hpp"

#include <cmath>
#include <string>

#include "strictrank/error.hpp"

namespace strictrank {

namespace {

void require_size(std::size_t n) {
  if (n < 3) {
    throw Error(ErrorKind::TooSmall,
                "pairwise comparisons need at least 3 items, got " + std::to_string(n));
  }
}

void require_upper_length(std::size_t n, std::size_t len) {
  if (len != pair_count(n)) {
    throw Error(ErrorKind::Malformed, "expected " + std::to_string(pair_count(n)) +
                                          " upper-triangle values for n=" + std::to_string(n) +
                                          ", got " + std::to_string(len));
  }
}

}  // namespace

UpperTriangleVector::UpperTriangleVector(std::size_t n_items, std::vector<double> values)
    : n(n_items), coords(std::move(values)) {
  require_upper_length(n, coords.size());
}

PCMatrix::PCMatrix(std::size_t n, std::span<const double> upper) : n_(n), dense_(n * n, 1.0) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = upper[pair_index(n, i, j)];
      dense_[i * n + j] = a;
      dense_[j * n + i] = 1.0 / a;
    }
  }
}

PCMatrix PCMatrix::from_rows(const std::vector<std::vector<double>>& raw,
                             const RawMatrixOptions& options) {
  const std::size_t n = raw.size();
  require_size(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorKind::Malformed,
                  "row " + std::to_string(i) + " has " + std::to_string(raw[i].size()) +
                      " entries, expected " + std::to_string(n),
                  i);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = raw[i][j];
      if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::NonPositiveEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not a finite positive number",
                    i, j, x);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(raw[i][i] - 1.0) > options.diagonal_tol) {
      throw Error(ErrorKind::BadDiagonal, "diagonal entry " + std::to_string(i) + " is not 1", i,
                  i, raw[i][i]);
    }
  }
  std::vector<double> upper(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double deviation = std::abs(raw[j][i] * raw[i][j] - 1.0);
      if (deviation > options.reciprocity_tol) {
        throw Error(ErrorKind::NonReciprocal,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                        std::to_string(j) + "," + std::to_string(i) +
                        ") are not reciprocal, |a_ji*a_ij - 1| = " + std::to_string(deviation),
                    i, j, deviation);
      }
      upper[pair_index(n, i, j)] = raw[i][j];
    }
  }
  return PCMatrix(n, upper);
}

PCMatrix PCMatrix::from_upper(std::size_t n, std::span<const double> upper) {
  require_size(n);
  require_upper_length(n, upper.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = upper[pair_index(n, i, j)];
      if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::NonPositiveEntry,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) +
                        ") is not a finite positive number",
                    i, j, x);
      }
    }
  }
  return PCMatrix(n, upper);
}

PCMatrix PCMatrix::from_weights(std::span<const double> weights) {
  const std::size_t n = weights.size();
  require_size(n);
  std::vector<double> upper(pair_count(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper[pair_index(n, i, j)] = weights[i] / weights[j];
  }
  return from_upper(n, upper);
}

PCMatrix PCMatrix::ones(std::size_t n) {
  require_size(n);
  std::vector<double> upper(pair_count(n), 1.0);
  return PCMatrix(n, upper);
}

std::vector<double> PCMatrix::upper() const {
  std::vector<double> out;
  out.reserve(pair_count(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) out.push_back((*this)(i, j));
  }
  return out;
}

std::vector<std::vector<double>> PCMatrix::rows() const {
  std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

PCMatrix PCMatrix::permuted(std::span<const std::size_t> sigma) const {
  std::vector<double> upper(pair_count(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      upper[pair_index(n_, i, j)] = (*this)(sigma[i], sigma[j]);
    }
  }
  return PCMatrix(n_, upper);
}

AdditivePCMatrix::AdditivePCMatrix(std::size_t n, std::span<const double> upper)
    : n_(n), dense_(n * n, 0.0) {
  require_size(n);
  require_upper_length(n, upper.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double x = upper[pair_index(n, i, j)];
      dense_[i * n + j] = x;
      dense_[j * n + i] = -x;
    }
  }
}

AdditivePCMatrix::AdditivePCMatrix(const UpperTriangleVector& v)
    : AdditivePCMatrix(v.n, v.coords) {}

std::vector<double> AdditivePCMatrix::upper() const {
  std::vector<double> out;
  out.reserve(pair_count(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) out.push_back((*this)(i, j));
  }
  return out;
}

AdditivePCMatrix to_additive(const PCMatrix& a) {
  std::vector<double> upper = a.upper();
  for (double& x : upper) x = std::log(x);
  return AdditivePCMatrix(a.size(), upper);
}

PCMatrix from_additive(const AdditivePCMatrix& l) {
  std::vector<double> upper = l.upper();
  for (double& x : upper) x = std::exp(x);
  return PCMatrix::from_upper(l.size(), upper);
}

UpperTriangleVector upper_coords(const AdditivePCMatrix& l) {
  return UpperTriangleVector(l.size(), l.upper());
}

AdditivePCMatrix from_upper_coords(const UpperTriangleVector& v) { return AdditivePCMatrix(v); }

UpperTriangleVector log_coords(const PCMatrix& a) { return upper_coords(to_additive(a)); }

PCMatrix from_log_coords(const UpperTriangleVector& v) {
  return from_additive(from_upper_coords(v));
}

}  // namespace strictrank
