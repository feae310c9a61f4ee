#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "strictrank/pc_matrix.hpp"

namespace strictrank {

struct TriadIndex {
  std::size_t i, j, k;  // i < j < k
  friend bool operator==(const TriadIndex&, const TriadIndex&) = default;
};

/// Values (a_ij, a_ik, a_jk) of one triad.
struct Triad {
  TriadIndex index;
  double x, y, z;
};

enum class IndicatorKind { Koczkodaj, SmoothLog };

std::string_view to_string(IndicatorKind kind) noexcept;
std::optional<IndicatorKind> parse_indicator(std::string_view name) noexcept;

/// All C(n,3) index triples in lexicographic order.
std::vector<TriadIndex> triads(std::size_t n);

Triad triad_of(const PCMatrix& a, const TriadIndex& t);

/// Log residual ln a_ij + ln a_jk - ln a_ik of triad (i, j, k).
double triad_residual(const UpperTriangleVector& logs, const TriadIndex& t) noexcept;

double max_triad_deviation(const PCMatrix& a);
double max_triad_deviation(const UpperTriangleVector& logs);

bool is_consistent(const PCMatrix& a, double tol = 1e-9);

double koczkodaj_index(const PCMatrix& a);
double koczkodaj_index(const UpperTriangleVector& logs);

/// 1 - exp(-sum of squared triad residuals).
double smooth_index(const PCMatrix& a);
double smooth_index(const UpperTriangleVector& logs);

/// Sum of squared triad residuals (the exponent inside smooth_index).
double squared_residual_sum(const UpperTriangleVector& logs);

/// Gradient of squared_residual_sum with respect to the upper-triangle logs.
std::vector<double> squared_residual_sum_gradient(const UpperTriangleVector& logs);

double inconsistency(const PCMatrix& a, IndicatorKind kind);
double inconsistency(const UpperTriangleVector& logs, IndicatorKind kind);

}  // namespace strictrank
