#include "strictrank/consistency.hpp"

#include <algorithm>
#include <cmath>

namespace strictrank {

std::string_view to_string(IndicatorKind kind) noexcept {
  return kind == IndicatorKind::Koczkodaj ? "koczkodaj" : "smooth";
}

std::optional<IndicatorKind> parse_indicator(std::string_view name) noexcept {
  if (name == "koczkodaj") return IndicatorKind::Koczkodaj;
  if (name == "smooth") return IndicatorKind::SmoothLog;
  return std::nullopt;
}

std::vector<TriadIndex> triads(std::size_t n) {
  std::vector<TriadIndex> out;
  if (n < 3) return out;
  out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
  return out;
}

Triad triad_of(const PCMatrix& a, const TriadIndex& t) {
  return {t, a(t.i, t.j), a(t.i, t.k), a(t.j, t.k)};
}

double triad_residual(const UpperTriangleVector& logs, const TriadIndex& t) noexcept {
  return logs.at(t.i, t.j) + logs.at(t.j, t.k) - logs.at(t.i, t.k);
}

double max_triad_deviation(const UpperTriangleVector& logs) {
  double worst = 0.0;
  for (const auto& t : triads(logs.n)) worst = std::max(worst, std::abs(triad_residual(logs, t)));
  return worst;
}

double max_triad_deviation(const PCMatrix& a) { return max_triad_deviation(log_coords(a)); }

bool is_consistent(const PCMatrix& a, double tol) { return max_triad_deviation(a) <= tol; }

// With r the log residual, y/(xz) = e^{-r} and xz/y = e^{r}; the smaller of
// |1 - e^{-r}| and |1 - e^{r}| is 1 - e^{-|r|}.
double koczkodaj_index(const UpperTriangleVector& logs) {
  return -std::expm1(-max_triad_deviation(logs));
}

double koczkodaj_index(const PCMatrix& a) { return koczkodaj_index(log_coords(a)); }

double squared_residual_sum(const UpperTriangleVector& logs) {
  double s = 0.0;
  for (const auto& t : triads(logs.n)) {
    const double r = triad_residual(logs, t);
    s += r * r;
  }
  return s;
}

std::vector<double> squared_residual_sum_gradient(const UpperTriangleVector& logs) {
  const std::size_t n = logs.n;
  std::vector<double> g(logs.size(), 0.0);
  for (const auto& t : triads(n)) {
    const double twice_r = 2.0 * triad_residual(logs, t);
    g[pair_index(n, t.i, t.j)] += twice_r;
    g[pair_index(n, t.j, t.k)] += twice_r;
    g[pair_index(n, t.i, t.k)] -= twice_r;
  }
  return g;
}

double smooth_index(const UpperTriangleVector& logs) {
  return -std::expm1(-squared_residual_sum(logs));
}

double smooth_index(const PCMatrix& a) { return smooth_index(log_coords(a)); }

double inconsistency(const UpperTriangleVector& logs, IndicatorKind kind) {
  return kind == IndicatorKind::Koczkodaj ? koczkodaj_index(logs) : smooth_index(logs);
}

double inconsistency(const PCMatrix& a, IndicatorKind kind) {
  return inconsistency(log_coords(a), kind);
}

}  // namespace strictrank
