#pragma once

#include <cstddef>
#include <functional>
#include <ostream>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "strictrank/consistency.hpp"
#include "strictrank/pc_matrix.hpp"

namespace strictrank {

// Phi(A) = prod_{i<j} ii(A) / (l_ij^2 + ii(A)^{n^2/2}) * sum_{i<j} (l_ij^4 + 1),
// l_ij = ln a_ij. Phi >= 0 and Phi = 0 exactly on consistent matrices that
// satisfy the R-condition. It is undefined (0/0) on consistent matrices with a
// tie, which are excluded from the domain.

/// True unless the point is consistent within `consistency_tol` and has an
/// exactly tied comparison.
bool in_phi_domain(const UpperTriangleVector& logs, double consistency_tol = 1e-9);

/// Throws DomainError outside in_phi_domain.
double phi(const PCMatrix& a, IndicatorKind indicator, double consistency_tol = 1e-9);
double phi(const UpperTriangleVector& logs, IndicatorKind indicator,
           double consistency_tol = 1e-9);

/// ln Phi, -infinity where Phi = 0. Throws DomainError outside the domain.
double log_phi(const UpperTriangleVector& logs, IndicatorKind indicator,
               double consistency_tol = 1e-9);

/// Gradient of Phi in upper-triangle log coordinates. Analytic for
/// SmoothLog; central differences (h = 1e-6 max(1, |v|_inf)) for Koczkodaj.
UpperTriangleVector phi_gradient(const UpperTriangleVector& logs, IndicatorKind indicator,
                                 double consistency_tol = 1e-9);

/// Gradient of ln Phi, i.e. grad Phi / Phi. Same direction as phi_gradient,
/// well scaled near the minimum set. Zero vector where Phi = 0.
UpperTriangleVector log_phi_gradient(const UpperTriangleVector& logs, IndicatorKind indicator,
                                     double consistency_tol = 1e-9);

/// Central-difference gradient of f at v with step h.
std::vector<double> central_difference(const std::function<double(const UpperTriangleVector&)>& f,
                                       const UpperTriangleVector& v, double h);

struct PhiConfig {
  IndicatorKind indicator = IndicatorKind::SmoothLog;
  int max_iters = 10000;
  // Stationarity test on |grad ln Phi| = |grad Phi| / Phi.
  double grad_tol = 1e-10;
  double phi_tol = 1e-8;
  // Convergence also requires max triad deviation at or below this.
  double consistency_tol = 1e-9;
  double initial_step = 1.0;
  double backtrack_factor = 0.5;
  double armijo_c = 1e-4;
  double guard_eps = 1e-6;
  // Upper bound on the Euclidean length of one step in log coordinates.
  double max_step = 0.05;
  bool record_iterates = true;
};

/// Throws Error(Malformed) if a field is out of range.
void validate(const PhiConfig& cfg);

enum class Termination {
  PhiBelowTol,
  GradBelowTol,
  MaxIters,
  DomainGuard,
  LineSearchStall,
  Diverged,
};

std::string_view to_string(Termination t) noexcept;

struct PhiIterate {
  UpperTriangleVector upper;  // log coordinates
  double phi_value;
  double grad_norm;  // |grad Phi|
};

struct PhiTrajectory {
  std::vector<PhiIterate> iterates;  // includes the starting point
  PCMatrix final;
  double final_phi = 0.0;
  int iterations = 0;
  bool converged = false;
  Termination termination = Termination::MaxIters;
};

/// Steepest descent on Phi over the upper-triangle logs. The descent
/// direction is -grad Phi, normalized through ln Phi; Armijo backtracking
/// on ln Phi keeps Phi non-increasing.
PhiTrajectory minimize_phi(const PCMatrix& start, const PhiConfig& cfg = {});

nlohmann::json summary_json(const PhiTrajectory& trajectory);

/// One JSON object per line: {"iter", "phi", "grad_norm", "upper"}.
void write_trace(std::ostream& out, const PhiTrajectory& trajectory);

}  // namespace strictrank
