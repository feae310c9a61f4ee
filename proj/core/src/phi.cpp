#include "strictrank/phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "strictrank/error.hpp"

namespace strictrank {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double two_norm(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

double min_abs(const std::vector<double>& v) {
  double m = std::numeric_limits<double>::infinity();
  for (double x : v) m = std::min(m, std::abs(x));
  return m;
}

void require_domain(const UpperTriangleVector& logs, double consistency_tol) {
  if (!in_phi_domain(logs, consistency_tol)) {
    throw Error(ErrorKind::DomainError,
                "Phi is undefined on consistent matrices that violate the R-condition");
  }
}

double exponent_for(std::size_t n) { return static_cast<double>(n * n) / 2.0; }

// ln Phi for a point already known to be in the domain.
double log_phi_unchecked(const UpperTriangleVector& logs, IndicatorKind indicator) {
  const double ii = inconsistency(logs, indicator);
  if (ii == 0.0) return kNegInf;
  const double log_ii = std::log(ii);
  const double ii_pow = std::exp(exponent_for(logs.n) * log_ii);
  double sum_quartic = 0.0;
  double log_product = 0.0;
  for (double l : logs.coords) {
    log_product += log_ii - std::log(l * l + ii_pow);
    sum_quartic += l * l * l * l + 1.0;
  }
  return log_product + std::log(sum_quartic);
}

std::vector<double> smooth_log_phi_gradient(const UpperTriangleVector& logs) {
  const std::size_t m = logs.size();
  const double s = squared_residual_sum(logs);
  std::vector<double> g(m, 0.0);
  if (s == 0.0) return g;

  const double e = exponent_for(logs.n);
  const double ii = -std::expm1(-s);
  const double ii_pow = std::exp(e * std::log(ii));
  // grad ln ii = grad S * e^{-S} / ii = grad S / (e^S - 1)
  std::vector<double> grad_log_ii = squared_residual_sum_gradient(logs);
  const double scale = 1.0 / std::expm1(s);
  for (double& x : grad_log_ii) x *= scale;

  double sum_quartic = 0.0;
  double inv_den_sum = 0.0;
  for (double l : logs.coords) {
    sum_quartic += l * l * l * l + 1.0;
    inv_den_sum += 1.0 / (l * l + ii_pow);
  }
  const double ii_coeff = static_cast<double>(m) - e * ii_pow * inv_den_sum;
  for (std::size_t p = 0; p < m; ++p) {
    const double l = logs.coords[p];
    g[p] = ii_coeff * grad_log_ii[p] - 2.0 * l / (l * l + ii_pow) +
           4.0 * l * l * l / sum_quartic;
  }
  return g;
}

}  // namespace

bool in_phi_domain(const UpperTriangleVector& logs, double consistency_tol) {
  if (min_abs(logs.coords) > 0.0) return true;
  return max_triad_deviation(logs) > consistency_tol;
}

double log_phi(const UpperTriangleVector& logs, IndicatorKind indicator,
               double consistency_tol) {
  require_domain(logs, consistency_tol);
  return log_phi_unchecked(logs, indicator);
}

double phi(const UpperTriangleVector& logs, IndicatorKind indicator, double consistency_tol) {
  return std::exp(log_phi(logs, indicator, consistency_tol));
}

double phi(const PCMatrix& a, IndicatorKind indicator, double consistency_tol) {
  return phi(log_coords(a), indicator, consistency_tol);
}

std::vector<double> central_difference(const std::function<double(const UpperTriangleVector&)>& f,
                                       const UpperTriangleVector& v, double h) {
  std::vector<double> g(v.size());
  UpperTriangleVector probe = v;
  for (std::size_t k = 0; k < v.size(); ++k) {
    probe[k] = v[k] + h;
    const double up = f(probe);
    probe[k] = v[k] - h;
    const double down = f(probe);
    probe[k] = v[k];
    g[k] = (up - down) / (2.0 * h);
  }
  return g;
}

UpperTriangleVector log_phi_gradient(const UpperTriangleVector& logs, IndicatorKind indicator,
                                     double consistency_tol) {
  require_domain(logs, consistency_tol);
  if (inconsistency(logs, indicator) == 0.0) {
    return UpperTriangleVector(logs.n, std::vector<double>(logs.size(), 0.0));
  }
  if (indicator == IndicatorKind::SmoothLog) {
    return UpperTriangleVector(logs.n, smooth_log_phi_gradient(logs));
  }
  const double h = 1e-6 * std::max(1.0, inf_norm(logs.coords));
  auto f = [indicator](const UpperTriangleVector& x) { return log_phi_unchecked(x, indicator); };
  return UpperTriangleVector(logs.n, central_difference(f, logs, h));
}

UpperTriangleVector phi_gradient(const UpperTriangleVector& logs, IndicatorKind indicator,
                                 double consistency_tol) {
  require_domain(logs, consistency_tol);
  if (indicator == IndicatorKind::SmoothLog) {
    UpperTriangleVector g = log_phi_gradient(logs, indicator, consistency_tol);
    const double value = std::exp(log_phi_unchecked(logs, indicator));
    for (double& x : g.coords) x *= value;
    return g;
  }
  const double h = 1e-6 * std::max(1.0, inf_norm(logs.coords));
  auto f = [indicator](const UpperTriangleVector& x) {
    return std::exp(log_phi_unchecked(x, indicator));
  };
  return UpperTriangleVector(logs.n, central_difference(f, logs, h));
}

void validate(const PhiConfig& cfg) {
  const bool ok = cfg.max_iters >= 1 && cfg.grad_tol > 0 && cfg.phi_tol > 0 &&
                  cfg.consistency_tol > 0 && cfg.initial_step > 0 && cfg.backtrack_factor > 0 &&
                  cfg.backtrack_factor < 1 && cfg.armijo_c > 0 && cfg.armijo_c < 1 &&
                  cfg.guard_eps > 0 && cfg.max_step > 0;
  if (!ok) throw Error(ErrorKind::Malformed, "invalid minimizer configuration");
}

std::string_view to_string(Termination t) noexcept {
  switch (t) {
    case Termination::PhiBelowTol: return "PhiBelowTol";
    case Termination::GradBelowTol: return "GradBelowTol";
    case Termination::MaxIters: return "MaxIters";
    case Termination::DomainGuard: return "DomainGuard";
    case Termination::LineSearchStall: return "LineSearchStall";
    case Termination::Diverged: return "Diverged";
  }
  return "Unknown";
}

PhiTrajectory minimize_phi(const PCMatrix& start, const PhiConfig& cfg) {
  validate(cfg);
  UpperTriangleVector v = log_coords(start);
  require_domain(v, cfg.consistency_tol);

  // exp() of a log coordinate beyond this overflows a double.
  constexpr double kMaxLog = 700.0;

  std::vector<PhiIterate> iterates;
  Termination reason = Termination::MaxIters;
  double f = log_phi_unchecked(v, cfg.indicator);
  int iter = 0;
  for (;; ++iter) {
    const double value = std::exp(f);
    const double deviation = max_triad_deviation(v);
    const double smallest = min_abs(v.coords);

    UpperTriangleVector g = log_phi_gradient(v, cfg.indicator, cfg.consistency_tol);
    const double g_norm = two_norm(g.coords);
    if (cfg.record_iterates || iter == 0) iterates.push_back({v, value, value * g_norm});

    if (value <= cfg.phi_tol && deviation <= cfg.consistency_tol) {
      reason = smallest > cfg.guard_eps ? Termination::PhiBelowTol : Termination::DomainGuard;
      break;
    }
    if (smallest <= cfg.guard_eps && deviation <= cfg.guard_eps) {
      reason = Termination::DomainGuard;
      break;
    }
    if (g_norm <= cfg.grad_tol) {
      reason = Termination::GradBelowTol;
      break;
    }
    if (iter >= cfg.max_iters) {
      reason = Termination::MaxIters;
      break;
    }

    const double step_scale = std::min(1.0, cfg.max_step / g_norm);
    const double slope = -g_norm * g_norm;
    double alpha = cfg.initial_step;
    bool accepted = false;
    UpperTriangleVector trial = v;
    double f_trial = f;
    while (alpha * step_scale * g_norm > 1e-300) {
      const double t = alpha * step_scale;
      for (std::size_t k = 0; k < v.size(); ++k) trial[k] = v[k] - t * g[k];
      if (in_phi_domain(trial, cfg.consistency_tol)) {
        f_trial = log_phi_unchecked(trial, cfg.indicator);
        if (!std::isnan(f_trial) && f_trial <= f + cfg.armijo_c * t * slope) {
          accepted = true;
          break;
        }
      }
      alpha *= cfg.backtrack_factor;
    }
    if (!accepted) {
      reason = Termination::LineSearchStall;
      break;
    }
    if (inf_norm(trial.coords) > kMaxLog) {
      reason = Termination::Diverged;
      break;
    }
    v = std::move(trial);
    f = f_trial;
  }

  PCMatrix final_matrix = from_log_coords(v);
  PhiTrajectory out{std::move(iterates), std::move(final_matrix), std::exp(f), iter,
                    reason == Termination::PhiBelowTol, reason};
  return out;
}

nlohmann::json summary_json(const PhiTrajectory& trajectory) {
  const double initial_phi =
      trajectory.iterates.empty() ? trajectory.final_phi : trajectory.iterates.front().phi_value;
  return {{"converged", trajectory.converged},
          {"termination", to_string(trajectory.termination)},
          {"iterations", trajectory.iterations},
          {"phi_initial", initial_phi},
          {"phi_final", trajectory.final_phi},
          {"max_triad_deviation", max_triad_deviation(log_coords(trajectory.final))}};
}

void write_trace(std::ostream& out, const PhiTrajectory& trajectory) {
  for (std::size_t k = 0; k < trajectory.iterates.size(); ++k) {
    const auto& it = trajectory.iterates[k];
    nlohmann::json line = {{"iter", k},
                           {"phi", it.phi_value},
                           {"grad_norm", it.grad_norm},
                           {"upper", it.upper.coords}};
    out << line.dump() << '\n';
  }
}

}  // namespace strictrank
