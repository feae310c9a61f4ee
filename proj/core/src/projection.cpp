#include "strictrank/projection.hpp"

#include <vector>

namespace strictrank {

AdditivePCMatrix orthogonal_project(const AdditivePCMatrix& l) {
  const std::size_t n = l.size();
  std::vector<double> row_mean(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) row_mean[i] += l(i, k);
    row_mean[i] /= static_cast<double>(n);
  }
  std::vector<double> upper(pair_count(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper[pair_index(n, i, j)] = row_mean[i] - row_mean[j];
  return AdditivePCMatrix(n, upper);
}

PCMatrix consistencize(const PCMatrix& a) {
  return from_additive(orthogonal_project(to_additive(a)));
}

LocusChangeReport locus_change_report(const PCMatrix& a, const PCMatrix& projected,
                                      double tie_tol) {
  LocusChangeReport report{characteristic_matrix(a, tie_tol),
                           characteristic_matrix(projected, tie_tol)};
  report.r_before = satisfies_r_condition(a, tie_tol);
  report.r_after = satisfies_r_condition(projected, tie_tol);
  report.admissible_before = is_admissible_locus(a, tie_tol);
  report.admissible_after = is_admissible_locus(projected, tie_tol);
  report.locus_changed =
      report.r_before && report.r_after && report.before_char != report.after_char;
  return report;
}

LocusChangeReport locus_change_report(const PCMatrix& a, double tie_tol) {
  return locus_change_report(a, consistencize(a), tie_tol);
}

nlohmann::json to_json(const LocusChangeReport& report) {
  return {{"before_char", to_json(report.before_char)},
          {"after_char", to_json(report.after_char)},
          {"r_before", report.r_before},
          {"r_after", report.r_after},
          {"admissible_before", report.admissible_before},
          {"admissible_after", report.admissible_after},
          {"locus_changed", report.locus_changed}};
}

}  // namespace strictrank
