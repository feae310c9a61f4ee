#pragma once

#include <nlohmann/json.hpp>

#include "strictrank/pc_matrix.hpp"
#include "strictrank/ranking.hpp"

namespace strictrank {

/// Orthogonal projection onto consistent additive matrices for the canonical
/// inner product on upper-triangle coordinates:
///   b_ij = (1/n) sum_k (L_ik + L_kj) = mean_i(L) - mean_j(L).
AdditivePCMatrix orthogonal_project(const AdditivePCMatrix& l);

/// exp(orthogonal_project(ln a)).
PCMatrix consistencize(const PCMatrix& a);

struct LocusChangeReport {
  CharacteristicRankingMatrix before_char;
  CharacteristicRankingMatrix after_char;
  bool r_before = false;
  bool r_after = false;
  bool admissible_before = false;
  bool admissible_after = false;
  // Only meaningful when r_before && r_after; false otherwise.
  bool locus_changed = false;
};

LocusChangeReport locus_change_report(const PCMatrix& a, double tie_tol = 0.0);
LocusChangeReport locus_change_report(const PCMatrix& a, const PCMatrix& projected,
                                      double tie_tol = 0.0);

nlohmann::json to_json(const LocusChangeReport& report);

}  // namespace strictrank
