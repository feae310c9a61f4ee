#pragma once

#include <istream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "strictrank/pc_matrix.hpp"

namespace strictrank::io {

enum class MatrixFormat { Json, Csv };

/// Accepts {"n": int, "upper": [...]} or {"n": int, "entries": [[...], ...]}.
/// When both keys are present "upper" wins.
PCMatrix matrix_from_json(const nlohmann::json& doc, const RawMatrixOptions& options = {});

/// n rows of n comma-separated plain decimals; blank lines are skipped.
PCMatrix matrix_from_csv(std::string_view text, const RawMatrixOptions& options = {});

PCMatrix read_matrix(std::istream& in, MatrixFormat format, const RawMatrixOptions& options = {});

/// {"n", "upper", "entries"}; readable back by matrix_from_json.
nlohmann::json matrix_to_json(const PCMatrix& a);
std::string matrix_to_csv(const PCMatrix& a);

}  // namespace strictrank::io
