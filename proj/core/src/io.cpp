#include "strictrank/io.hpp"

#include <charconv>
#include <iterator>
#include <sstream>
#include <vector>

#include "strictrank/error.hpp"

namespace strictrank::io {

namespace {

double number_at(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number()) throw Error(ErrorKind::ParseError, where + " is not a number");
  return value.get<double>();
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_decimal(std::string_view field, std::size_t row, std::size_t col) {
  field = trim(field);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw Error(ErrorKind::ParseError,
                "csv field (" + std::to_string(row) + "," + std::to_string(col) +
                    ") is not a decimal number: '" + std::string(field) + "'",
                row, col);
  }
  return value;
}

}  // namespace

PCMatrix matrix_from_json(const nlohmann::json& doc, const RawMatrixOptions& options) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "matrix document must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw Error(ErrorKind::ParseError, "matrix document needs an integer \"n\"");
  }
  const auto n_signed = doc["n"].get<long long>();
  if (n_signed < 3) {
    throw Error(ErrorKind::TooSmall,
                "pairwise comparisons need at least 3 items, got " + std::to_string(n_signed));
  }
  const auto n = static_cast<std::size_t>(n_signed);

  if (doc.contains("upper")) {
    const auto& arr = doc["upper"];
    if (!arr.is_array()) throw Error(ErrorKind::ParseError, "\"upper\" must be an array");
    std::vector<double> upper;
    upper.reserve(arr.size());
    for (std::size_t k = 0; k < arr.size(); ++k) {
      upper.push_back(number_at(arr[k], "upper[" + std::to_string(k) + "]"));
    }
    if (upper.size() != pair_count(n)) {
      throw Error(ErrorKind::Malformed, "\"upper\" must hold n(n-1)/2 = " +
                                            std::to_string(pair_count(n)) + " values");
    }
    return PCMatrix::from_upper(n, upper);
  }

  if (doc.contains("entries")) {
    const auto& rows = doc["entries"];
    if (!rows.is_array()) throw Error(ErrorKind::ParseError, "\"entries\" must be an array");
    if (rows.size() != n) {
      throw Error(ErrorKind::Malformed, "\"entries\" has " + std::to_string(rows.size()) +
                                            " rows, expected n = " + std::to_string(n));
    }
    std::vector<std::vector<double>> raw;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!rows[i].is_array()) {
        throw Error(ErrorKind::ParseError, "entries[" + std::to_string(i) + "] must be an array");
      }
      auto& row = raw.emplace_back();
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        row.push_back(number_at(rows[i][j], "entries[" + std::to_string(i) + "][" +
                                                std::to_string(j) + "]"));
      }
    }
    return PCMatrix::from_rows(raw, options);
  }

  throw Error(ErrorKind::ParseError, "matrix document needs \"upper\" or \"entries\"");
}

PCMatrix matrix_from_csv(std::string_view text, const RawMatrixOptions& options) {
  std::vector<std::vector<double>> raw;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty()) continue;

    const std::size_t row = raw.size();
    auto& values = raw.emplace_back();
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const auto field = line.substr(start, comma == std::string_view::npos ? line.npos
                                                                            : comma - start);
      values.push_back(parse_decimal(field, row, values.size()));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return PCMatrix::from_rows(raw, options);
}

PCMatrix read_matrix(std::istream& in, MatrixFormat format, const RawMatrixOptions& options) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (format == MatrixFormat::Csv) return matrix_from_csv(text, options);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(doc, options);
}

nlohmann::json matrix_to_json(const PCMatrix& a) {
  return {{"n", a.size()}, {"upper", a.upper()}, {"entries", a.rows()}};
}

std::string matrix_to_csv(const PCMatrix& a) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out << ',';
      out << a(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace strictrank::io
