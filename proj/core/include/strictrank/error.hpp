#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace strictrank {

enum class ErrorKind {
  TooSmall,
  Malformed,
  NonPositiveEntry,
  NonReciprocal,
  BadDiagonal,
  RConditionViolated,
  ZeroOffDiagonal,
  NotAdmissible,
  NotConsistent,
  TooLarge,
  DomainError,
  CollisionError,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this type. Location fields are
// filled when the failure can be pinned to a matrix entry or a point index.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message,
        std::optional<std::size_t> row = std::nullopt,
        std::optional<std::size_t> col = std::nullopt,
        std::optional<double> value = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> col() const noexcept { return col_; }
  std::optional<double> value() const noexcept { return value_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
  std::optional<double> value_;
};

}  // namespace strictrank
