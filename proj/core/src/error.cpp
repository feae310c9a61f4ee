#include "strictrank/error.hpp"

namespace strictrank {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::Malformed: return "Malformed";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::NonReciprocal: return "NonReciprocal";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::RConditionViolated: return "RConditionViolated";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NotConsistent: return "NotConsistent";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::CollisionError: return "CollisionError";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::optional<std::size_t> row,
             std::optional<std::size_t> col, std::optional<double> value)
    : std::runtime_error(std::move(message)), kind_(kind), row_(row), col_(col), value_(value) {}

}  // namespace strictrank
