#include "ybk/common/error.hpp"

namespace ybk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::ProductNotZero: return "ProductNotZero";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ImageNotContained: return "ImageNotContained";
    case ErrorKind::NotBiquandle: return "NotBiquandle";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::Incomplete: return "Incomplete";
    case ErrorKind::ResourceBound: return "ResourceBound";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Format: return "Format";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace ybk
