#include "cvqaoa/error.hpp"

namespace cvqaoa {

const char* to_string(GuardKind kind) {
  switch (kind) {
    case GuardKind::Leakage: return "leakage";
    case GuardKind::Aliasing: return "aliasing";
    case GuardKind::Overflow: return "overflow";
  }
  return "unknown";
}

NumericalGuardError::NumericalGuardError(GuardKind kind, const std::string& what,
                                         std::optional<std::size_t> step)
  : Error(std::string(to_string(kind)) + ": " + what +
          (step ? " (at step " + std::to_string(*step) + ")" : std::string())),
    kind_(kind), step_(step) {}

} // namespace cvqaoa
