#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace unitfrac {

enum class ErrorKind {
  InvalidArgument,
  PoleAtOne,
  PoleAtNonPositiveInteger,
  PoleEncountered,
  SchemeDomainViolation,
  DegenerateRoot,
  DivergentRegion,
  DegenerateQuadratic,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised when an operation is asked to work outside its mathematical domain.
/// The kind is machine-readable; what() names the violated precondition.
class DomainError : public std::domain_error {
 public:
  DomainError(ErrorKind kind, const std::string& detail,
              std::optional<double> residue = std::nullopt)
      : std::domain_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind),
        residue_(residue) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Residue of the pole, when the error reports a simple pole.
  std::optional<double> residue() const noexcept { return residue_; }

 private:
  ErrorKind kind_;
  std::optional<double> residue_;
};

}  // namespace unitfrac
