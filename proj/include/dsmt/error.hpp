#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dsmt {

enum class Errc {
  kEmptyFrame,
  kDuplicateName,
  kInvalidIdentifier,
  kIndexOutOfRange,
  kFrameMismatch,
  kFrameTooLarge,
  kInvalidProposition,
  kVacuousModel,
  kMassOnEmptyClass,
  kNegativeMass,
  kMassSumNotOne,
  kEmptySetMass,
  kNotPowerSetSupport,
  kFewerThanTwoSources,
  kFullContradiction,
  kWeightsNotNormalized,
  kProbabilitiesNotNormalized,
  kMissingName,
  kUnknownIdentifier,
  kSyntaxError,
  kEmptyExpression,
  kInvalidScenario,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kEmptyFrame: return "EmptyFrame";
    case Errc::kDuplicateName: return "DuplicateName";
    case Errc::kInvalidIdentifier: return "InvalidIdentifier";
    case Errc::kIndexOutOfRange: return "IndexOutOfRange";
    case Errc::kFrameMismatch: return "FrameMismatch";
    case Errc::kFrameTooLarge: return "FrameTooLarge";
    case Errc::kInvalidProposition: return "InvalidProposition";
    case Errc::kVacuousModel: return "VacuousModel";
    case Errc::kMassOnEmptyClass: return "MassOnEmptyClass";
    case Errc::kNegativeMass: return "NegativeMass";
    case Errc::kMassSumNotOne: return "MassSumNotOne";
    case Errc::kEmptySetMass: return "EmptySetMass";
    case Errc::kNotPowerSetSupport: return "NotPowerSetSupport";
    case Errc::kFewerThanTwoSources: return "FewerThanTwoSources";
    case Errc::kFullContradiction: return "FullContradiction";
    case Errc::kWeightsNotNormalized: return "WeightsNotNormalized";
    case Errc::kProbabilitiesNotNormalized: return "ProbabilitiesNotNormalized";
    case Errc::kMissingName: return "MissingName";
    case Errc::kUnknownIdentifier: return "UnknownIdentifier";
    case Errc::kSyntaxError: return "SyntaxError";
    case Errc::kEmptyExpression: return "EmptyExpression";
    case Errc::kInvalidScenario: return "InvalidScenario";
  }
  return "Unknown";
}

/// Every failure raised by the library. `position` is a byte offset into the
/// parsed text for parser errors and empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        position_(position) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  Errc code_;
  std::optional<std::size_t> position_;
};

}  // namespace dsmt
