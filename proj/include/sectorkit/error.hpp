#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sectorkit {

enum class ErrorKind {
  InvalidPermutation,
  OrderCapExceeded,
  RepresentativeInconsistency,
  DegenerateSpectrum,
  NonUnitaryS,
  NonIntegralFusion,
  DimensionSumMismatch,
  DimensionIdentityFailure,
  SizeCap,
  NonProjector,
  NotAFactor,
  InvalidInclusion,
  ShapeMismatch,
  StrandMismatch,
  IndexOutOfRange,
  SingularVacuumRow,
  DegenerateData,
  InterpolationOutOfRange,
  MissingAnalyticSource,
  SupportViolation,
  FockCapExceeded,
  PoleInStrip,
  SupportOutsideWindow,
  WindowMismatch,
  InvalidInput,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::RepresentativeInconsistency: return "RepresentativeInconsistency";
    case ErrorKind::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorKind::NonUnitaryS: return "NonUnitaryS";
    case ErrorKind::NonIntegralFusion: return "NonIntegralFusion";
    case ErrorKind::DimensionSumMismatch: return "DimensionSumMismatch";
    case ErrorKind::DimensionIdentityFailure: return "DimensionIdentityFailure";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::NonProjector: return "NonProjector";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::InvalidInclusion: return "InvalidInclusion";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::StrandMismatch: return "StrandMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SingularVacuumRow: return "SingularVacuumRow";
    case ErrorKind::DegenerateData: return "DegenerateData";
    case ErrorKind::InterpolationOutOfRange: return "InterpolationOutOfRange";
    case ErrorKind::MissingAnalyticSource: return "MissingAnalyticSource";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::FockCapExceeded: return "FockCapExceeded";
    case ErrorKind::PoleInStrip: return "PoleInStrip";
    case ErrorKind::SupportOutsideWindow: return "SupportOutsideWindow";
    case ErrorKind::WindowMismatch: return "WindowMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the ErrorKind tags.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sectorkit
