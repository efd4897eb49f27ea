#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace knot {

/// Every domain failure the library reports. The CLI prints the name verbatim.
enum class ErrorKind {
  SyntaxError,
  NonPlanarError,
  DanglingEdge,
  OrientationError,
  NonIntegralSignPower,
  NonRepresentableExponent,
  NonIntegralExponent,
  InexactDivision,
  NonAdjacentStars,
  DisconnectedDiagram,
  NoState,
  MoveNotAvailable,
  InvalidSite,
  SiteMismatch,
  NotACurl,
  InvalidPattern,
  SingularOmega,
  TooLarge,
};

constexpr std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::NonPlanarError: return "NonPlanarError";
    case ErrorKind::DanglingEdge: return "DanglingEdge";
    case ErrorKind::OrientationError: return "OrientationError";
    case ErrorKind::NonIntegralSignPower: return "NonIntegralSignPower";
    case ErrorKind::NonRepresentableExponent: return "NonRepresentableExponent";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::NonAdjacentStars: return "NonAdjacentStars";
    case ErrorKind::DisconnectedDiagram: return "DisconnectedDiagram";
    case ErrorKind::NoState: return "NoState";
    case ErrorKind::MoveNotAvailable: return "MoveNotAvailable";
    case ErrorKind::InvalidSite: return "InvalidSite";
    case ErrorKind::SiteMismatch: return "SiteMismatch";
    case ErrorKind::NotACurl: return "NotACurl";
    case ErrorKind::InvalidPattern: return "InvalidPattern";
    case ErrorKind::SingularOmega: return "SingularOmega";
    case ErrorKind::TooLarge: return "TooLarge";
  }
  return "UnknownError";
}

class KnotError : public std::runtime_error {
 public:
  KnotError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

/// Reads KNOT_MAX_CROSSINGS if set, otherwise returns `fallback`.
int enumeration_limit(int fallback);

}  // namespace knot
