#pragma once

#include <stdexcept>
#include <string>

namespace slchar {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PolicyMismatch : Error {
  PolicyMismatch() : Error("series policies differ") {}
};

struct DivisionByVanishingFactor : Error {
  explicit DivisionByVanishingFactor(const std::string& what)
      : Error("division by vanishing factor: " + what) {}
};

struct AmbiguousExpansion : Error {
  explicit AmbiguousExpansion(const std::string& what)
      : Error("no expansion direction for " + what) {}
};

struct WindowRequired : Error {
  explicit WindowRequired(const std::string& what)
      : Error("truncation window required to expand " + what) {}
};

struct OutOfWindow : Error {
  explicit OutOfWindow(const std::string& what)
      : Error("exponent outside truncation window: " + what) {}
};

struct UndefinedOperator : Error {
  explicit UndefinedOperator(const std::string& what)
      : Error("operator not defined: " + what) {}
};

struct StabilizationFailure : Error {
  explicit StabilizationFailure(const std::string& what)
      : Error("iterates failed to stabilize: " + what) {}
};

struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& what)
      : Error("invalid configuration: " + what) {}
};

struct FormulaTranscriptionError : Error {
  explicit FormulaTranscriptionError(const std::string& what)
      : Error("family table inconsistency: " + what) {}
};

struct ShellBoundExceeded : Error {
  explicit ShellBoundExceeded(const std::string& what)
      : Error("shell enumeration cap hit: " + what) {}
};

}  // namespace slchar
