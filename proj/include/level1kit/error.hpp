#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace level1 {

enum class ErrorKind {
  NotAcyclic,
  MultipleRoots,
  DegreeViolation,
  LevelExceeded,
  ShortCycle,
  DuplicateLabel,
  ParallelArc,
  TooFewLeaves,
  NotProper,
  LabelSetMismatch,
  UnknownTaxon,
  TooFewTaxa,
  TooManyTaxa,
  NotSimple,
  DuplicateTaxon,
  BadRepresentative,
  NotAPartition,
  UniverseTooLarge,
  NotFound,
  SyntaxError,
  HybridTagMismatch,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. `kind()` names the violated
/// contract; `what()` carries the offending object (vertex, label, position).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace level1
