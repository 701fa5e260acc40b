#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace econreg {

enum class ErrorKind {
  UnreadableFile,
  MalformedHeader,
  MalformedRow,
  NonNumericCell,
  EmptyAfterDeletion,
  InvalidSeries,
  EmptyIntersection,
  DuplicateName,
  UnknownVariable,
  LengthMismatch,
  TooFewObservations,
  ZeroVariance,
  DomainError,
  RankDeficient,
  ConstantPredictor,
  MissingPredictor,
  DatasetMismatch,
  DegenerateRange,
  InvalidArgument,
  FixtureError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `what()` is "<Kind>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same kind, detail prefixed with `context: `.
  Error with_context(std::string_view context) const;

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace econreg
