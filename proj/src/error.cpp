#include "econreg/error.hpp"

namespace econreg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnreadableFile: return "UnreadableFile";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::NonNumericCell: return "NonNumericCell";
    case ErrorKind::EmptyAfterDeletion: return "EmptyAfterDeletion";
    case ErrorKind::InvalidSeries: return "InvalidSeries";
    case ErrorKind::EmptyIntersection: return "EmptyIntersection";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::TooFewObservations: return "TooFewObservations";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ConstantPredictor: return "ConstantPredictor";
    case ErrorKind::MissingPredictor: return "MissingPredictor";
    case ErrorKind::DatasetMismatch: return "DatasetMismatch";
    case ErrorKind::DegenerateRange: return "DegenerateRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::FixtureError: return "FixtureError";
  }
  return "Error";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

Error Error::with_context(std::string_view context) const {
  return Error(kind_, std::string(context) + ": " + detail_);
}

}  // namespace econreg
