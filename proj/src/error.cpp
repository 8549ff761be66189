#include "radscale/error.hpp"

namespace radscale {

std::string_view toString(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::MissingVertex: return "MissingVertex";
    case ErrorKind::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::ZeroModularity: return "ZeroModularity";
    case ErrorKind::InvalidRho: return "InvalidRho";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::MissingDelimiter: return "MissingDelimiter";
    case ErrorKind::UnknownCategoryId: return "UnknownCategoryId";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::NoMatchingEvents: return "NoMatchingEvents";
    case ErrorKind::NoValidRecords: return "NoValidRecords";
    case ErrorKind::InvalidTimestamp: return "InvalidTimestamp";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace radscale
