#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radscale {

enum class ErrorKind {
  MalformedLine,
  UnknownVertex,
  MissingVertex,
  DuplicateAssignment,
  IndexOutOfRange,
  EmptyGraph,
  ZeroModularity,
  InvalidRho,
  TooLarge,
  InvalidParameter,
  MissingDelimiter,
  UnknownCategoryId,
  EmptyCorpus,
  EmptyInput,
  SchemaMismatch,
  NoMatchingEvents,
  NoValidRecords,
  InvalidTimestamp,
  Io,
};

std::string_view toString(ErrorKind kind) noexcept;

// Every data-dependent failure in the library is reported through this type.
// Violated internal invariants use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(toString(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Like Error, but also carries the 1-based line number of the offending input.
class LineError : public Error {
 public:
  LineError(ErrorKind kind, std::size_t lineNo, const std::string& detail)
      : Error(kind, "line " + std::to_string(lineNo) + ": " + detail), line_(lineNo) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace radscale
