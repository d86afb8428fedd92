#pragma once

#include <stdexcept>
#include <string>

namespace anglespec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHyperbolicError : Error {
  using Error::Error;
};

struct NoCrossingError : Error {
  using Error::Error;
};

struct UnknownPresetError : Error {
  using Error::Error;
};

struct EmptyGeneratorSetError : Error {
  using Error::Error;
};

struct EmptyInputError : Error {
  using Error::Error;
};

struct InternalError : Error {
  using Error::Error;
};

// Group-file ingestion failures. `where` is the 1-based source line for
// MalformedEntry and the 1-based generator index otherwise (0 for Io).
struct ParseError : Error {
  enum class Kind { Io, MalformedEntry, NonUnitDeterminant, IdentityGenerator };

  ParseError(Kind k, int where_, const std::string& what)
      : Error(what), kind(k), where(where_) {}

  Kind kind;
  int where = 0;
};

}  // namespace anglespec
