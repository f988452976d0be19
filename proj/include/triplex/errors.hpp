#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triplex {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

// Malformed or inconsistent input data (files, structure constants).
struct ValidationError : Error {
  using Error::Error;
};

struct ParseError : ValidationError {
  ParseError(const std::string& what, std::size_t pos)
      : ValidationError(what + " at position " + std::to_string(pos)),
        position(pos) {}
  std::size_t position;
};

struct PreconditionError : Error {
  using Error::Error;
};

// A product or operation would leave the degree truncation.
struct DegreeBudgetExceeded : Error {
  using Error::Error;
};

struct SizeGuardExceeded : Error {
  using Error::Error;
};

struct PBWCertificateFailure : Error {
  PBWCertificateFailure(const std::string& what, std::size_t deg)
      : Error(what), degree(deg) {}
  std::size_t degree;
};

}  // namespace triplex
