#pragma once

#include <stdexcept>
#include <string>

namespace symramsey {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (empty fold, j out of range, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A fixed-width computation left the representable range.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// Malformed input: bad pattern, bad parameters, bad file contents.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A configured resource bound (memory, brute-force guard) would be exceeded.
class ResourceError : public Error {
  public:
    using Error::Error;
};

} // namespace symramsey
