#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (non-positive length, bad order, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The sphere touches or penetrates the plate somewhere it is required not to.
class ContactError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace casimir
