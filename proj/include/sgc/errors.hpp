#pragma once

#include <stdexcept>
#include <string>

namespace sgc {

// Base of every error the library throws. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (files, cycle strings, expressions).
class InputError : public Error {
 public:
  using Error::Error;
};

// Precondition on mathematical objects violated (element not in group, etc).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured resource bound was hit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Ingested or pinned data failed verification.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Required upstream artifact missing (table, modular data).
class DependencyError : public Error {
 public:
  using Error::Error;
};

// Should be unreachable; signals an internal inconsistency.
class InternalError : public Error {
 public:
  using Error::Error;
};

// A poset_reduction rule left the poset.
class RuleError : public Error {
 public:
  using Error::Error;
};

}  // namespace sgc
