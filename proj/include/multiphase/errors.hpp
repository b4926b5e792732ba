#pragma once

#include <stdexcept>
#include <string>

namespace multiphase {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A combinatorial size does not fit the machine's indexing range.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The operation is well defined in general but not provided for this input
// (unsupported phase count, complex probe amplitudes, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

}  // namespace multiphase
