#pragma once

#include <stdexcept>
#include <string>

namespace lights_out {

/// Base class for every error raised by the library. `code()` is the stable
/// machine-readable name used by the CLI and the HTTP service.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* code() const noexcept = 0;
};

/// Malformed or inconsistent input: bad lengths, out-of-range vertices, loops.
class InputError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "input_error"; }
};

/// An enumeration or payload guard was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "capacity_error"; }
};

/// The operation's mathematical precondition does not hold for this graph.
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "precondition_error"; }
};

/// A search found no witness.
class NoWitnessError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "no_witness"; }
};

/// Something that cannot happen for a correct implementation did.
class InternalError : public Error {
 public:
  using Error::Error;
  const char* code() const noexcept override { return "internal_error"; }
};

}  // namespace lights_out
