#pragma once

#include <stdexcept>
#include <string>

namespace latspan {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a value outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The steering backend cannot connect two configurations.
class UnreachableConfiguration : public Error {
 public:
  using Error::Error;
};

/// Higher-order (invariant) states differ where a rigid transform needs them equal.
class InvariantStateMismatch : public Error {
 public:
  using Error::Error;
};

/// A configuration does not coincide with any lattice vertex.
class NotOnLattice : public Error {
 public:
  using Error::Error;
};

/// Lattice construction would exceed the configured vertex limit.
class LatticeTooLarge : public Error {
 public:
  using Error::Error;
};

/// A configuration lies outside the region an operation covers.
class OutOfBounds : public Error {
 public:
  using Error::Error;
};

/// A decoded MILP assignment does not describe per-start arborescences.
class NotArborescence : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent input document.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace latspan
