#pragma once

#include <stdexcept>
#include <string>

namespace chow {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings.
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

/// A ring presentation violates the rewrite-system invariants.
class RingSpecError : public Error {
 public:
  using Error::Error;
};

/// Bad bundle data or an operation outside a bundle's contract.
class BundleError : public Error {
 public:
  using Error::Error;
};

/// Pullback or pushforward could not be applied.
class MorphismError : public Error {
 public:
  using Error::Error;
};

/// Integer data violates a geometric constraint (parity, ρ ≥ 1, ...).
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// A symbolic derivation produced a nonzero residual.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed search box.
class SearchSpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace chow
