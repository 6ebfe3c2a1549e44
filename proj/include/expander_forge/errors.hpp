#pragma once

#include <stdexcept>
#include <string>

namespace expander_forge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// (chi, n) outside the model: chi < 1, or 3*chi - n negative or odd.
class ParityError : public Error {
 public:
  using Error::Error;
};

/// Input violates an operation's precondition (disconnected graph, wrong
/// degree, empty boundary, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run beyond its configured size guard.
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// A base graph with the requested certified Cheeger bound was not found.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file or numeric literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A numerical invariant that must hold mathematically did not (singular
/// Dirichlet block, vanishing Steklov gap on a connected graph, ...).
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace expander_forge
