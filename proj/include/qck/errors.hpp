#pragma once

#include <stdexcept>
#include <string>

namespace qck {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An index outside the index set of a root system.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Vector length does not match the rank of the weight lattice.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (n < 2, zero root, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Quasi-crystals of different root systems were combined.
class TypeError : public Error {
 public:
  using Error::Error;
};

/// A word contains a letter that is not in the base carrier.
class LetterError : public Error {
 public:
  using Error::Error;
};

/// A word or base literal could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configurable resource bound (vertex cap) was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class IOError : public Error {
 public:
  using Error::Error;
};

}  // namespace qck
