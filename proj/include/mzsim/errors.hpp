#pragma once

#include <stdexcept>
#include <string>

namespace mzsim {

/// Base class for every error raised by the simulator.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mode or path was used without being registered, or registered twice.
class RegistryError : public Error {
 public:
  using Error::Error;
};

/// Normalization of a state whose squared norm is zero.
class ZeroNormError : public Error {
 public:
  using Error::Error;
};

/// A parameter lies outside its legal domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A fringe carries no signal (or is not a fringe at all).
class UndefinedVisibilityError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a report failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mzsim
