#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ineqforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed call: dimension mismatch, unknown name, parameter out of range.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation (zero vector where a
/// nonzero one is required, complex space where a real one is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gram-Schmidt met a vector that is (numerically) in the span of its
/// predecessors.
class RankDeficient : public Error {
 public:
  RankDeficient(std::size_t index, const std::string& what)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Two computational routes that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace ineqforge
