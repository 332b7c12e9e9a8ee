#pragma once

#include <stdexcept>
#include <string>

namespace gwilf {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Adding polynomials whose truncation caps disagree.
class CapMismatchError : public Error {
 public:
  explicit CapMismatchError(const std::string& what) : Error(what) {}
};

// A feasibility guard or an explicit state/time budget was exceeded.
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// Argument outside the domain of the requested operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// An exact computation produced a value that violates an integrality
// guarantee (e.g. a factorial-ratio closed form that is not an integer).
// Never rounded; always surfaced.
class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what) : Error(what) {}
};

}  // namespace gwilf
