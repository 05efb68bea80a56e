#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polywythoff {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (fixtures, element syntax, diagram specs).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Operands of different element kind, degree, dimension or modulus.
class KindMismatch : public Error {
 public:
  using Error::Error;
};

/// Closure produced more elements than the configured cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t cap)
      : Error("CapExceeded: more than " + std::to_string(cap) + " elements"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

class NotSubgroup : public Error {
 public:
  using Error::Error;
};

class NotInvolution : public Error {
 public:
  explicit NotInvolution(std::size_t index)
      : Error("NotInvolution(" + std::to_string(index) + ")"), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class CommutationViolation : public Error {
 public:
  CommutationViolation(std::size_t i, std::size_t j)
      : Error("CommutationViolation(" + std::to_string(i) + "," + std::to_string(j) + ")"),
        i_(i), j_(j) {}
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_, j_;
};

/// A group that was required to satisfy the intersection condition does not.
class NotCGroup : public Error {
 public:
  using Error::Error;
};

class FacetMismatch : public Error {
 public:
  using Error::Error;
};

class NonIntegralSystem : public Error {
 public:
  NonIntegralSystem(std::size_t i, std::size_t j)
      : Error("NonIntegralSystem(" + std::to_string(i) + "," + std::to_string(j) + ")"),
        i_(i), j_(j) {}
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_, j_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace polywythoff
