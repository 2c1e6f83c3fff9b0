#pragma once

#include <stdexcept>
#include <string>

namespace dmod {

// Root of every error the library reports. The CLI maps these to exit
// status 1 (input errors) unless noted otherwise.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// Two forms of an arrangement are proportional.
class DuplicateLine : public Error {
 public:
  DuplicateLine(std::size_t first, std::size_t second)
      : Error("forms " + std::to_string(first + 1) + " and " +
              std::to_string(second + 1) + " define the same line"),
        first_(first),
        second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t forms, std::size_t exponents)
      : Error("arrangement has " + std::to_string(forms) + " forms but " +
              std::to_string(exponents) + " exponents") {}
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace dmod
