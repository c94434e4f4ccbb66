#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordspace {

/// Base of every domain error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownGeneratorError : public Error {
 public:
  using Error::Error;
};

class WrongGroupError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

class BallCapError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class LengthMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidDescriptorError : public Error {
 public:
  using Error::Error;
};

class InfiniteFamilyError : public Error {
 public:
  using Error::Error;
};

class DuplicateElementError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A search ran past its configured bound without deciding anything.
class BoundExhaustedError : public Error {
 public:
  using Error::Error;
};

/// Raised by quotient_order when the subgroup is not convex; carries the
/// words of a triple x <= g <= y with x, y in the subgroup and g outside.
class NonConvexSubgroupError : public Error {
 public:
  NonConvexSubgroupError(std::string lower, std::string middle, std::string upper)
      : Error("subgroup is not convex: " + lower + " <= " + middle + " <= " + upper),
        lower_(std::move(lower)),
        middle_(std::move(middle)),
        upper_(std::move(upper)) {}
  const std::string& lower() const { return lower_; }
  const std::string& middle() const { return middle_; }
  const std::string& upper() const { return upper_; }

 private:
  std::string lower_, middle_, upper_;
};

}  // namespace ordspace
