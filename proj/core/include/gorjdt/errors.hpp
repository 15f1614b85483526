#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gorjdt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

#define GORJDT_ERROR(Name)       \
  class Name : public Error {    \
   public:                       \
    using Error::Error;          \
  };

GORJDT_ERROR(FieldMismatch)
GORJDT_ERROR(InvalidField)
GORJDT_ERROR(DegreeMismatch)
GORJDT_ERROR(SideMismatch)
GORJDT_ERROR(DegreeOutOfRange)
GORJDT_ERROR(UnsupportedCoefficient)
GORJDT_ERROR(ZeroPolynomial)
GORJDT_ERROR(ZeroLinearForm)
GORJDT_ERROR(NonHomogeneous)
GORJDT_ERROR(NotArtinian)
GORJDT_ERROR(NegativeEntry)
GORJDT_ERROR(BasisVerificationFailed)
GORJDT_ERROR(UnclassifiablePart)
GORJDT_ERROR(InvalidSpec)
GORJDT_ERROR(OutOfRange)
GORJDT_ERROR(UnsupportedPair)
GORJDT_ERROR(UnknownTable)

#undef GORJDT_ERROR

class VerificationFailed : public Error {
 public:
  VerificationFailed(const std::string& what, std::string computed, std::string expected)
      : Error(what), computed_(std::move(computed)), expected_(std::move(expected)) {}
  const std::string& computed() const { return computed_; }
  const std::string& expected() const { return expected_; }

 private:
  std::string computed_;
  std::string expected_;
};

}  // namespace gorjdt
