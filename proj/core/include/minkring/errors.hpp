#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minkring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class EmptyPolytope : public Error {
 public:
  using Error::Error;
};

class DegenerateInterval : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class NegativeExponent : public Error {
 public:
  using Error::Error;
};

class UnsupportedWitness : public Error {
 public:
  using Error::Error;
};

class AntichainViolation : public Error {
 public:
  using Error::Error;
};

class InvalidCover : public Error {
 public:
  using Error::Error;
};

class FaceBoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace minkring
