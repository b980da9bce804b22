#pragma once

#include <stdexcept>
#include <string>

namespace invhom {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeMismatch : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct CompositionNonzero : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct NotMonotone : Error {
  using Error::Error;
};

struct UnknownName : Error {
  using Error::Error;
};

struct NotBased : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct RingNotRational : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace invhom
