#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bsrbd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the text front ends; carries a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SortError : public Error {
 public:
  using Error::Error;
};

// A difference constraint without the four accompanying bounds.
class GuardError : public Error {
 public:
  using Error::Error;
};

// Input (or an intermediate result) falls outside BSR(SLR)/BSR(BD).
class FragmentError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbol : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A Ramsey construction ran out of elements.
class InsufficientInput : public Error {
 public:
  using Error::Error;
};

}  // namespace bsrbd
