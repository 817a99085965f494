#pragma once

#include <stdexcept>
#include <string>

namespace pspread {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class CtxMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionZero : public Error {
 public:
  using Error::Error;
};

class TooFewMembers : public Error {
 public:
  using Error::Error;
};

class CandidateCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

// Spread/partition input that fails validation when a valid object is
// required (e.g. building a partition from a broken spread).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Malformed spread file.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line) : Error(msg), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace pspread
