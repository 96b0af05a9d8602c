#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace p1 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug, never a math outcome.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A "general" object could not be sampled within the retry cap.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// Bundle-expression syntax error, positioned at a byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Bundle-expression evaluation error (unbound variable, torsion in a functor).
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace p1
