#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lambda_cdp {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  enum class Kind { malformed, missing_header, out_of_range, loop, duplicate };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  // 1-based line of the offending input (edge index for JSON input).
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class DisconnectedGraphError : public Error {
 public:
  DisconnectedGraphError() : Error("graph is not connected") {}
};

// Eigensolver non-convergence, residual blow-up or inconsistent clustering.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NotEquitableError : public Error {
 public:
  NotEquitableError() : Error("partition not equitable") {}
};

class NotEigenvalueError : public Error {
 public:
  using Error::Error;
};

// Violated operation precondition: bad vertex index, non-singular input, etc.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class VertexCapError : public Error {
 public:
  VertexCapError(std::size_t n, std::size_t cap)
      : Error("graph has " + std::to_string(n) + " vertices, automorphism search cap is " +
              std::to_string(cap) + " (set LAMBDA_CDP_MAX_N to override)") {}
};

}  // namespace lambda_cdp
