#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace squares {

enum class ErrorKind {
  AsymmetricAdjacency,
  SelfLoopOrMultiEdge,
  NonPlanarEmbedding,
  NotAnEdge,
  VertexOnCycle,
  InvalidCycle,
  PreconditionViolated,
  SyntaxError,
  CannotPreserveMaxDegree,
  NotAClique,
  DuplicateVertices,
  DegreeBudgetViolated,
  BudgetExceeded,
  WitnessNotFound,
  InvalidArgument,
  InvariantViolation,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `line` is set for SyntaxError (1-based).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, int line = 0);

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  int line_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what, int line = 0);

}  // namespace squares
