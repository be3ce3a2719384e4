#include "squares/error.hpp"

namespace squares {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::SelfLoopOrMultiEdge: return "SelfLoopOrMultiEdge";
    case ErrorKind::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::VertexOnCycle: return "VertexOnCycle";
    case ErrorKind::InvalidCycle: return "InvalidCycle";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::CannotPreserveMaxDegree: return "CannotPreserveMaxDegree";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::DuplicateVertices: return "DuplicateVertices";
    case ErrorKind::DegreeBudgetViolated: return "DegreeBudgetViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::WitnessNotFound: return "WitnessNotFound";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what, int line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      kind_(kind),
      line_(line) {}

void fail(ErrorKind kind, const std::string& what, int line) { throw Error(kind, what, line); }

}  // namespace squares
