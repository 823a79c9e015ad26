#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace propp {

/// Error kinds raised by the library. Each maps to a stable name used in
/// JSON output and by the CLI (exit code 3).
enum class ErrorCode {
  NotAssociative,
  NotPPower,
  BadIdentity,
  NotASubgroup,
  NotHomomorphism,
  TooLarge,
  UnreducedWord,
  TrivialWord,
  TrivialSubgroup,
  UnknownSymbol,
  Disconnected,
  NonInjectiveAttachment,
  PrimeMismatch,
  NotSpanningTree,
  NotConnected,
  EdgeGroupNotElliptic,
  UnsupportedCosetTest,
  BudgetExceeded,
  NotInBall,
  NotFinite,
  NotAdmissible,
  UnsupportedRelation,
  ConjugacyUndecided,
  NotOneEdge,
  TrivialEdgeWord,
  NotStar,
  NonFreeVertex,
  NoSuchVertex,
  NoSuchEdge,
  NotTree,
  NotOneLoop,
  IncompatiblePresentations,
  InfiniteVertexGroup,
  NotReduced,
  NotFictitious,
  BadExpansion,
  Schema,
  InvalidArgument,
};

std::string_view error_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) {
  throw Error(c, msg);
}

}  // namespace propp
