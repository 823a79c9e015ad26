#include "propp/error.hpp"

namespace propp {

std::string_view error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotPPower: return "NotPPower";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnreducedWord: return "UnreducedWord";
    case ErrorCode::TrivialWord: return "TrivialWord";
    case ErrorCode::TrivialSubgroup: return "TrivialSubgroup";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonInjectiveAttachment: return "NonInjectiveAttachment";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::NotSpanningTree: return "NotSpanningTree";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::EdgeGroupNotElliptic: return "EdgeGroupNotElliptic";
    case ErrorCode::UnsupportedCosetTest: return "UnsupportedCosetTest";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotInBall: return "NotInBall";
    case ErrorCode::NotFinite: return "NotFinite";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::UnsupportedRelation: return "UnsupportedRelation";
    case ErrorCode::ConjugacyUndecided: return "ConjugacyUndecided";
    case ErrorCode::NotOneEdge: return "NotOneEdge";
    case ErrorCode::TrivialEdgeWord: return "TrivialEdgeWord";
    case ErrorCode::NotStar: return "NotStar";
    case ErrorCode::NonFreeVertex: return "NonFreeVertex";
    case ErrorCode::NoSuchVertex: return "NoSuchVertex";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::NotTree: return "NotTree";
    case ErrorCode::NotOneLoop: return "NotOneLoop";
    case ErrorCode::IncompatiblePresentations: return "IncompatiblePresentations";
    case ErrorCode::InfiniteVertexGroup: return "InfiniteVertexGroup";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotFictitious: return "NotFictitious";
    case ErrorCode::BadExpansion: return "BadExpansion";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace propp
