#include "graphdiv/error.hpp"

namespace graphdiv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::UnknownVertexId: return "UnknownVertexId";
    case ErrorCode::DuplicateVertexId: return "DuplicateVertexId";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::LoopInContractionSet: return "LoopInContractionSet";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorCode::RequiresWeightlessLoopless: return "RequiresWeightlessLoopless";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::DegreeNotZero: return "DegreeNotZero";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::MultiEdgeContraction: return "MultiEdgeContraction";
    case ErrorCode::NotABridge: return "NotABridge";
    case ErrorCode::NotSemistable: return "NotSemistable";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace graphdiv
