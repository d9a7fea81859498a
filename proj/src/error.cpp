#include "conncert/error.hpp"

namespace conncert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyOrFull: return "EmptyOrFull";
    case ErrorCode::FullDeletion: return "FullDeletion";
    case ErrorCode::BadChar: return "BadChar";
    case ErrorCode::TruncatedBits: return "TruncatedBits";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::CompleteGraph: return "CompleteGraph";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::PencilDomain: return "PencilDomain";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ConstantVector: return "ConstantVector";
    case ErrorCode::NotACut: return "NotACut";
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::PreconditionDelta: return "PreconditionDelta";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace conncert
