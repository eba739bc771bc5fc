#include "qtoric/error.hpp"

namespace qtoric {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::Overflow: return "Overflow";
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NotUnimodularBasis: return "NotUnimodularBasis";
    case Errc::NotSimple: return "NotSimple";
    case Errc::DuplicateVertex: return "DuplicateVertex";
    case Errc::UnusedFacet: return "UnusedFacet";
    case Errc::Disconnected: return "Disconnected";
    case Errc::TooFewFacets: return "TooFewFacets";
    case Errc::BadIndex: return "BadIndex";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::BadLength: return "BadLength";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotNonsingular: return "NotNonsingular";
    case Errc::CutNotNonsingular: return "CutNotNonsingular";
    case Errc::BadParameters: return "BadParameters";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::IoError: return "IoError";
    case Errc::InternalCheckFailed: return "InternalCheckFailed";
  }
  return "UnknownError";
}

}  // namespace qtoric
