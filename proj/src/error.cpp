#include "ballq/error.hpp"

namespace ballq {

const char* err_name(Err k) {
  switch (k) {
    case Err::Syntax: return "SyntaxError";
    case Err::UnknownGenerator: return "UnknownGenerator";
    case Err::TrivialRelator: return "TrivialRelator";
    case Err::MissingFixture: return "MissingFixture";
    case Err::BadFile: return "BadFile";
    case Err::Degenerate: return "Degenerate";
    case Err::NonRationalInput: return "NonRationalInput";
    case Err::SameCurve: return "SameCurve";
    case Err::DifferentSurface: return "DifferentSurface";
    case Err::NotStable: return "NotStable";
    case Err::NotFreeAction: return "NotFreeAction";
    case Err::NotAGroup: return "NotAGroup";
    case Err::NonOrdinarySingularity: return "NonOrdinarySingularity";
    case Err::NonIntegralSelfIntersection: return "NonIntegralSelfIntersection";
    case Err::UnblownPoint: return "UnblownPoint";
    case Err::NotDisjoint: return "NotDisjoint";
    case Err::RationalBoundary: return "RationalBoundary";
    case Err::NonIntegralChi: return "NonIntegralChi";
    case Err::DegenerateClass: return "DegenerateClass";
    case Err::BoundExceeded: return "BoundExceeded";
    case Err::RelatorFails: return "RelatorFails";
    case Err::LimitExceeded: return "LimitExceeded";
    case Err::NotFinite: return "NotFinite";
    case Err::NotInTable: return "NotInTable";
    case Err::Internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_input_error(Err k) {
  switch (k) {
    case Err::Syntax:
    case Err::UnknownGenerator:
    case Err::TrivialRelator:
    case Err::MissingFixture:
    case Err::BadFile:
      return true;
    default:
      return false;
  }
}

}  // namespace ballq
