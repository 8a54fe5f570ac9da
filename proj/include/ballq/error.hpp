#pragma once

#include <stdexcept>
#include <string>

namespace ballq {

// Failure taxonomy shared by every module. Input kinds map to CLI exit
// code 2, mathematical kinds to exit code 1.
enum class Err {
  // input / parse layer
  Syntax,
  UnknownGenerator,
  TrivialRelator,
  MissingFixture,
  BadFile,
  // exact arithmetic / lattices
  Degenerate,
  NonRationalInput,
  // torus geometry
  SameCurve,
  DifferentSurface,
  NotStable,
  NotFreeAction,
  NotAGroup,
  NonOrdinarySingularity,
  NonIntegralSelfIntersection,
  // ledgers
  UnblownPoint,
  NotDisjoint,
  RationalBoundary,
  NonIntegralChi,
  DegenerateClass,
  // group computations
  BoundExceeded,
  RelatorFails,
  LimitExceeded,
  NotFinite,
  NotInTable,
  // broken internal invariant; always a bug
  Internal,
};

const char* err_name(Err k);

// True for kinds caused by unusable input rather than failed mathematics.
bool is_input_error(Err k);

struct BallqError : std::runtime_error {
  Err kind;
  BallqError(Err k, const std::string& msg)
      : std::runtime_error(std::string(err_name(k)) + ": " + msg), kind(k) {}
};

[[noreturn]] inline void fail(Err k, const std::string& msg) {
  throw BallqError(k, msg);
}

inline void check(bool ok, Err k, const std::string& msg) {
  if (!ok) fail(k, msg);
}

}  // namespace ballq
