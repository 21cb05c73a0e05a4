#pragma once

#include <stdexcept>
#include <string>

namespace fanocheck {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define FANOCHECK_DEFINE_ERROR(Name)                                           \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

// exactfield
FANOCHECK_DEFINE_ERROR(DivisionByZero);
FANOCHECK_DEFINE_ERROR(FieldMismatch);
FANOCHECK_DEFINE_ERROR(ReduciblePolynomial);
FANOCHECK_DEFINE_ERROR(UnsupportedField);

// multipoly
FANOCHECK_DEFINE_ERROR(RingMismatch);
FANOCHECK_DEFINE_ERROR(ChartMismatch);
FANOCHECK_DEFINE_ERROR(DegenerateLine);

// groups
FANOCHECK_DEFINE_ERROR(OrderBoundExceeded);
FANOCHECK_DEFINE_ERROR(UnboundLetter);
FANOCHECK_DEFINE_ERROR(ConstructionFailed);

// lattice
FANOCHECK_DEFINE_ERROR(InvalidPartition);
FANOCHECK_DEFINE_ERROR(ActionNotGramPreserving);

// burkhardt
FANOCHECK_DEFINE_ERROR(NotCTwo);
FANOCHECK_DEFINE_ERROR(IdenticalPlanes);
FANOCHECK_DEFINE_ERROR(RuleMismatch);

// barth
FANOCHECK_DEFINE_ERROR(NotInvariant);
FANOCHECK_DEFINE_ERROR(RestrictionMismatch);
FANOCHECK_DEFINE_ERROR(FamilyCheckFailed);
FANOCHECK_DEFINE_ERROR(SurfaceNotOnSolid);
FANOCHECK_DEFINE_ERROR(Table1Mismatch);
FANOCHECK_DEFINE_ERROR(Table2Mismatch);
FANOCHECK_DEFINE_ERROR(IdentityFailed);

#undef FANOCHECK_DEFINE_ERROR

} // namespace fanocheck
