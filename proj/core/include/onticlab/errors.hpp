// Named error types thrown by the library. Every precondition violation maps to one of
// these so callers (and the CLI's exit-code logic) can tell usage errors apart from
// substantive negative results.
#pragma once

#include <stdexcept>
#include <string>

namespace onticlab {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ONTICLAB_ERROR_TYPE(Name)                                  \
  struct Name : Error {                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

ONTICLAB_ERROR_TYPE(DimensionMismatch);
ONTICLAB_ERROR_TYPE(NotOrthonormalInput);
ONTICLAB_ERROR_TYPE(NotHermitian);
ONTICLAB_ERROR_TYPE(NoConvergence);
ONTICLAB_ERROR_TYPE(InnerProductMismatch);
ONTICLAB_ERROR_TYPE(DegenerateInput);
ONTICLAB_ERROR_TYPE(OutOfRange);
ONTICLAB_ERROR_TYPE(AlphaOutOfRange);
ONTICLAB_ERROR_TYPE(DimensionTooSmall);
ONTICLAB_ERROR_TYPE(InvalidPovm);
ONTICLAB_ERROR_TYPE(ArityMismatch);
ONTICLAB_ERROR_TYPE(CriterionFailed);
ONTICLAB_ERROR_TYPE(IdenticalStates);
ONTICLAB_ERROR_TYPE(UnknownState);
ONTICLAB_ERROR_TYPE(UnknownMeasurement);
ONTICLAB_ERROR_TYPE(UnknownLabel);
ONTICLAB_ERROR_TYPE(TooLarge);
ONTICLAB_ERROR_TYPE(NumericalFailure);
ONTICLAB_ERROR_TYPE(SynthesisFailed);
ONTICLAB_ERROR_TYPE(InvalidInput);

#undef ONTICLAB_ERROR_TYPE

}  // namespace onticlab
