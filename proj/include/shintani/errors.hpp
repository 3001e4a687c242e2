#pragma once

#include <stdexcept>
#include <string>

namespace shintani {

#define SHINTANI_ERROR(Name)                                            \
  struct Name : std::runtime_error {                                    \
    explicit Name(const std::string& msg = #Name) : std::runtime_error(msg) {} \
  }

SHINTANI_ERROR(NotIrreducible);
SHINTANI_ERROR(NotTotallyReal);
SHINTANI_ERROR(LinearlyDependent);
SHINTANI_ERROR(NotSublattice);
SHINTANI_ERROR(NotAnIdeal);
SHINTANI_ERROR(SearchExhausted);
SHINTANI_ERROR(ZeroValue);
SHINTANI_ERROR(ZeroScale);
SHINTANI_ERROR(NotSimple);
SHINTANI_ERROR(InconsistentCharacter);
SHINTANI_ERROR(NoNonzeroPoint);
SHINTANI_ERROR(NoCommonPeriod);
SHINTANI_ERROR(SingularNode);
SHINTANI_ERROR(ReTooSmall);
SHINTANI_ERROR(MixedRegime);
SHINTANI_ERROR(NotRegular);
SHINTANI_ERROR(HigherDegreeNeedsExplicitFan);
SHINTANI_ERROR(PoleHit);
SHINTANI_ERROR(ValidationError);

#undef SHINTANI_ERROR

}  // namespace shintani
