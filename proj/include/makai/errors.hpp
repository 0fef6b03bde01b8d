#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace makai {

// Base for everything we throw on purpose. code() is stable and
// machine-readable; the CLI maps it into the error JSON on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string_view code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  std::string_view code() const { return code_; }

 private:
  std::string code_;
};

#define MAKAI_DEFINE_ERROR(Name)                               \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  }

MAKAI_DEFINE_ERROR(InputError);            // malformed user input (JSON, flags)
MAKAI_DEFINE_ERROR(DegenerateBody);        // not full-dimensional / too few points
MAKAI_DEFINE_ERROR(Unbounded);             // halfspace intersection is not compact
MAKAI_DEFINE_ERROR(DimensionUnsupported);  // op needs dim in {2,3}
MAKAI_DEFINE_ERROR(LPFailure);             // simplex could not certify optimality
MAKAI_DEFINE_ERROR(OutsideBody);           // query point outside the polytope
MAKAI_DEFINE_ERROR(EmptyErosion);          // erode(t) with t >= inradius
MAKAI_DEFINE_ERROR(MeshBudgetExceeded);    // node cap hit before h target
MAKAI_DEFINE_ERROR(SolverDiverged);        // CG failed to reduce the residual
MAKAI_DEFINE_ERROR(NoRoot);                // bisection bracket invalid
MAKAI_DEFINE_ERROR(NoClosedForm);          // analytic path asked of a family without one
MAKAI_DEFINE_ERROR(CheckFailed);           // verify/certify found a violation
MAKAI_DEFINE_ERROR(InconsistentBounds);    // lower bound exceeds upper bound beyond tolerance

#undef MAKAI_DEFINE_ERROR

}  // namespace makai
