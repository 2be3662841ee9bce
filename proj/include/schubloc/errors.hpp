#ifndef SCHUBLOC_ERRORS_HPP
#define SCHUBLOC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace schubloc {

// Base class for all recoverable domain errors.  Each carries a stable
// machine-readable name (what the CLI prints on stderr before exiting
// with status 3) in addition to the human-readable what() message.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string name, const std::string& what_arg)
      : std::runtime_error(what_arg), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define SCHUBLOC_DEFINE_ERROR(E)                                            \
  class E : public DomainError {                                            \
  public:                                                                   \
    explicit E(const std::string& what_arg) : DomainError(#E, what_arg) {}  \
  }

// Construction / lookup.
SCHUBLOC_DEFINE_ERROR(InvalidRank);        // rank outside the valid range for a series
SCHUBLOC_DEFINE_ERROR(G2Disallowed);       // G2 factor without the experimental opt-in
SCHUBLOC_DEFINE_ERROR(IndexOutOfRange);    // simple-root index outside 1..rank
SCHUBLOC_DEFINE_ERROR(NotInInterval);      // element is not <= the interval top

// Root strings and translate machinery.
SCHUBLOC_DEFINE_ERROR(RunTooShort);        // weight class larger than its available run
SCHUBLOC_DEFINE_ERROR(NonConsecutiveRun);  // available run not contiguous / not unique
SCHUBLOC_DEFINE_ERROR(MismatchedBase);     // comparing translates at different base points
SCHUBLOC_DEFINE_ERROR(InvalidCurve);       // (y, direction) pair is not an upward curve
SCHUBLOC_DEFINE_ERROR(CurveNotLong);       // correction-term query for a short direction
SCHUBLOC_DEFINE_ERROR(NotSmoothUpperPoint);// caller has not established smoothness at y

// Verdicts and cross-checks.
SCHUBLOC_DEFINE_ERROR(CriteriaDisagree);       // rational-smoothness tests disagree
SCHUBLOC_DEFINE_ERROR(InternalInconsistency);  // a theorem-backed invariant failed

// Quotients and the test-layer bridge.
SCHUBLOC_DEFINE_ERROR(NotMinimalRepresentative);  // element not minimal in its coset
SCHUBLOC_DEFINE_ERROR(NotInQuotientOrder);        // x W_J is not below w W_J
SCHUBLOC_DEFINE_ERROR(NotTypeA);                  // permutation bridge outside type A
SCHUBLOC_DEFINE_ERROR(BudgetExceeded);            // exhaustive sweep over too large a group

#undef SCHUBLOC_DEFINE_ERROR

}  // namespace schubloc

#endif  // SCHUBLOC_ERRORS_HPP
