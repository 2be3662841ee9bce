#ifndef SCHUBLOC_SINGLOC_HPP
#define SCHUBLOC_SINGLOC_HPP

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "schubloc/peterson.hpp"
#include "schubloc/schubert.hpp"

namespace schubloc {

enum class Verdict : bool { Smooth = true, Singular = false };

std::string_view verdict_name(Verdict v);

struct SinglocOptions {
  // Translate-based verdicts are proved for systems without G2 factors; with
  // this flag the engine runs the same algorithm on G2 anyway and marks the
  // output as unverified.  Off: G2 inputs raise G2Disallowed.
  bool allow_g2_experimental = false;
};

// One Peterson translate computed during a verdict descent: the limit at
// element x_index of the tangent weights at y_index along the T-curve with
// direction `direction`, compared against the curve weights at x_index.
struct TranslateDiagnostic {
  int x_index;
  int y_index;
  Root direction;
  RootSet tau;
  bool equals_curve_weights;
};

// Pointwise smoothness of X(w) at every fixed point of [e, w], decided by
// descending the interval from w: w itself is smooth, a point under a
// singular point is singular, a codimension-one point is smooth, and any
// remaining point is smooth iff the Peterson translate along one (hence
// every) of its upward curves reproduces its curve weights.  The upper
// endpoints involved are already decided smooth when their translates are
// taken, which is what entitles the curve-weight sets to stand in for
// tangent spaces.
struct SmoothnessReport {
  std::shared_ptr<const BruhatInterval> interval;
  std::vector<Verdict> verdicts;        // by interval index
  std::vector<RootSet> curve_weights;   // by interval index
  std::vector<TranslateDiagnostic> diagnostics;
  std::vector<int> max_singular;        // indices of the maximal singular points
  bool g2_unverified = false;

  Verdict verdict_at(const WeylElement& x) const;  // NotInInterval
};

// Errors: G2Disallowed, InternalInconsistency (engine invariant broken).
SmoothnessReport smoothness_report(const WeylElement& w,
                                   const SinglocOptions& opts = {});

// Verdict for a single fixed point x <= w, computed on the up-set
// {y : x <= y <= w} only (no full interval enumeration).
// Errors: MismatchedBase, NotInInterval, G2Disallowed.
Verdict smooth_at(const WeylElement& w, const WeylElement& x,
                  const SinglocOptions& opts = {});

// Maximal singular fixed points of X(w), in interval order (decreasing
// length).  Empty iff X(w) is smooth; the full singular locus is the union
// of the closures under Bruhat order of the returned elements.
std::vector<WeylElement> singular_locus(const WeylElement& w,
                                        const SinglocOptions& opts = {});

// Smoothness of the Schubert variety indexed by w inside G/P for the
// standard parabolic P = P_J (J holds 1-based simple indices), at the fixed
// point indexed by x.  Both w and x must be minimal-length coset
// representatives; the verdict is computed on the fibration preimage, the
// variety of w * w0(J) in the full flag variety.
// Errors: NotMinimalRepresentative, NotInQuotientOrder, IndexOutOfRange,
// MismatchedBase, G2Disallowed.
Verdict gp_smooth_at(std::span<const int> J, const WeylElement& w,
                     const WeylElement& x, const SinglocOptions& opts = {});

}  // namespace schubloc

#endif  // SCHUBLOC_SINGLOC_HPP
