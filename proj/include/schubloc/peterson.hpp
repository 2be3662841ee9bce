#ifndef SCHUBLOC_PETERSON_HPP
#define SCHUBLOC_PETERSON_HPP

#include <span>
#include <vector>

#include "schubloc/schubert.hpp"

namespace schubloc {

// Partition of a weight set into alpha-string classes: gamma ~ gamma' iff
// gamma - gamma' is an integer multiple of alpha.  Members of each class are
// listed top-down along the alpha direction; classes are ordered by their
// top member's index.
std::vector<std::vector<Root>> s_weight_classes(const RootSystem& rs,
                                                const RootSet& weights,
                                                Root alpha);

// The leading-weight run of one class: inside the full alpha-string through
// the class, the members gamma with y^{-1}(gamma) < 0 form a contiguous run
// (NonConsecutiveRun if not); the class must fit inside it (RunTooShort if
// not).  The result is the bottom-most |class| members of that run, listed
// top-down — the unique placement whose next-lower string member is
// unavailable, which is what the curve degeneration selects.
std::vector<Root> m_star(const RootSystem& rs, const WeylElement& y, Root alpha,
                         std::span<const Root> weight_class);

// Limit at x = r_alpha y of the translates of a weight set at y along the
// T-curve with direction alpha: r_alpha applied to the leading-weight runs
// of all classes.  Preserves cardinality (InternalInconsistency if not).
RootSet translate_of_weights(const RootSystem& rs, const RootSet& weights,
                             const WeylElement& y, Root alpha);

// Peterson translate along the curve C = {x, y} of X(w), with upper endpoint
// y and direction alpha in Phi+ such that x = r_alpha y < y <= w.  Computes
// the limit at x of the curve-span weights at y.  When X(w) is smooth at y
// this is the translate of the tangent space T_y(X(w)).
// Errors: NotInInterval (y), InvalidCurve (alpha not positive or not a
// descent direction), plus anything m_star raises.
RootSet peterson_translate(const BruhatInterval& X, const WeylElement& y, Root alpha);

// Compare the translates along two curves with the same lower endpoint.
// Errors: MismatchedBase when r_a1 y1 != r_a2 y2.
bool translates_equal(const BruhatInterval& X, const WeylElement& y1, Root alpha1,
                      const WeylElement& y2, Root alpha2);

// Weights of the subspace the isotropy group at x sweeps out of the curve
// span: saturate curve_weights(X, x) under adding positive roots fixed by
// the isotropy (gamma with x^{-1}(gamma) > 0), keeping weights that stay in
// Phi with x^{-1}(.) < 0.  Always contains curve_weights(X, x).
RootSet bbT_weights(const BruhatInterval& X, const WeylElement& x);

// Correction candidates for a long curve direction mu at x: the weights
// gamma = -(mu + phi)/2 over long positive phi orthogonal to mu with
// -phi a curve weight at x but not at y = r_mu x, such that delta = mu +
// gamma is a root and, when delta < 0, x^{-1}(delta) > 0.  Together with
// bbT_weights this bounds any translate along the curve from above.
// The caller must have established that X(w) is smooth at y and say so via
// the flag (NotSmoothUpperPoint otherwise); CurveNotLong for a short mu in
// a non-simply-laced factor; the empty set for a simply-laced factor.
RootSet v_c_weights(const BruhatInterval& X, const WeylElement& x, Root mu,
                    bool upper_smoothness_established);

}  // namespace schubloc

#endif  // SCHUBLOC_PETERSON_HPP
