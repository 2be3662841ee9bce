#ifndef SCHUBLOC_SCHUBERT_HPP
#define SCHUBLOC_SCHUBERT_HPP

#include <vector>

#include "schubloc/weyl.hpp"

namespace schubloc {

// Weights of the span of tangent lines at x to the T-stable curves of X(w):
//   { gamma in Phi : x^{-1}(gamma) < 0 and r_gamma x <= w }.
// One curve per reflection r_gamma with r_gamma x <= w; the weight at x of
// the curve {x, r_gamma x} is the member of {+-gamma} that x^{-1} makes
// negative.  At a smooth point these are exactly the tangent-space weights.
// Errors: NotInInterval.
RootSet curve_weights(const BruhatInterval& X, const WeylElement& x);

// |curve_weights|, i.e. the number of T-curves through x inside X(w).
int curve_count(const BruhatInterval& X, const WeylElement& x);

// curve_weights for every element of the interval, indexed like it.
std::vector<RootSet> curve_weight_table(const BruhatInterval& X);

// The Bruhat graph of [e, w]: an edge {x, r_gamma x} for every reflection
// moving one interval element to another, labelled by the positive gamma.
struct BruhatGraph {
  struct Edge {
    int a, b;    // interval indices, a < b
    Root gamma;  // positive root whose reflection swaps the two endpoints
  };
  std::vector<Edge> edges;
};
BruhatGraph bruhat_graph(const BruhatInterval& X);

// Deodhar inequality at x: the number of upward T-curves at x within X(w)
// is at least l(w) - l(x).  Errors: NotInInterval.
bool deodhar_check(const BruhatInterval& X, const WeylElement& x);

// The three computable Carrell-Peterson characterizations of rational
// smoothness of X(w), each evaluated independently and cross-checked:
//  - the Poincare rank table is palindromic,
//  - every x <= w lies on exactly l(w) T-curves,
//  - the average length over [e, w] is exactly l(w)/2.
// Errors: CriteriaDisagree if they do not all agree.
struct RationalSmoothnessEvidence {
  std::vector<long> poincare;
  bool poincare_symmetric = false;
  bool curve_counts_match = false;
  long length_sum = 0;
  long interval_size = 0;
  bool average_matches = false;
  bool verdict = false;
};
RationalSmoothnessEvidence rationally_smooth_variety(const BruhatInterval& X);

// Pointwise rational smoothness at x: every y in [x, w] lies on exactly
// l(w) T-curves.  Errors: NotInInterval.
bool rationally_smooth_at(const BruhatInterval& X, const WeylElement& x);

}  // namespace schubloc

#endif  // SCHUBLOC_SCHUBERT_HPP
