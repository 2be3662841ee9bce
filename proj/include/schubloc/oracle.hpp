#ifndef SCHUBLOC_ORACLE_HPP
#define SCHUBLOC_ORACLE_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "schubloc/weyl.hpp"

namespace schubloc::oracle {

// ---------------------------------------------------------------------------
// Everything in this namespace exists to check the engine, not to power it:
// independent brute-force comparators and literature criteria used by the
// test suite and the acceptance harness.  The engine never calls into here.
// ---------------------------------------------------------------------------

// One-line notation: entry k (0-based) is the image of k+1.
struct Permutation {
  std::vector<int> one_line;
  friend bool operator==(const Permutation&, const Permutation&) = default;
};

// Bridge from W(A_n) to S_{n+1}: the element's action permutes the weights
// e_1..e_{n+1}, read off from the images of the simple roots alpha_i =
// e_i - e_{i+1}.  Errors: NotTypeA unless the system is a single A factor.
Permutation to_permutation(const WeylElement& w);

// Order-isomorphic containment of a (short) pattern, by direct enumeration
// of index subsets.
bool contains_pattern(const Permutation& p, std::span<const int> pattern);

// The whole Weyl group, enumerated by breadth-first products of simple
// reflections.  Errors: BudgetExceeded when |W| > budget.
std::vector<WeylElement> full_group(const RootSystem& rs, unsigned long budget = 100000);

// Independent Bruhat-order comparator: the reflexive-transitive closure of
// the cover relation (z = r_gamma y with l(z) = l(y) - 1) over the full
// group.  Deliberately shares no code with the production greedy matcher.
class CoverClosureOrder {
public:
  explicit CoverClosureOrder(const RootSystem& rs, unsigned long budget = 100000);

  bool leq(const WeylElement& x, const WeylElement& w) const;
  const std::vector<WeylElement>& elements() const { return elements_; }

private:
  std::vector<WeylElement> elements_;
  std::unordered_map<WeylElement, int, WeylElement::Hash> index_;
  std::vector<std::vector<bool>> leq_;  // leq_[i][j]: element i <= element j
  int index_of(const WeylElement& x) const;
};

// Exhaustive invariant sweep over every w of a (small) group: the curve
// lower bound |E(X,x)| >= dim X, the Deodhar inequality, up-closedness of
// the smooth locus, translate dimension preservation and hull containment,
// and agreement of the rational-smoothness criteria.  With max_length >= 0
// only tops w with l(w) <= max_length are swept (for the bigger groups).
// Errors: BudgetExceeded.
struct ConsistencyReport {
  struct Family {
    std::string name;
    long checks = 0;
    bool pass = true;
  };

  std::string descriptor;
  long group_order = 0;
  long tops_swept = 0;
  long checks_run = 0;
  bool pass = false;
  std::vector<Family> families;
  std::vector<std::string> failures;  // first offenders, with context
};

ConsistencyReport exhaustive_consistency(const RootSystem& rs,
                                         unsigned long budget = 2000,
                                         int max_length = -1);

// TAP-style rendering ("ok N - ..." / "not ok N - ...") plus a JSON summary.
void print_tap(const ConsistencyReport& report, std::ostream& out);
std::string consistency_json(const ConsistencyReport& report);

}  // namespace schubloc::oracle

#endif  // SCHUBLOC_ORACLE_HPP
