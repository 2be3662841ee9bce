#include "schubloc/schubert.hpp"

#include <algorithm>

namespace schubloc {

namespace {

// Weights at interval position xi, reusing the inverse permutation.
RootSet curve_weights_at(const BruhatInterval& X, int xi) {
  const RootSystem& rs = X.system();
  const WeylElement& x = X.element(xi);
  WeylElement x_inv = x.inverse();
  int npos = rs.positive_count();
  int n = rs.root_count();
  RootSet out = rs.empty_set();
  std::vector<int32_t> zperm(n);
  for (int p = 0; p < npos; ++p) {
    std::span<const int32_t> t = rs.reflection_table(p);
    for (int g = 0; g < n; ++g) zperm[g] = t[x.perm()[g]];  // r_gamma x
    if (X.index_of_perm(zperm) < 0) continue;
    bool inv_negative = x_inv.perm()[p] >= npos;  // x^{-1}(gamma) < 0?
    out.insert(inv_negative ? Root(p) : Root(p + npos));
  }
  return out;
}

int interval_index(const BruhatInterval& X, const WeylElement& x) {
  int xi = X.index_of(x);
  if (xi < 0) throw NotInInterval("element is not below the interval top");
  return xi;
}

}  // namespace

RootSet curve_weights(const BruhatInterval& X, const WeylElement& x) {
  return curve_weights_at(X, interval_index(X, x));
}

int curve_count(const BruhatInterval& X, const WeylElement& x) {
  return curve_weights(X, x).size();
}

std::vector<RootSet> curve_weight_table(const BruhatInterval& X) {
  std::vector<RootSet> out;
  out.reserve(X.size());
  for (int k = 0; k < X.size(); ++k) out.push_back(curve_weights_at(X, k));
  return out;
}

BruhatGraph bruhat_graph(const BruhatInterval& X) {
  const RootSystem& rs = X.system();
  int npos = rs.positive_count();
  int n = rs.root_count();
  BruhatGraph graph;
  std::vector<int32_t> zperm(n);
  for (int k = 0; k < X.size(); ++k) {
    const WeylElement& x = X.element(k);
    for (int p = 0; p < npos; ++p) {
      std::span<const int32_t> t = rs.reflection_table(p);
      for (int g = 0; g < n; ++g) zperm[g] = t[x.perm()[g]];
      int j = X.index_of_perm(zperm);
      if (j > k) graph.edges.push_back({k, j, Root(p)});  // each edge once
    }
  }
  return graph;
}

bool deodhar_check(const BruhatInterval& X, const WeylElement& x) {
  int xi = interval_index(X, x);
  const RootSystem& rs = X.system();
  WeylElement x_inv = x.inverse();
  int npos = rs.positive_count();
  int n = rs.root_count();
  int upward = 0;
  std::vector<int32_t> zperm(n);
  for (int p = 0; p < npos; ++p) {
    if (x_inv.perm()[p] >= npos) continue;  // x^{-1}(gamma) < 0: downward
    std::span<const int32_t> t = rs.reflection_table(p);
    for (int g = 0; g < n; ++g) zperm[g] = t[x.perm()[g]];
    if (X.index_of_perm(zperm) >= 0) ++upward;
  }
  return upward >= X.top().length() - X.element(xi).length();
}

RationalSmoothnessEvidence rationally_smooth_variety(const BruhatInterval& X) {
  RationalSmoothnessEvidence ev;
  ev.poincare = X.rank_table();

  ev.poincare_symmetric = true;
  for (size_t i = 0, j = ev.poincare.size(); i < j; ++i, --j)
    if (ev.poincare[i] != ev.poincare[j - 1]) ev.poincare_symmetric = false;

  int target = X.top().length();
  ev.curve_counts_match = true;
  for (int k = 0; k < X.size(); ++k)
    if (curve_weights_at(X, k).size() != target) {
      ev.curve_counts_match = false;
      break;
    }

  ev.interval_size = X.size();
  for (int k = 0; k < X.size(); ++k) ev.length_sum += X.element(k).length();
  ev.average_matches = (2 * ev.length_sum == static_cast<long>(target) * ev.interval_size);

  if (ev.poincare_symmetric != ev.curve_counts_match ||
      ev.poincare_symmetric != ev.average_matches)
    throw CriteriaDisagree("rational-smoothness criteria disagree on " +
                           X.system().descriptor());
  ev.verdict = ev.poincare_symmetric;
  return ev;
}

bool rationally_smooth_at(const BruhatInterval& X, const WeylElement& x) {
  int xi = interval_index(X, x);
  int target = X.top().length();

  // Walk the upper set [x, w] through the cover relation.
  std::vector<bool> seen(X.size(), false);
  std::vector<int> stack = {xi};
  seen[xi] = true;
  while (!stack.empty()) {
    int k = stack.back();
    stack.pop_back();
    if (curve_weights_at(X, k).size() != target) return false;
    for (int up : X.covers_above(k))
      if (!seen[up]) {
        seen[up] = true;
        stack.push_back(up);
      }
  }
  return true;
}

}  // namespace schubloc
