#include "schubloc/peterson.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "schubloc/errors.hpp"

namespace schubloc {

std::vector<std::vector<Root>> s_weight_classes(const RootSystem& rs,
                                                const RootSet& weights,
                                                Root alpha) {
  const std::vector<int>& a = rs.coords(alpha);
  int rank = rs.rank();
  int j0 = 0;
  while (j0 < rank && a[j0] == 0) ++j0;

  // gamma and gamma' lie on the same line gamma + Z alpha iff the cross
  // products of their coordinates with alpha's agree.  The extra slot keeps
  // +alpha and -alpha apart: both have all cross products zero, but they sit
  // on degenerate one-member strings of their own.
  std::map<std::vector<long>, std::vector<Root>> by_line;
  for (Root g : weights.to_vector()) {
    const std::vector<int>& c = rs.coords(g);
    std::vector<long> key(rank + 1, 0);
    bool parallel = true;
    for (int j = 0; j < rank; ++j) {
      key[j] = static_cast<long>(c[j]) * a[j0] - static_cast<long>(a[j]) * c[j0];
      if (key[j] != 0) parallel = false;
    }
    if (parallel) key[rank] = (c[j0] > 0) == (a[j0] > 0) ? 1 : -1;
    by_line[key].push_back(g);
  }

  std::vector<std::vector<Root>> classes;
  for (auto& [key, members] : by_line) {
    // Top-down along alpha: members on one line have distinct pairings.
    std::sort(members.begin(), members.end(), [&](Root x, Root y) {
      return rs.twice_form(x, alpha) > rs.twice_form(y, alpha);
    });
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [](const std::vector<Root>& x, const std::vector<Root>& y) {
              return x.front() < y.front();
            });
  return classes;
}

std::vector<Root> m_star(const RootSystem& rs, const WeylElement& y, Root alpha,
                         std::span<const Root> weight_class) {
  if (weight_class.empty())
    throw InternalInconsistency("m_star: empty weight class");
  std::vector<Root> ambient = rs.alpha_string(alpha, weight_class[0]);

  // The members available at y are those the tangent cone at y can carry.
  std::vector<bool> avail(ambient.size());
  int first = -1, last = -1;
  for (size_t i = 0; i < ambient.size(); ++i) {
    avail[i] = !rs.is_positive(y.apply_inverse(ambient[i]));
    if (avail[i]) {
      if (first < 0) first = static_cast<int>(i);
      last = static_cast<int>(i);
    }
  }
  for (int i = first; i <= last; ++i)
    if (!avail[i])
      throw NonConsecutiveRun(
          "available members of the root string do not form a consecutive run");

  for (Root g : weight_class) {
    auto it = std::find(ambient.begin(), ambient.end(), g);
    if (it == ambient.end())
      throw InternalInconsistency("m_star: class member off its own string");
    int pos = static_cast<int>(it - ambient.begin());
    if (pos < first || pos > last)
      throw RunTooShort("weight class does not fit inside the available run");
  }

  // Bottom-anchored placement: the l lowest available members, top-down.
  int l = static_cast<int>(weight_class.size());
  std::vector<Root> out;
  for (int i = last - l + 1; i <= last; ++i) out.push_back(ambient[i]);
  return out;
}

RootSet translate_of_weights(const RootSystem& rs, const RootSet& weights,
                             const WeylElement& y, Root alpha) {
  RootSet out = rs.empty_set();
  for (const std::vector<Root>& cls : s_weight_classes(rs, weights, alpha))
    for (Root g : m_star(rs, y, alpha, cls)) out.insert(rs.reflect(alpha, g));
  if (out.size() != weights.size())
    throw InternalInconsistency("translate changed the number of weights");
  return out;
}

RootSet peterson_translate(const BruhatInterval& X, const WeylElement& y,
                           Root alpha) {
  const RootSystem& rs = X.system();
  if (!rs.is_positive(alpha) || rs.is_positive(y.apply_inverse(alpha)))
    throw InvalidCurve(
        "curve direction must be positive with r_alpha y below y");
  RootSet weights = curve_weights(X, y);  // NotInInterval when y is outside
  return translate_of_weights(rs, weights, y, alpha);
}

bool translates_equal(const BruhatInterval& X, const WeylElement& y1,
                      Root alpha1, const WeylElement& y2, Root alpha2) {
  if (!(reflection_of(X.system(), alpha1) * y1 ==
        reflection_of(X.system(), alpha2) * y2))
    throw MismatchedBase("curves do not share their lower fixed point");
  return peterson_translate(X, y1, alpha1) == peterson_translate(X, y2, alpha2);
}

RootSet bbT_weights(const BruhatInterval& X, const WeylElement& x) {
  const RootSystem& rs = X.system();
  RootSet out = curve_weights(X, x);  // NotInInterval when x is outside

  // Positive roots whose one-parameter subgroups fix the point x.
  std::vector<Root> isotropy;
  for (int p = 0; p < rs.positive_count(); ++p)
    if (rs.is_positive(x.apply_inverse(Root(p)))) isotropy.push_back(Root(p));

  // Saturate under their action, staying inside the tangent weights at x.
  bool grew = true;
  while (grew) {
    grew = false;
    for (Root g : out.to_vector()) {
      const std::vector<int>& cg = rs.coords(g);
      for (Root p : isotropy) {
        const std::vector<int>& cp = rs.coords(p);
        std::vector<int> sum(rs.rank());
        for (int j = 0; j < rs.rank(); ++j) sum[j] = cg[j] + cp[j];
        std::optional<Root> d = rs.find_root(sum);
        if (d && !rs.is_positive(x.apply_inverse(*d)) && !out.contains(*d)) {
          out.insert(*d);
          grew = true;
        }
      }
    }
  }
  return out;
}

RootSet v_c_weights(const BruhatInterval& X, const WeylElement& x, Root mu,
                    bool upper_smoothness_established) {
  const RootSystem& rs = X.system();
  int xk = X.index_of(x);
  if (xk < 0) throw NotInInterval("x is not in the interval");
  if (!rs.is_positive(mu) || !rs.is_positive(x.apply_inverse(mu)))
    throw InvalidCurve("curve direction must be positive and point upward at x");
  WeylElement y = reflection_of(rs, mu) * x;
  int yk = X.index_of(y);
  if (yk < 0) throw InvalidCurve("upper point of the curve lies outside");
  if (!upper_smoothness_established)
    throw NotSmoothUpperPoint(
        "correction set is only meaningful under a smooth upper point");

  RootSet out = rs.empty_set();
  if (rs.factor_simply_laced(rs.factor_of(mu))) return out;
  if (!rs.is_long(mu))
    throw CurveNotLong("correction set requires a long curve direction");

  RootSet at_x = curve_weights(X, x);
  RootSet at_y = curve_weights(X, y);
  for (int p = 0; p < rs.positive_count(); ++p) {
    Root phi(p);
    if (!rs.is_long(phi) || rs.twice_form(phi, mu) != 0) continue;
    if (!at_x.contains(rs.negated(phi)) || at_y.contains(rs.negated(phi)))
      continue;
    const std::vector<int>& cm = rs.coords(mu);
    const std::vector<int>& cp = rs.coords(phi);
    std::vector<int> cg(rs.rank());
    bool integral = true;
    for (int j = 0; j < rs.rank(); ++j) {
      int s = cm[j] + cp[j];
      if (s % 2 != 0) integral = false;
      cg[j] = -s / 2;
    }
    if (!integral) continue;
    std::optional<Root> gamma = rs.find_root(cg);
    if (!gamma) continue;
    std::vector<int> cd(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) cd[j] = cm[j] + cg[j];
    std::optional<Root> delta = rs.find_root(cd);
    if (!delta) continue;
    if (!rs.is_positive(*delta) && !rs.is_positive(x.apply_inverse(*delta)))
      continue;
    out.insert(*gamma);
  }
  return out;
}

}  // namespace schubloc
