#include "schubloc/singloc.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "schubloc/errors.hpp"

namespace schubloc {

namespace {

void gate_g2(const RootSystem& rs, const SinglocOptions& opts) {
  if (rs.has_g2() && !opts.allow_g2_experimental)
    throw G2Disallowed(
        "verdicts over G2 factors are experimental; opt in explicitly");
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  return v == Verdict::Smooth ? "smooth" : "singular";
}

Verdict SmoothnessReport::verdict_at(const WeylElement& x) const {
  int k = interval->index_of(x);
  if (k < 0) throw NotInInterval("x is not in the interval");
  return verdicts[static_cast<size_t>(k)];
}

SmoothnessReport smoothness_report(const WeylElement& w,
                                   const SinglocOptions& opts) {
  const RootSystem& rs = w.system();
  gate_g2(rs, opts);

  SmoothnessReport rep;
  rep.interval = std::make_shared<BruhatInterval>(w);
  rep.g2_unverified = rs.has_g2();
  const BruhatInterval& X = *rep.interval;
  rep.curve_weights = curve_weight_table(X);

  const int n = X.size();
  const int dim = w.length();
  rep.verdicts.assign(n, Verdict::Smooth);

  // Interval order is by decreasing length, so every point above k is
  // already decided when k comes up.
  for (int k = 0; k < n; ++k) {
    const WeylElement& x = X.element(k);
    const RootSet& at_x = rep.curve_weights[k];
    int codim = dim - x.length();

    if (codim <= 1) {
      // The top is smooth, and so is every codimension-one point (the
      // variety is normal).  Both must show exactly dim curves.
      if (at_x.size() != dim)
        throw InternalInconsistency("curve count off in codimension <= 1");
      continue;
    }

    bool singular_above = false;
    for (int j : X.covers_above(k))
      if (rep.verdicts[j] == Verdict::Singular) {
        singular_above = true;
        break;
      }
    if (singular_above) {
      // Singular points drag everything under them along.
      rep.verdicts[k] = Verdict::Singular;
      continue;
    }

    // Every point above x is smooth, so the curve weights at each upper
    // endpoint are its tangent weights and may be translated down.  The
    // verdict is all-or-nothing across the upward curves.
    int n_up = 0, matches = 0;
    for (Root nu : at_x.to_vector()) {
      if (rs.is_positive(nu)) continue;  // downward curve
      Root mu = rs.negated(nu);
      std::span<const int32_t> table = rs.reflection_table(mu.index());
      std::span<const int32_t> xp = x.perm();
      std::vector<int32_t> yp(xp.size());
      for (size_t g = 0; g < yp.size(); ++g) yp[g] = table[xp[g]];
      int j = X.index_of_perm(yp);
      if (j < 0)
        throw InternalInconsistency("upper endpoint of a curve escaped");
      ++n_up;
      if (rep.curve_weights[j].size() != dim)
        throw InternalInconsistency("tangent dimension off at a smooth point");
      RootSet tau =
          translate_of_weights(rs, rep.curve_weights[j], X.element(j), mu);
      bool eq = tau == at_x;
      if (eq) ++matches;
      rep.diagnostics.push_back({k, j, mu, std::move(tau), eq});
    }
    if (n_up < codim)
      throw InternalInconsistency("fewer upward curves than the codimension");
    if (matches != 0 && matches != n_up)
      throw InternalInconsistency("translate matches must be all or none");
    rep.verdicts[k] = matches > 0 ? Verdict::Smooth : Verdict::Singular;
  }

  for (int k = 0; k < n; ++k) {
    if (rep.verdicts[k] != Verdict::Singular) continue;
    bool maximal = true;
    for (int j : X.covers_above(k))
      if (rep.verdicts[j] == Verdict::Singular) {
        maximal = false;
        break;
      }
    if (maximal) rep.max_singular.push_back(k);
  }
  return rep;
}

Verdict smooth_at(const WeylElement& w, const WeylElement& x,
                  const SinglocOptions& opts) {
  const RootSystem& rs = w.system();
  if (&x.system() != &rs)
    throw MismatchedBase("x and w belong to different root systems");
  gate_g2(rs, opts);
  if (!bruhat_leq(x, w)) throw NotInInterval("x is not below w");

  std::vector<WeylElement> refl;
  refl.reserve(rs.positive_count());
  for (int p = 0; p < rs.positive_count(); ++p)
    refl.push_back(reflection_of(rs, Root(p)));

  // The up-set {y : x <= y <= w}, walked along covers from x.
  std::vector<WeylElement> elems{x};
  std::unordered_map<std::vector<int32_t>, int, BruhatInterval::PermHash> index;
  index.emplace(std::vector<int32_t>(x.perm().begin(), x.perm().end()), 0);
  for (size_t head = 0; head < elems.size(); ++head) {
    WeylElement y = elems[head];
    for (int p = 0; p < rs.positive_count(); ++p) {
      WeylElement z = refl[p] * y;
      if (z.length() != y.length() + 1) continue;
      std::vector<int32_t> zp(z.perm().begin(), z.perm().end());
      if (index.contains(zp)) continue;
      if (!bruhat_leq(z, w)) continue;
      index.emplace(std::move(zp), static_cast<int>(elems.size()));
      elems.push_back(std::move(z));
    }
  }
  const int n = static_cast<int>(elems.size());
  const int dim = w.length();

  // Curve weights and upward curves, per element of the up-set.
  std::vector<RootSet> weights(n, rs.empty_set());
  std::vector<std::vector<std::pair<int, int>>> up(n);  // (positive idx, index)
  for (int i = 0; i < n; ++i) {
    const WeylElement& y = elems[i];
    for (int p = 0; p < rs.positive_count(); ++p) {
      WeylElement t = refl[p] * y;
      if (!bruhat_leq(t, w)) continue;
      bool upward = t.length() > y.length();
      weights[i].insert(upward ? rs.negated(Root(p)) : Root(p));
      if (upward) {
        auto it = index.find(
            std::vector<int32_t>(t.perm().begin(), t.perm().end()));
        if (it == index.end())
          throw InternalInconsistency("upper endpoint of a curve escaped");
        up[i].emplace_back(p, it->second);
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (elems[i].length() != elems[j].length())
      return elems[i].length() > elems[j].length();
    return elems[i].word() < elems[j].word();
  });

  std::vector<Verdict> verdicts(n, Verdict::Smooth);
  for (int oi = 0; oi < n; ++oi) {
    int i = order[oi];
    const WeylElement& y = elems[i];
    int codim = dim - y.length();
    if (codim <= 1) {
      if (weights[i].size() != dim)
        throw InternalInconsistency("curve count off in codimension <= 1");
      continue;
    }
    bool singular_above = false;
    for (auto [p, j] : up[i])
      if (elems[j].length() == y.length() + 1 &&
          verdicts[j] == Verdict::Singular) {
        singular_above = true;
        break;
      }
    if (singular_above) {
      verdicts[i] = Verdict::Singular;
      continue;
    }
    int n_up = 0, matches = 0;
    for (auto [p, j] : up[i]) {
      ++n_up;
      if (weights[j].size() != dim)
        throw InternalInconsistency("tangent dimension off at a smooth point");
      RootSet tau = translate_of_weights(rs, weights[j], elems[j], Root(p));
      if (tau == weights[i]) ++matches;
    }
    if (n_up < codim)
      throw InternalInconsistency("fewer upward curves than the codimension");
    if (matches != 0 && matches != n_up)
      throw InternalInconsistency("translate matches must be all or none");
    verdicts[i] = matches > 0 ? Verdict::Smooth : Verdict::Singular;
  }
  return verdicts[0];
}

std::vector<WeylElement> singular_locus(const WeylElement& w,
                                        const SinglocOptions& opts) {
  SmoothnessReport rep = smoothness_report(w, opts);
  std::vector<WeylElement> out;
  out.reserve(rep.max_singular.size());
  for (int k : rep.max_singular) out.push_back(rep.interval->element(k));
  return out;
}

Verdict gp_smooth_at(std::span<const int> J, const WeylElement& w,
                     const WeylElement& x, const SinglocOptions& opts) {
  const RootSystem& rs = w.system();
  if (&x.system() != &rs)
    throw MismatchedBase("x and w belong to different root systems");
  gate_g2(rs, opts);
  if (!is_minimal_coset_rep(w, J))
    throw NotMinimalRepresentative("w is not a minimal coset representative");
  if (!is_minimal_coset_rep(x, J))
    throw NotMinimalRepresentative("x is not a minimal coset representative");
  if (!bruhat_leq(x, w))
    throw NotInQuotientOrder("x is not below w in the quotient order");

  WeylElement w0j = longest_element(rs, J);
  WeylElement wp = w * w0j;
  if (wp.length() != w.length() + w0j.length())
    throw InternalInconsistency("lengths must add over a minimal representative");
  return smooth_at(wp, x, opts);
}

}  // namespace schubloc
