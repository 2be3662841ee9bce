#include "schubloc/render.hpp"

namespace schubloc {

std::string word_text(const WeylElement& w) {
  if (w.is_identity()) return "e";
  std::string out;
  for (int letter : w.word()) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(letter);
  }
  return out;
}

std::string root_text(const RootSystem& rs, Root r) {
  std::string out = "[";
  const std::vector<int>& c = rs.coords(r);
  for (size_t j = 0; j < c.size(); ++j) {
    if (j) out.push_back(',');
    out += std::to_string(c[j]);
  }
  return out + "]";
}

std::string set_text(const RootSystem& rs, const RootSet& s) {
  std::string out = "{";
  bool first = true;
  for (Root g : s.to_vector()) {
    if (!first) out += ", ";
    first = false;
    out += root_text(rs, g);
  }
  return out + "}";
}

json word_json(const WeylElement& w) { return json(w.word()); }

json root_json(const RootSystem& rs, Root r) { return json(rs.coords(r)); }

json weights_json(const RootSystem& rs, const RootSet& s) {
  json out = json::array();
  for (Root g : s.to_vector()) out.push_back(root_json(rs, g));
  return out;
}

json roots_json(const RootSystem& rs) {
  json out;
  out["type"] = "root_system";
  out["descriptor"] = rs.descriptor();
  out["rank"] = rs.rank();
  json factors = json::array();
  for (const Factor& f : rs.factors())
    factors.push_back(std::string(1, static_cast<char>(f.series)) +
                      std::to_string(f.rank));
  out["factors"] = factors;
  out["simply_laced"] = rs.simply_laced();
  out["weyl_order"] = rs.weyl_order();
  out["root_count"] = rs.root_count();
  json pos = json::array();
  for (int p = 0; p < rs.positive_count(); ++p) {
    Root r(p);
    pos.push_back({{"index", p},
                   {"coords", rs.coords(r)},
                   {"height", rs.height(r)},
                   {"long", rs.is_long(r)}});
  }
  out["positive_roots"] = pos;
  return out;
}

json element_json(const WeylElement& w) {
  const RootSystem& rs = w.system();
  json out;
  out["type"] = "element";
  out["word"] = word_json(w);
  out["length"] = w.length();
  json descents = json::array();
  for (int i = 1; i <= rs.rank(); ++i)
    if (w.right_descent(i)) descents.push_back(i);
  out["right_descents"] = descents;
  out["inverse"] = word_json(w.inverse());
  json images = json::array();
  for (int i = 1; i <= rs.rank(); ++i)
    images.push_back(root_json(rs, w.apply(rs.simple_root(i))));
  out["images_of_simple_roots"] = images;
  return out;
}

json interval_json(const BruhatInterval& X) {
  json out;
  out["type"] = "interval";
  out["word"] = word_json(X.top());
  out["size"] = X.size();
  out["dimension"] = X.top().length();
  out["poincare"] = X.rank_table();
  json elems = json::array();
  for (int k = 0; k < X.size(); ++k)
    elems.push_back(
        {{"word", word_json(X.element(k))}, {"length", X.element(k).length()}});
  out["elements"] = elems;
  json covers = json::array();
  for (auto [lo, hi] : X.cover_pairs()) covers.push_back({lo, hi});
  out["covers"] = covers;
  return out;
}

json tangent_json(const BruhatInterval& X, const WeylElement& x) {
  RootSet weights = curve_weights(X, x);
  json out;
  out["type"] = "tangent_weights";
  out["word"] = word_json(X.top());
  out["at"] = word_json(x);
  out["count"] = weights.size();
  out["dimension"] = X.top().length();
  out["weights"] = weights_json(X.system(), weights);
  return out;
}

json translate_json(const BruhatInterval& X, const WeylElement& y, Root alpha) {
  const RootSystem& rs = X.system();
  RootSet tau = peterson_translate(X, y, alpha);
  WeylElement x = reflection_of(rs, alpha) * y;
  RootSet at_x = curve_weights(X, x);
  json out;
  out["type"] = "translate";
  out["word"] = word_json(X.top());
  out["upper"] = word_json(y);
  out["direction"] = root_json(rs, alpha);
  out["lower"] = word_json(x);
  out["translate"] = weights_json(rs, tau);
  out["curve_weights_at_lower"] = weights_json(rs, at_x);
  out["equals_curve_weights"] = tau == at_x;
  return out;
}

json report_json(const SmoothnessReport& rep) {
  const BruhatInterval& X = *rep.interval;
  json out;
  out["type"] = "smoothness_report";
  out["word"] = word_json(X.top());
  out["dimension"] = X.top().length();
  out["size"] = X.size();
  out["poincare"] = X.rank_table();
  out["rationally_smooth"] = rationally_smooth_variety(X).verdict;
  out["smooth"] = rep.max_singular.empty();
  if (rep.g2_unverified) out["g2_experimental"] = true;
  json verdicts = json::array();
  for (int k = 0; k < X.size(); ++k)
    verdicts.push_back({{"word", word_json(X.element(k))},
                        {"length", X.element(k).length()},
                        {"verdict", std::string(verdict_name(rep.verdicts[k]))}});
  out["verdicts"] = verdicts;
  json maxsing = json::array();
  for (int k : rep.max_singular) maxsing.push_back(word_json(X.element(k)));
  out["max_singular"] = maxsing;
  return out;
}

json evidence_json(const BruhatInterval& X,
                   const RationalSmoothnessEvidence& ev) {
  json out;
  out["type"] = "rational_smoothness";
  out["word"] = word_json(X.top());
  out["poincare"] = ev.poincare;
  out["poincare_symmetric"] = ev.poincare_symmetric;
  out["curve_counts_match"] = ev.curve_counts_match;
  out["length_sum"] = ev.length_sum;
  out["interval_size"] = ev.interval_size;
  out["average_matches"] = ev.average_matches;
  out["rationally_smooth"] = ev.verdict;
  return out;
}

}  // namespace schubloc
