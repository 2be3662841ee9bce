#ifndef SCHUBLOC_RENDER_HPP
#define SCHUBLOC_RENDER_HPP

#include <string>

#include <json.hpp>

#include "schubloc/singloc.hpp"

namespace schubloc {

// JSON views of the engine's objects, built with ordered keys so that equal
// inputs always serialize to identical bytes.  Roots appear as coordinate
// arrays in the simple-root basis, Weyl elements as canonical reduced words
// (1-based letters; the identity is the empty array).

using json = nlohmann::ordered_json;

// "1 2 1" for s1 s2 s1; "e" for the identity.
std::string word_text(const WeylElement& w);

// "[1,1]" for alpha_1 + alpha_2.
std::string root_text(const RootSystem& rs, Root r);

// "{[0,1], [-1,0]}" with members in root-index order.
std::string set_text(const RootSystem& rs, const RootSet& s);

json word_json(const WeylElement& w);
json root_json(const RootSystem& rs, Root r);
json weights_json(const RootSystem& rs, const RootSet& s);

// {type, rank, factors, simply_laced, weyl_order, positive_roots: [...]}.
json roots_json(const RootSystem& rs);

// {type, word, length, descents, inverse, images_of_simple_roots}.
json element_json(const WeylElement& w);

// {type, word, size, dimension, poincare, elements, covers}.
json interval_json(const BruhatInterval& X);

// {type, word, at, count, weights}.
json tangent_json(const BruhatInterval& X, const WeylElement& x);

// {type, word, upper, direction, lower, translate, curve_weights_at_lower,
//  equals_curve_weights}.
json translate_json(const BruhatInterval& X, const WeylElement& y, Root alpha);

// {type, word, dimension, size, poincare, rationally_smooth, smooth,
//  verdicts, max_singular [, g2_experimental]}.
json report_json(const SmoothnessReport& rep);

// {type, word, poincare, poincare_symmetric, curve_counts_match, length_sum,
//  interval_size, average_matches, rationally_smooth}.
json evidence_json(const BruhatInterval& X, const RationalSmoothnessEvidence& ev);

}  // namespace schubloc

#endif  // SCHUBLOC_RENDER_HPP
