#ifndef SCHUBLOC_WEYL_HPP
#define SCHUBLOC_WEYL_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubloc/rootsys.hpp"

namespace schubloc {

// Element of the Weyl group W of a RootSystem, stored as the permutation it
// induces on the interned root list.  Immutable; length and the canonical
// reduced word are computed at construction.  The canonical word is obtained
// by repeatedly stripping the smallest-index right descent, which makes it
// reduced and deterministic.
//
// Convention: words multiply left-to-right, w = s_{i1} s_{i2} ... s_{ik},
// and elements act on roots on the left, so (u v)(gamma) = u(v(gamma)).
class WeylElement {
public:
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simple_reflection(const RootSystem& rs, int i);  // 1-based

  // Word letters are 1-based simple indices.  Errors: IndexOutOfRange.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word);

  const RootSystem& system() const { return *rs_; }
  int length() const { return length_; }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const { return length_ == 0; }

  Root apply(Root r) const { return Root(perm_[r.index()]); }
  Root apply_inverse(Root r) const;

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  // True iff l(w s_i) < l(w), i.e. w(alpha_i) < 0.  1-based.
  bool right_descent(int i) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.perm_ == b.perm_;
  }

  std::span<const int32_t> perm() const { return perm_; }

  struct Hash {
    size_t operator()(const WeylElement& w) const;
  };

private:
  WeylElement(const RootSystem* rs, std::vector<int32_t> perm);

  friend WeylElement reflection_of(const RootSystem& rs, Root gamma);
  friend WeylElement longest_element(const RootSystem& rs, std::span<const int> J);

  const RootSystem* rs_;
  std::vector<int32_t> perm_;  // image root index per root index
  int length_;
  std::vector<int> word_;
};

// The reflection r_gamma as a group element; gamma may be any root.
WeylElement reflection_of(const RootSystem& rs, Root gamma);

// If w = r_gamma for a (positive) root gamma, returns it.
// Errors: InternalInconsistency if w is not a reflection.
Root reflection_root(const WeylElement& w);

// Bruhat order x <= w, decided by the greedy subword matcher over the
// canonical reduced word of w (the one-pass lifting-property scan).
bool bruhat_leq(const WeylElement& x, const WeylElement& w);

// The lower Bruhat interval [e, w] with its rank table and cover relation.
// Elements are sorted by decreasing length, ties broken lexicographically by
// canonical word, so index 0 is w and the last index is the identity.
class BruhatInterval {
public:
  struct PermHash {
    size_t operator()(const std::vector<int32_t>& p) const;
  };

  explicit BruhatInterval(const WeylElement& w);

  const RootSystem& system() const { return top().system(); }
  const WeylElement& top() const { return elements_[0]; }
  int size() const { return static_cast<int>(elements_.size()); }
  const WeylElement& element(int k) const { return elements_[k]; }
  const std::vector<WeylElement>& elements() const { return elements_; }

  // Index of x in the element order, or -1 when x is not <= w.
  int index_of(const WeylElement& x) const { return index_of_perm(x.perm()); }
  int index_of_perm(std::span<const int32_t> perm) const;
  bool contains(const WeylElement& x) const { return index_of(x) >= 0; }

  // rank_table()[l] = number of elements of length l; these are the
  // coefficients of the Poincare polynomial of X(w) (in q = t^2).
  const std::vector<long>& rank_table() const { return rank_table_; }

  // Cover relation of the Bruhat order restricted to [e, w]:
  // (lower, upper) index pairs with l(upper) = l(lower) + 1.
  const std::vector<std::pair<int, int>>& cover_pairs() const { return covers_; }
  std::span<const int> covers_above(int k) const;
  std::span<const int> covers_below(int k) const;

private:
  std::vector<WeylElement> elements_;
  std::unordered_map<std::vector<int32_t>, int, PermHash> index_;
  std::vector<long> rank_table_;
  std::vector<std::pair<int, int>> covers_;
  // CSR-style adjacency for covers above/below each element.
  std::vector<int> above_, above_off_, below_, below_off_;
};

// Convenience alias for constructing [e, w].
BruhatInterval lower_interval(const WeylElement& w);

// Poincare coefficients of X(w): sizes of the length ranks of [e, w].
std::vector<long> poincare(const WeylElement& w);

// Longest element of the standard parabolic subgroup W_J (J holds 1-based
// simple indices; an empty J gives the identity, J = all of 1..rank the
// longest element of W).  Errors: IndexOutOfRange.
WeylElement longest_element(const RootSystem& rs, std::span<const int> J);

// True iff x is the minimal-length representative of x W_J, i.e. x(alpha_j)
// is positive for every j in J.
bool is_minimal_coset_rep(const WeylElement& x, std::span<const int> J);

}  // namespace schubloc

#endif  // SCHUBLOC_WEYL_HPP
