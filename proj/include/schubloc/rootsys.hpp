#ifndef SCHUBLOC_ROOTSYS_HPP
#define SCHUBLOC_ROOTSYS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schubloc/errors.hpp"

namespace schubloc {

// Simple-series labels of the supported semi-simple types.
enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct Factor {
  Series series;
  int rank;
  friend bool operator==(const Factor&, const Factor&) = default;
};

// Handle to an interned root of a fixed RootSystem.  Positive roots occupy
// indices 0..positive_count()-1 (sorted by height, then lexicographically by
// coordinates); index(-gamma) == index(gamma) +- positive_count().
class Root {
public:
  Root() : idx_(-1) {}
  explicit Root(int index) : idx_(index) {}
  int index() const { return idx_; }
  bool valid() const { return idx_ >= 0; }
  friend bool operator==(Root a, Root b) { return a.idx_ == b.idx_; }
  friend auto operator<=>(Root a, Root b) { return a.idx_ <=> b.idx_; }

private:
  int idx_;
};

// Set of roots of one RootSystem, stored as a bitset over root indices.
class RootSet {
public:
  RootSet() : universe_(0) {}
  explicit RootSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  int universe() const { return universe_; }
  bool contains(Root r) const {
    return r.index() >= 0 && r.index() < universe_ &&
           (words_[r.index() >> 6] >> (r.index() & 63)) & 1u;
  }
  void insert(Root r) { words_[r.index() >> 6] |= uint64_t{1} << (r.index() & 63); }
  void erase(Root r) { words_[r.index() >> 6] &= ~(uint64_t{1} << (r.index() & 63)); }

  int size() const;
  bool empty() const { return size() == 0; }
  bool subset_of(const RootSet& other) const;
  RootSet& operator|=(const RootSet& other);
  RootSet& operator&=(const RootSet& other);

  // Members in increasing index order.
  std::vector<Root> to_vector() const;

  friend bool operator==(const RootSet&, const RootSet&) = default;

private:
  int universe_;
  std::vector<uint64_t> words_;
};

// An irreducible-or-product crystallographic root system without a G2 factor
// (G2 available behind an explicit opt-in).  Roots live in the lattice
// spanned by the simple roots; coordinates are integers in the simple-root
// basis, with the coordinate blocks of the factors concatenated.  The
// invariant form F is normalized so that short roots of every factor have
// F(gamma, gamma) = 1; it is stored exactly as the integer matrix 2F.
//
// RootSystem is immutable after construction.  Weyl-group machinery keeps
// pointers to it, so keep the object alive and in place while in use.
class RootSystem {
public:
  // Errors: InvalidRank (per-series rank bounds), G2Disallowed.
  static RootSystem build(const std::vector<Factor>& factors, bool allow_g2 = false);

  // Parses descriptors like "B2", "A3xA1", "f4" (case-insensitive).
  // Errors: InvalidRank (also for malformed descriptors), G2Disallowed.
  static RootSystem parse(std::string_view descriptor, bool allow_g2 = false);

  const std::vector<Factor>& factors() const { return factors_; }
  std::string descriptor() const;  // e.g. "B2xA1"
  int rank() const { return rank_; }
  int root_count() const { return static_cast<int>(coords_.size()); }
  int positive_count() const { return root_count() / 2; }
  bool has_g2() const { return has_g2_; }
  bool simply_laced() const { return simply_laced_; }
  bool factor_simply_laced(int f) const { return factor_simply_laced_[f]; }
  unsigned long weyl_order() const { return weyl_order_; }

  // Roots and coordinates.
  const std::vector<int>& coords(Root r) const { return coords_[r.index()]; }
  std::optional<Root> find_root(std::span<const int> coords) const;
  bool is_positive(Root r) const { return r.index() < positive_count(); }
  Root negated(Root r) const {
    int n = positive_count();
    return Root(r.index() < n ? r.index() + n : r.index() - n);
  }
  int height(Root r) const { return heights_[r.index()]; }
  int factor_of(Root r) const { return factor_of_[r.index()]; }

  // Simple roots, 1-based as in the CLI.  Errors: IndexOutOfRange.
  Root simple_root(int i) const;

  // Cartan matrix entry <alpha_j, alpha_i^vee>, 1-based.
  int cartan(int i, int j) const;

  // Exact form: twice_form(a, b) == 2 F(a, b).
  long twice_form(Root a, Root b) const;

  // <beta, alpha^vee> = 2 F(beta, alpha) / F(alpha, alpha); always an integer.
  int pairing(Root beta, Root alpha) const;

  // r_alpha(beta) = beta - <beta, alpha^vee> alpha.
  Root reflect(Root alpha, Root beta) const;

  // Long/short within the root's own factor; every root of a simply-laced
  // factor counts as short.
  bool is_long(Root r) const;

  // The full alpha-string through beta, listed top-down (beta + k alpha for
  // k = max..min).  Root strings of crystallographic systems are gapless;
  // this is asserted at runtime (InternalInconsistency on violation).
  std::vector<Root> alpha_string(Root alpha, Root beta) const;

  // Precomputed action of r_{gamma} on all roots, as a permutation of root
  // indices; gamma is given by the index of its positive representative.
  std::span<const int32_t> reflection_table(int positive_index) const;

  RootSet empty_set() const { return RootSet(root_count()); }

private:
  RootSystem() = default;

  std::vector<Factor> factors_;
  int rank_ = 0;
  bool has_g2_ = false;
  bool simply_laced_ = true;
  unsigned long weyl_order_ = 1;

  std::vector<std::vector<int>> coords_;   // by root index
  std::vector<int> heights_;               // by root index
  std::vector<int> factor_of_;             // by root index
  std::vector<bool> is_long_;              // by root index
  std::vector<bool> factor_simply_laced_;  // by factor
  std::vector<int> cartan_;                // rank x rank, row-major
  std::vector<long> gram2_;                // 2F on simple roots, rank x rank
  std::vector<int32_t> refl_;              // positive_count x root_count
  std::vector<int> simple_indices_;        // root index of alpha_i, 0-based

  // Lookup from coordinates to root index, sorted for binary search.
  std::vector<std::pair<std::vector<int>, int>> lookup_;

  int find_index(const std::vector<int>& coords) const;
};

}  // namespace schubloc

#endif  // SCHUBLOC_ROOTSYS_HPP
