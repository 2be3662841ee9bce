#include "schubloc/weyl.hpp"

#include <algorithm>

namespace schubloc {

namespace {

size_t hash_perm(std::span<const int32_t> p) {
  // FNV-1a over the image indices.
  size_t h = 14695981039346656037ull;
  for (int32_t v : p) {
    h ^= static_cast<size_t>(static_cast<uint32_t>(v));
    h *= 1099511628211ull;
  }
  return h;
}

int perm_length(const RootSystem& rs, std::span<const int32_t> perm) {
  int npos = rs.positive_count();
  int len = 0;
  for (int i = 0; i < npos; ++i)
    if (perm[i] >= npos) ++len;
  return len;
}

// result = perm o s_i (right multiplication by a simple reflection).
void compose_right_simple(const RootSystem& rs, std::span<const int32_t> perm, int i,
                          std::vector<int32_t>& result) {
  std::span<const int32_t> s = rs.reflection_table(rs.simple_root(i).index());
  int n = rs.root_count();
  result.resize(n);
  for (int g = 0; g < n; ++g) result[g] = perm[s[g]];
}

}  // namespace

WeylElement::WeylElement(const RootSystem* rs, std::vector<int32_t> perm)
    : rs_(rs), perm_(std::move(perm)) {
  length_ = perm_length(*rs_, perm_);

  // Canonical reduced word: strip the smallest right descent until the
  // identity remains; the letters come off the right end of the word.
  word_.reserve(length_);
  std::vector<int32_t> cur = perm_, scratch;
  int npos = rs_->positive_count();
  for (int remaining = length_; remaining > 0; --remaining) {
    int descent = 0;
    for (int i = 1; i <= rs_->rank(); ++i) {
      if (cur[rs_->simple_root(i).index()] >= npos) {  // cur(alpha_i) < 0
        descent = i;
        break;
      }
    }
    if (descent == 0)
      throw InternalInconsistency("non-identity element with no right descent");
    word_.push_back(descent);
    compose_right_simple(*rs_, cur, descent, scratch);
    cur.swap(scratch);
  }
  std::reverse(word_.begin(), word_.end());
}

WeylElement WeylElement::identity(const RootSystem& rs) {
  std::vector<int32_t> perm(rs.root_count());
  for (int g = 0; g < rs.root_count(); ++g) perm[g] = g;
  return WeylElement(&rs, std::move(perm));
}

WeylElement WeylElement::simple_reflection(const RootSystem& rs, int i) {
  std::span<const int32_t> t = rs.reflection_table(rs.simple_root(i).index());
  return WeylElement(&rs, std::vector<int32_t>(t.begin(), t.end()));
}

WeylElement WeylElement::from_word(const RootSystem& rs, std::span<const int> word) {
  std::vector<int32_t> perm(rs.root_count());
  for (int g = 0; g < rs.root_count(); ++g) perm[g] = g;
  std::vector<int32_t> scratch;
  for (int letter : word) {
    if (letter < 1 || letter > rs.rank())
      throw IndexOutOfRange("word letter outside 1..rank");
    compose_right_simple(rs, perm, letter, scratch);
    perm.swap(scratch);
  }
  return WeylElement(&rs, std::move(perm));
}

Root WeylElement::apply_inverse(Root r) const {
  for (int g = 0; g < static_cast<int>(perm_.size()); ++g)
    if (perm_[g] == r.index()) return Root(g);
  throw InternalInconsistency("root permutation is not surjective");
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  std::vector<int32_t> perm(perm_.size());
  for (size_t g = 0; g < perm_.size(); ++g) perm[g] = perm_[other.perm_[g]];
  return WeylElement(rs_, std::move(perm));
}

WeylElement WeylElement::inverse() const {
  std::vector<int32_t> perm(perm_.size());
  for (size_t g = 0; g < perm_.size(); ++g) perm[perm_[g]] = static_cast<int32_t>(g);
  return WeylElement(rs_, std::move(perm));
}

bool WeylElement::right_descent(int i) const {
  Root a = rs_->simple_root(i);
  return perm_[a.index()] >= rs_->positive_count();
}

size_t WeylElement::Hash::operator()(const WeylElement& w) const {
  return hash_perm(w.perm_);
}

WeylElement reflection_of(const RootSystem& rs, Root gamma) {
  Root pos = rs.is_positive(gamma) ? gamma : rs.negated(gamma);
  std::span<const int32_t> t = rs.reflection_table(pos.index());
  return WeylElement(&rs, std::vector<int32_t>(t.begin(), t.end()));
}

Root reflection_root(const WeylElement& w) {
  const RootSystem& rs = w.system();
  for (int p = 0; p < rs.positive_count(); ++p) {
    std::span<const int32_t> t = rs.reflection_table(p);
    if (std::equal(t.begin(), t.end(), w.perm().begin(), w.perm().end()))
      return Root(p);
  }
  throw InternalInconsistency("element is not a reflection");
}

bool bruhat_leq(const WeylElement& x, const WeylElement& w) {
  const RootSystem& rs = x.system();
  if (x.length() > w.length()) return false;
  if (x.length() == w.length()) return x == w;

  // Greedy lifting-property scan over the canonical word of w, read from the
  // right: whenever the current letter is a right descent of v, strip it.
  // x <= w iff v ends at the identity.
  std::vector<int32_t> v(x.perm().begin(), x.perm().end());
  std::vector<int32_t> scratch;
  int npos = rs.positive_count();
  int len = x.length();
  const std::vector<int>& word = w.word();
  for (int j = static_cast<int>(word.size()) - 1; j >= 0; --j) {
    if (len == 0) return true;
    if (len > j + 1) return false;  // not enough letters left
    int i = word[j];
    if (v[rs.simple_root(i).index()] >= npos) {
      compose_right_simple(rs, v, i, scratch);
      v.swap(scratch);
      --len;
    }
  }
  return len == 0;
}

size_t BruhatInterval::PermHash::operator()(const std::vector<int32_t>& p) const {
  return hash_perm(p);
}

BruhatInterval::BruhatInterval(const WeylElement& w) {
  const RootSystem& rs = w.system();

  // Products of subwords of a reduced word for w enumerate exactly [e, w];
  // grow the set one letter at a time, deduplicating as we go.
  std::unordered_map<std::vector<int32_t>, int, PermHash> seen;
  std::vector<WeylElement> pool;
  pool.push_back(WeylElement::identity(rs));
  seen.emplace(std::vector<int32_t>(pool[0].perm().begin(), pool[0].perm().end()), 0);
  std::vector<int32_t> scratch;
  for (int letter : w.word()) {
    WeylElement s = WeylElement::simple_reflection(rs, letter);
    size_t frozen = pool.size();
    for (size_t k = 0; k < frozen; ++k) {
      compose_right_simple(rs, pool[k].perm(), letter, scratch);
      if (!seen.contains(scratch)) {
        seen.emplace(scratch, static_cast<int>(pool.size()));
        pool.push_back(pool[k] * s);
      }
    }
  }

  elements_ = std::move(pool);
  std::sort(elements_.begin(), elements_.end(),
            [](const WeylElement& a, const WeylElement& b) {
              if (a.length() != b.length()) return a.length() > b.length();
              return a.word() < b.word();
            });
  if (!(elements_[0] == w))
    throw InternalInconsistency("interval top is not w");

  index_.clear();
  for (int k = 0; k < size(); ++k)
    index_.emplace(std::vector<int32_t>(elements_[k].perm().begin(),
                                        elements_[k].perm().end()),
                   k);

  rank_table_.assign(w.length() + 1, 0);
  for (const WeylElement& x : elements_) ++rank_table_[x.length()];
  for (long c : rank_table_)
    if (c <= 0) throw InternalInconsistency("empty rank in a Bruhat interval");

  // Covers: z covers nothing upward here; we scan y and find all z = r_gamma y
  // with l(z) = l(y) - 1.  Such z are automatically in [e, w].
  int npos = rs.positive_count();
  std::vector<int32_t> zperm(rs.root_count());
  for (int k = 0; k < size(); ++k) {
    const WeylElement& y = elements_[k];
    if (y.length() == 0) continue;
    for (int p = 0; p < npos; ++p) {
      std::span<const int32_t> t = rs.reflection_table(p);
      for (int g = 0; g < rs.root_count(); ++g) zperm[g] = t[y.perm()[g]];
      if (perm_length(rs, zperm) != y.length() - 1) continue;
      auto it = index_.find(zperm);
      if (it == index_.end())
        throw InternalInconsistency("cover of an interval element escaped the interval");
      covers_.push_back({it->second, k});
    }
  }

  above_off_.assign(size() + 1, 0);
  below_off_.assign(size() + 1, 0);
  for (auto& [lo, hi] : covers_) {
    ++above_off_[lo + 1];
    ++below_off_[hi + 1];
  }
  for (int k = 0; k < size(); ++k) {
    above_off_[k + 1] += above_off_[k];
    below_off_[k + 1] += below_off_[k];
  }
  above_.resize(covers_.size());
  below_.resize(covers_.size());
  std::vector<int> pos_a(above_off_.begin(), above_off_.end() - 1);
  std::vector<int> pos_b(below_off_.begin(), below_off_.end() - 1);
  for (auto& [lo, hi] : covers_) {
    above_[pos_a[lo]++] = hi;
    below_[pos_b[hi]++] = lo;
  }
}

int BruhatInterval::index_of_perm(std::span<const int32_t> perm) const {
  // Transparent lookup would avoid this copy; the map interface wants the
  // key type, and intervals are small enough not to care.
  std::vector<int32_t> key(perm.begin(), perm.end());
  auto it = index_.find(key);
  return it == index_.end() ? -1 : it->second;
}

std::span<const int> BruhatInterval::covers_above(int k) const {
  return {above_.data() + above_off_[k],
          static_cast<size_t>(above_off_[k + 1] - above_off_[k])};
}

std::span<const int> BruhatInterval::covers_below(int k) const {
  return {below_.data() + below_off_[k],
          static_cast<size_t>(below_off_[k + 1] - below_off_[k])};
}

BruhatInterval lower_interval(const WeylElement& w) { return BruhatInterval(w); }

std::vector<long> poincare(const WeylElement& w) {
  return BruhatInterval(w).rank_table();
}

WeylElement longest_element(const RootSystem& rs, std::span<const int> J) {
  for (int j : J)
    if (j < 1 || j > rs.rank()) throw IndexOutOfRange("parabolic index outside 1..rank");
  // Greedy ascent: as long as some v(alpha_j) is positive, multiply by s_j.
  // Stays inside W_J and terminates at its longest element.
  std::vector<int32_t> perm(rs.root_count());
  for (int g = 0; g < rs.root_count(); ++g) perm[g] = static_cast<int32_t>(g);
  std::vector<int32_t> scratch;
  int npos = rs.positive_count();
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int j : J) {
      if (perm[rs.simple_root(j).index()] < npos) {  // v(alpha_j) > 0: ascend
        compose_right_simple(rs, perm, j, scratch);
        perm.swap(scratch);
        progressed = true;
      }
    }
  }
  return WeylElement(&rs, std::move(perm));
}

bool is_minimal_coset_rep(const WeylElement& x, std::span<const int> J) {
  const RootSystem& rs = x.system();
  for (int j : J) {
    if (j < 1 || j > rs.rank()) throw IndexOutOfRange("parabolic index outside 1..rank");
    if (x.apply(rs.simple_root(j)).index() >= rs.positive_count()) return false;
  }
  return true;
}

}  // namespace schubloc
