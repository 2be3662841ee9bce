#include "schubloc/rootsys.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace schubloc {

int RootSet::size() const {
  int n = 0;
  for (uint64_t w : words_) n += std::popcount(w);
  return n;
}

bool RootSet::subset_of(const RootSet& other) const {
  for (size_t k = 0; k < words_.size(); ++k)
    if (words_[k] & ~other.words_[k]) return false;
  return true;
}

RootSet& RootSet::operator|=(const RootSet& other) {
  for (size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

RootSet& RootSet::operator&=(const RootSet& other) {
  for (size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

std::vector<Root> RootSet::to_vector() const {
  std::vector<Root> out;
  for (int i = 0; i < universe_; ++i)
    if (contains(Root(i))) out.push_back(Root(i));
  return out;
}

namespace {

struct SeriesData {
  int root_count;
  unsigned long weyl_order;
  std::vector<long> diag;                           // 2F(alpha_i, alpha_i)
  std::vector<std::pair<std::pair<int, int>, long>> edges;  // ((i, j), 2F(alpha_i, alpha_j))
};

unsigned long sat_mul(unsigned long a, unsigned long b) {
  if (a != 0 && b > std::numeric_limits<unsigned long>::max() / a)
    return std::numeric_limits<unsigned long>::max();
  return a * b;
}

unsigned long factorial(int n) {
  unsigned long f = 1;
  for (int k = 2; k <= n; ++k) f = sat_mul(f, static_cast<unsigned long>(k));
  return f;
}

unsigned long pow2(int n) {
  unsigned long p = 1;
  for (int k = 0; k < n; ++k) p = sat_mul(p, 2);
  return p;
}

// Diagram data per series.  Numbering convention (1-based in the API):
// chains are numbered along the diagram; for B the short simple root is
// node 1 (double bond between 1 and 2), for C node 1 is the long one, for
// F4 nodes 1,2 are long and 3,4 short, for G2 node 1 is short.  D forks at
// node n-2 (nodes n-1 and n are the two tails); E attaches node 2 to node 4
// of the chain 1-3-4-5-6(-7-8).
SeriesData series_data(Series s, int n) {
  SeriesData d;
  auto chain_edge = [&](int i, int j, long g) { d.edges.push_back({{i, j}, g}); };
  switch (s) {
    case Series::A:
      if (n < 1) throw InvalidRank("type A requires rank >= 1");
      d.root_count = n * (n + 1);
      d.weyl_order = factorial(n + 1);
      d.diag.assign(n, 2);
      for (int i = 0; i + 1 < n; ++i) chain_edge(i, i + 1, -1);
      break;
    case Series::B:
      if (n < 2) throw InvalidRank("type B requires rank >= 2");
      d.root_count = 2 * n * n;
      d.weyl_order = sat_mul(pow2(n), factorial(n));
      d.diag.assign(n, 4);
      d.diag[0] = 2;  // node 1 short
      chain_edge(0, 1, -2);
      for (int i = 1; i + 1 < n; ++i) chain_edge(i, i + 1, -2);
      break;
    case Series::C:
      if (n < 2) throw InvalidRank("type C requires rank >= 2");
      d.root_count = 2 * n * n;
      d.weyl_order = sat_mul(pow2(n), factorial(n));
      d.diag.assign(n, 2);
      d.diag[0] = 4;  // node 1 long
      chain_edge(0, 1, -2);
      for (int i = 1; i + 1 < n; ++i) chain_edge(i, i + 1, -1);
      break;
    case Series::D:
      if (n < 3) throw InvalidRank("type D requires rank >= 3");
      d.root_count = 2 * n * (n - 1);
      d.weyl_order = sat_mul(pow2(n - 1), factorial(n));
      d.diag.assign(n, 2);
      for (int i = 0; i + 1 < n - 2; ++i) chain_edge(i, i + 1, -1);
      chain_edge(n - 3, n - 2, -1);
      chain_edge(n - 3, n - 1, -1);
      break;
    case Series::E: {
      if (n < 6 || n > 8) throw InvalidRank("type E requires rank 6, 7 or 8");
      d.root_count = (n == 6) ? 72 : (n == 7) ? 126 : 240;
      d.weyl_order = (n == 6) ? 51840ul : (n == 7) ? 2903040ul : 696729600ul;
      d.diag.assign(n, 2);
      chain_edge(0, 2, -1);
      chain_edge(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) chain_edge(i, i + 1, -1);
      break;
    }
    case Series::F:
      if (n != 4) throw InvalidRank("type F requires rank 4");
      d.root_count = 48;
      d.weyl_order = 1152;
      d.diag = {4, 4, 2, 2};
      chain_edge(0, 1, -2);
      chain_edge(1, 2, -2);
      chain_edge(2, 3, -1);
      break;
    case Series::G:
      if (n != 2) throw InvalidRank("type G requires rank 2");
      d.root_count = 12;
      d.weyl_order = 12;
      d.diag = {2, 6};
      chain_edge(0, 1, -3);
      break;
    default:
      throw InvalidRank("unknown series");
  }
  return d;
}

}  // namespace

RootSystem RootSystem::build(const std::vector<Factor>& factors, bool allow_g2) {
  if (factors.empty()) throw InvalidRank("empty type descriptor");

  RootSystem rs;
  rs.factors_ = factors;
  int n = 0;
  for (const Factor& f : factors) {
    if (f.series == Series::G && !allow_g2)
      throw G2Disallowed("type G2 requires the experimental opt-in");
    n += f.rank;  // per-series rank bounds validated in series_data below
  }
  rs.rank_ = n;
  rs.cartan_.assign(static_cast<size_t>(n) * n, 0);
  rs.gram2_.assign(static_cast<size_t>(n) * n, 0);
  std::vector<int> factor_of_simple(n);
  int expected_roots = 0;

  int off = 0;
  for (size_t fi = 0; fi < factors.size(); ++fi) {
    const Factor& f = factors[fi];
    SeriesData sd = series_data(f.series, f.rank);
    expected_roots += sd.root_count;
    rs.weyl_order_ = sat_mul(rs.weyl_order_, sd.weyl_order);
    bool laced = (f.series == Series::A || f.series == Series::D || f.series == Series::E);
    rs.factor_simply_laced_.push_back(laced);
    if (!laced) rs.simply_laced_ = false;
    if (f.series == Series::G) rs.has_g2_ = true;
    for (int i = 0; i < f.rank; ++i) {
      rs.gram2_[static_cast<size_t>(off + i) * n + (off + i)] = sd.diag[i];
      factor_of_simple[off + i] = static_cast<int>(fi);
    }
    for (auto& [e, g] : sd.edges) {
      rs.gram2_[static_cast<size_t>(off + e.first) * n + (off + e.second)] = g;
      rs.gram2_[static_cast<size_t>(off + e.second) * n + (off + e.first)] = g;
    }
    off += f.rank;
  }

  // cartan(i, j) = <alpha_j, alpha_i^vee> = 2 gram2(i, j) / gram2(i, i).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long num = 2 * rs.gram2_[static_cast<size_t>(i) * n + j];
      long den = rs.gram2_[static_cast<size_t>(i) * n + i];
      if (num % den != 0)
        throw InternalInconsistency("Cartan entry is not an integer");
      rs.cartan_[static_cast<size_t>(i) * n + j] = static_cast<int>(num / den);
    }

  // Close the simple roots under the simple reflections.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    std::vector<int> v = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      long p = 0;
      for (int j = 0; j < n; ++j)
        if (v[j] != 0) p += static_cast<long>(v[j]) * rs.cartan_[static_cast<size_t>(i) * n + j];
      if (p == 0) continue;
      std::vector<int> w = v;
      w[i] -= static_cast<int>(p);
      if (seen.insert(w).second) work.push_back(std::move(w));
    }
  }

  if (static_cast<int>(seen.size()) != expected_roots)
    throw InternalInconsistency("root closure size disagrees with the classification");

  // Canonical order: positives by (height, lex coords); negative of index i
  // at index i + positive_count.
  std::vector<std::vector<int>> positives;
  for (const auto& v : seen) {
    bool nonneg = std::all_of(v.begin(), v.end(), [](int c) { return c >= 0; });
    bool nonpos = std::all_of(v.begin(), v.end(), [](int c) { return c <= 0; });
    if (!nonneg && !nonpos)
      throw InternalInconsistency("root with mixed coordinate signs");
    if (nonneg) positives.push_back(v);
  }
  if (static_cast<int>(positives.size()) * 2 != expected_roots)
    throw InternalInconsistency("positive roots are not half of all roots");
  std::sort(positives.begin(), positives.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              int ha = 0, hb = 0;
              for (int c : a) ha += c;
              for (int c : b) hb += c;
              if (ha != hb) return ha < hb;
              return a < b;
            });

  int npos = static_cast<int>(positives.size());
  rs.coords_.resize(2 * npos);
  for (int i = 0; i < npos; ++i) {
    rs.coords_[i] = positives[i];
    std::vector<int> neg(n);
    for (int j = 0; j < n; ++j) neg[j] = -positives[i][j];
    rs.coords_[i + npos] = std::move(neg);
  }

  rs.heights_.resize(2 * npos);
  rs.factor_of_.resize(2 * npos);
  rs.lookup_.reserve(2 * npos);
  for (int i = 0; i < 2 * npos; ++i) {
    int h = 0;
    for (int c : rs.coords_[i]) h += c;
    rs.heights_[i] = h;
    int support = -1;
    for (int j = 0; j < n; ++j)
      if (rs.coords_[i][j] != 0) {
        if (support >= 0 && factor_of_simple[j] != support)
          throw InternalInconsistency("root supported on several factors");
        support = factor_of_simple[j];
      }
    rs.factor_of_[i] = support;
    rs.lookup_.push_back({rs.coords_[i], i});
  }
  std::sort(rs.lookup_.begin(), rs.lookup_.end());

  // Length classes per factor.
  std::vector<long> max_len(factors.size(), 0);
  for (int i = 0; i < 2 * npos; ++i) {
    long len = rs.twice_form(Root(i), Root(i));
    max_len[rs.factor_of_[i]] = std::max(max_len[rs.factor_of_[i]], len);
  }
  rs.is_long_.resize(2 * npos);
  for (int i = 0; i < 2 * npos; ++i) {
    Root r(i);
    rs.is_long_[i] = !rs.factor_simply_laced_[rs.factor_of_[i]] &&
                     rs.twice_form(r, r) == max_len[rs.factor_of_[i]];
  }

  rs.simple_indices_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    int idx = rs.find_index(e);
    if (idx < 0) throw InternalInconsistency("simple root missing from the root list");
    rs.simple_indices_[i] = idx;
  }

  // Reflection tables for every positive root.
  rs.refl_.assign(static_cast<size_t>(npos) * 2 * npos, -1);
  for (int p = 0; p < npos; ++p)
    for (int g = 0; g < 2 * npos; ++g) {
      Root img = rs.reflect(Root(p), Root(g));
      rs.refl_[static_cast<size_t>(p) * 2 * npos + g] = img.index();
    }

  return rs;
}

RootSystem RootSystem::parse(std::string_view descriptor, bool allow_g2) {
  std::vector<Factor> factors;
  size_t pos = 0;
  while (pos < descriptor.size()) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(descriptor[pos])));
    if (c < 'A' || c > 'G')
      throw InvalidRank("malformed type descriptor: expected a series letter A-G");
    ++pos;
    size_t start = pos;
    while (pos < descriptor.size() &&
           std::isdigit(static_cast<unsigned char>(descriptor[pos])))
      ++pos;
    if (start == pos)
      throw InvalidRank("malformed type descriptor: missing rank");
    int rank = 0;
    for (size_t k = start; k < pos; ++k) {
      rank = rank * 10 + (descriptor[k] - '0');
      if (rank > 1000) throw InvalidRank("rank too large");
    }
    factors.push_back({static_cast<Series>(c), rank});
    if (pos < descriptor.size()) {
      if (descriptor[pos] != 'x' && descriptor[pos] != 'X')
        throw InvalidRank("malformed type descriptor: factors join with 'x'");
      ++pos;
      if (pos == descriptor.size())
        throw InvalidRank("malformed type descriptor: trailing separator");
    }
  }
  if (factors.empty()) throw InvalidRank("empty type descriptor");
  return build(factors, allow_g2);
}

std::string RootSystem::descriptor() const {
  std::ostringstream out;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) out << 'x';
    out << static_cast<char>(factors_[i].series) << factors_[i].rank;
  }
  return out.str();
}

int RootSystem::find_index(const std::vector<int>& coords) const {
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), coords,
                             [](const std::pair<std::vector<int>, int>& a,
                                const std::vector<int>& b) { return a.first < b; });
  if (it == lookup_.end() || it->first != coords) return -1;
  return it->second;
}

std::optional<Root> RootSystem::find_root(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != rank_) return std::nullopt;
  std::vector<int> c(coords.begin(), coords.end());
  int idx = find_index(c);
  if (idx < 0) return std::nullopt;
  return Root(idx);
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw IndexOutOfRange("simple-root index outside 1..rank");
  return Root(simple_indices_[i - 1]);
}

int RootSystem::cartan(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_)
    throw IndexOutOfRange("Cartan index outside 1..rank");
  return cartan_[static_cast<size_t>(i - 1) * rank_ + (j - 1)];
}

long RootSystem::twice_form(Root a, Root b) const {
  const std::vector<int>& ca = coords_[a.index()];
  const std::vector<int>& cb = coords_[b.index()];
  long total = 0;
  for (int i = 0; i < rank_; ++i) {
    if (ca[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < rank_; ++j)
      if (cb[j] != 0) row += gram2_[static_cast<size_t>(i) * rank_ + j] * cb[j];
    total += ca[i] * row;
  }
  return total;
}

int RootSystem::pairing(Root beta, Root alpha) const {
  long num = 2 * twice_form(beta, alpha);
  long den = twice_form(alpha, alpha);
  if (num % den != 0)
    throw InternalInconsistency("non-integral Cartan pairing");
  return static_cast<int>(num / den);
}

Root RootSystem::reflect(Root alpha, Root beta) const {
  int p = pairing(beta, alpha);
  if (p == 0) return beta;
  std::vector<int> c = coords_[beta.index()];
  const std::vector<int>& ca = coords_[alpha.index()];
  for (int j = 0; j < rank_; ++j) c[j] -= p * ca[j];
  int idx = find_index(c);
  if (idx < 0) throw InternalInconsistency("reflection left the root system");
  return Root(idx);
}

bool RootSystem::is_long(Root r) const { return is_long_[r.index()]; }

std::vector<Root> RootSystem::alpha_string(Root alpha, Root beta) const {
  if (beta == alpha || beta == negated(alpha)) return {beta};

  // Crystallographic strings have at most 4 members, so scanning offsets
  // in [-4, 4] sees the whole string plus a margin for the gap check.
  const std::vector<int>& cb = coords_[beta.index()];
  const std::vector<int>& ca = coords_[alpha.index()];
  bool present[9];  // offset k at slot k + 4
  for (int k = -4; k <= 4; ++k) {
    std::vector<int> c(rank_);
    for (int j = 0; j < rank_; ++j) c[j] = cb[j] + k * ca[j];
    present[k + 4] = (k == 0) || find_index(c) >= 0;
  }
  int lo = 0, hi = 0;
  while (lo > -4 && present[lo - 1 + 4]) --lo;
  while (hi < 4 && present[hi + 1 + 4]) ++hi;
  for (int k = -4; k <= 4; ++k)
    if (present[k + 4] && (k < lo || k > hi))
      throw InternalInconsistency("root string has a gap");

  std::vector<Root> out;
  for (int k = hi; k >= lo; --k) {
    std::vector<int> c(rank_);
    for (int j = 0; j < rank_; ++j) c[j] = cb[j] + k * ca[j];
    int idx = find_index(c);
    if (idx < 0) throw InternalInconsistency("root string member vanished");
    out.push_back(Root(idx));
  }
  return out;
}

std::span<const int32_t> RootSystem::reflection_table(int positive_index) const {
  return {refl_.data() + static_cast<size_t>(positive_index) * root_count(),
          static_cast<size_t>(root_count())};
}

}  // namespace schubloc
