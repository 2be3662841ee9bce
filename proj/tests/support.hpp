#ifndef SCHUBLOC_TESTS_SUPPORT_HPP
#define SCHUBLOC_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <vector>

#include "schubloc/rootsys.hpp"
#include "schubloc/weyl.hpp"

namespace schubloc::testing {

inline WeylElement elem(const RootSystem& rs, std::initializer_list<int> word) {
  std::vector<int> w(word);
  return WeylElement::from_word(rs, w);
}

inline Root root_at(const RootSystem& rs, std::initializer_list<int> coords) {
  std::vector<int> c(coords);
  auto r = rs.find_root(c);
  if (!r) throw std::runtime_error("no such root in this system");
  return *r;
}

inline RootSet set_of(const RootSystem& rs, std::initializer_list<std::initializer_list<int>> roots) {
  RootSet s = rs.empty_set();
  for (auto c : roots) s.insert(root_at(rs, c));
  return s;
}

}  // namespace schubloc::testing

#endif
