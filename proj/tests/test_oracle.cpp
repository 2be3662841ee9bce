#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "schubloc/oracle.hpp"
#include "support.hpp"

using namespace schubloc;
using schubloc::testing::elem;

TEST_CASE("type-A bridge decodes one-line notation") {
  RootSystem rs = RootSystem::parse("A3");
  CHECK(oracle::to_permutation(elem(rs, {})).one_line ==
        std::vector<int>{1, 2, 3, 4});
  CHECK(oracle::to_permutation(elem(rs, {1})).one_line ==
        std::vector<int>{2, 1, 3, 4});
  CHECK(oracle::to_permutation(elem(rs, {2, 1, 3, 2})).one_line ==
        std::vector<int>{3, 4, 1, 2});
  CHECK(oracle::to_permutation(elem(rs, {1, 2, 1, 3, 2, 1})).one_line ==
        std::vector<int>{4, 3, 2, 1});

  // Length equals the inversion count of the one-line word.
  for (const WeylElement& w : oracle::full_group(rs)) {
    std::vector<int> p = oracle::to_permutation(w).one_line;
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inv;
    CHECK(inv == w.length());
  }

  RootSystem b2 = RootSystem::parse("B2");
  CHECK_THROWS_AS((void)oracle::to_permutation(elem(b2, {1})), NotTypeA);
  RootSystem prod = RootSystem::parse("A1xA1");
  CHECK_THROWS_AS((void)oracle::to_permutation(elem(prod, {1})), NotTypeA);
}

TEST_CASE("pattern containment by index enumeration") {
  using oracle::Permutation;
  const std::vector<int> p3412{3, 4, 1, 2}, p4231{4, 2, 3, 1};

  CHECK(oracle::contains_pattern(Permutation{{3, 4, 1, 2}}, p3412));
  CHECK_FALSE(oracle::contains_pattern(Permutation{{3, 4, 1, 2}}, p4231));
  CHECK(oracle::contains_pattern(Permutation{{4, 2, 3, 1}}, p4231));
  CHECK_FALSE(oracle::contains_pattern(Permutation{{4, 2, 3, 1}}, p3412));
  CHECK_FALSE(oracle::contains_pattern(Permutation{{1, 2, 3, 4}}, p3412));

  // Proper containment inside a bigger permutation.
  CHECK(oracle::contains_pattern(Permutation{{4, 5, 1, 2, 3}}, p3412));
  CHECK(oracle::contains_pattern(Permutation{{5, 2, 3, 4, 1}}, p4231));
  CHECK(oracle::contains_pattern(Permutation{{2, 1, 3}},
                                 std::vector<int>{2, 1}));
  // A pattern longer than the word never matches.
  CHECK_FALSE(oracle::contains_pattern(Permutation{{2, 1}}, p3412));
}

TEST_CASE("group enumeration respects the budget") {
  CHECK(oracle::full_group(RootSystem::parse("A2")).size() == 6);
  CHECK(oracle::full_group(RootSystem::parse("B2")).size() == 8);
  CHECK(oracle::full_group(RootSystem::parse("B3")).size() == 48);
  CHECK_THROWS_AS((void)oracle::full_group(RootSystem::parse("E6"), 2000),
                  BudgetExceeded);
}

TEST_CASE("exhaustive consistency sweeps pass on small groups") {
  for (const char* d : {"A2", "B2", "C3"}) {
    CAPTURE(d);
    RootSystem rs = RootSystem::parse(d);
    oracle::ConsistencyReport rep = oracle::exhaustive_consistency(rs);
    CHECK(rep.pass);
    CHECK(rep.descriptor == d);
    CHECK(rep.tops_swept == rep.group_order);
    CHECK(rep.checks_run > 0);
    CHECK(rep.failures.empty());
    for (const auto& f : rep.families) {
      CAPTURE(f.name);
      CHECK(f.pass);
      // Simply-laced systems have no long roots, so the long-direction
      // family legitimately stays empty there.
      if (rs.simply_laced() && f.name.find("long-direction") == 0) continue;
      CHECK(f.checks > 0);
    }
  }
}

TEST_CASE("the B2 sweep embeds the worked example as its own family") {
  oracle::ConsistencyReport rep =
      oracle::exhaustive_consistency(RootSystem::parse("B2"));
  REQUIRE(rep.families.size() == 10);
  CHECK(rep.families.back().name.find("worked example") != std::string::npos);
  CHECK(rep.families.back().pass);

  std::ostringstream tap;
  oracle::print_tap(rep, tap);
  CHECK(tap.str().find("1..10") == 0);
  CHECK(tap.str().find("not ok") == std::string::npos);

  nlohmann::json j = nlohmann::json::parse(oracle::consistency_json(rep));
  CHECK(j["pass"] == true);
  CHECK(j["descriptor"] == "B2");
  CHECK(j["group_order"] == 8);
  CHECK(j["families"].size() == 10);
}

TEST_CASE("length-capped sweeps only visit short tops") {
  RootSystem rs = RootSystem::parse("B3");
  oracle::ConsistencyReport rep =
      oracle::exhaustive_consistency(rs, 2000, /*max_length=*/2);
  CHECK(rep.pass);
  CHECK(rep.group_order == 48);
  // 1 + 3 + 5 elements of length 0, 1, 2.
  CHECK(rep.tops_swept == 9);
  CHECK_THROWS_AS(
      (void)oracle::exhaustive_consistency(RootSystem::parse("E6"), 2000, 2),
      BudgetExceeded);
}
