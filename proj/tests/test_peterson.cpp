#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "schubloc/oracle.hpp"
#include "schubloc/peterson.hpp"
#include "support.hpp"

using namespace schubloc;
using schubloc::testing::elem;
using schubloc::testing::root_at;
using schubloc::testing::set_of;

namespace {

RootSystem b2() { return RootSystem::parse("B2"); }

}  // namespace

TEST_CASE("weight classes group curve weights into root strings") {
  RootSystem rs = b2();
  BruhatInterval X(elem(rs, {1, 2, 1}));
  WeylElement ba = elem(rs, {2, 1});

  // Along alpha+beta, the weights at ba split into the string {beta, -alpha}
  // and the degenerate class of the direction itself.
  auto classes =
      s_weight_classes(rs, curve_weights(X, ba), root_at(rs, {1, 1}));
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] ==
        std::vector<Root>{root_at(rs, {0, 1}), root_at(rs, {-1, 0})});
  CHECK(classes[1] == std::vector<Root>{root_at(rs, {1, 1})});

  // Along alpha, the weights at ab fall on three distinct lines.
  auto singletons = s_weight_classes(
      rs, curve_weights(X, elem(rs, {1, 2})), root_at(rs, {1, 0}));
  REQUIRE(singletons.size() == 3);
  for (const auto& c : singletons) CHECK(c.size() == 1);
}

TEST_CASE("the leading-weight run is anchored at the bottom") {
  RootSystem rs = b2();
  WeylElement ba = elem(rs, {2, 1});

  // The full (alpha+beta)-string through beta is beta, -alpha, -(2a+b), all
  // of it available at ba; a two-element class lands on the bottom two.
  std::vector<Root> cls{root_at(rs, {0, 1}), root_at(rs, {-1, 0})};
  CHECK(m_star(rs, ba, root_at(rs, {1, 1}), cls) ==
        std::vector<Root>{root_at(rs, {-1, 0}), root_at(rs, {-2, -1})});

  // At ab only the top of the alpha-string through 2a+b is available.
  WeylElement ab = elem(rs, {1, 2});
  std::vector<Root> top{root_at(rs, {2, 1})};
  CHECK(m_star(rs, ab, root_at(rs, {1, 0}), top) ==
        std::vector<Root>{root_at(rs, {2, 1})});

  // alpha+beta sits below the available run of that same string.
  std::vector<Root> blocked{root_at(rs, {1, 1})};
  CHECK_THROWS_AS((void)m_star(rs, ab, root_at(rs, {1, 0}), blocked),
                  RunTooShort);
}

TEST_CASE("translates along both curves at each smooth point of X(s1s2s1)") {
  RootSystem rs = b2();
  BruhatInterval X(elem(rs, {1, 2, 1}));
  WeylElement ab = elem(rs, {1, 2});
  WeylElement ba = elem(rs, {2, 1});

  // Lower point s2: both curves reproduce its curve weights.
  RootSet at_b = set_of(rs, {{0, 1}, {-1, 0}, {-1, -1}});
  CHECK(peterson_translate(X, ab, root_at(rs, {1, 0})) == at_b);
  CHECK(peterson_translate(X, ba, root_at(rs, {1, 1})) == at_b);
  CHECK(translates_equal(X, ab, root_at(rs, {1, 0}), ba, root_at(rs, {1, 1})));

  // Lower point s1: the two limits exist but neither matches the curve
  // weights {alpha, -beta, -(2a+b)} there -- the singular signature.
  RootSet tau_c = peterson_translate(X, ba, root_at(rs, {0, 1}));
  RootSet tau_d = peterson_translate(X, ab, root_at(rs, {2, 1}));
  CHECK(tau_c == set_of(rs, {{-1, -1}, {0, -1}, {1, 0}}));
  CHECK(tau_d == set_of(rs, {{-1, -1}, {1, 0}, {-2, -1}}));
  RootSet at_a = curve_weights(X, elem(rs, {1}));
  CHECK(tau_c != at_a);
  CHECK(tau_d != at_a);
  CHECK_FALSE(
      translates_equal(X, ba, root_at(rs, {0, 1}), ab, root_at(rs, {2, 1})));
}

TEST_CASE("translate preserves the number of weights") {
  for (const char* d : {"B2", "A3", "C3"}) {
    CAPTURE(d);
    RootSystem rs = RootSystem::parse(d);
    for (const WeylElement& w : oracle::full_group(rs)) {
      BruhatInterval X(w);
      for (const WeylElement& y : X.elements()) {
        if (y.is_identity()) continue;
        RootSet weights = curve_weights(X, y);
        for (int p = 0; p < rs.positive_count(); ++p) {
          Root mu(p);
          if (rs.is_positive(y.apply_inverse(mu))) continue;
          RootSet tau = peterson_translate(X, y, mu);
          CHECK(tau.size() == weights.size());
        }
      }
    }
  }
}

TEST_CASE("translate input validation") {
  RootSystem rs = b2();
  BruhatInterval X(elem(rs, {1, 2, 1}));
  WeylElement ba = elem(rs, {2, 1});

  // Not a descent direction of ba / not positive at all.
  CHECK_THROWS_AS((void)peterson_translate(X, ba, root_at(rs, {1, 0})),
                  InvalidCurve);
  CHECK_THROWS_AS((void)peterson_translate(X, ba, root_at(rs, {-1, -1})),
                  InvalidCurve);
  // bab is outside [e, s1s2s1] though alpha+beta is one of its descents.
  CHECK_THROWS_AS(
      (void)peterson_translate(X, elem(rs, {2, 1, 2}), root_at(rs, {1, 1})),
      NotInInterval);
  // Curves with different lower points cannot be compared.
  CHECK_THROWS_AS((void)translates_equal(X, ba, root_at(rs, {1, 1}), ba,
                                         root_at(rs, {0, 1})),
                  MismatchedBase);
}

TEST_CASE("isotropy saturation of the curve weights") {
  RootSystem rs = b2();
  BruhatInterval X(elem(rs, {1, 2, 1}));

  // At s1 the curve weights are already saturated; in particular -(a+b),
  // the root both translates pick up, is not among them.
  RootSet hull = bbT_weights(X, elem(rs, {1}));
  CHECK(hull == set_of(rs, {{1, 0}, {0, -1}, {-2, -1}}));
  CHECK_FALSE(hull.contains(root_at(rs, {-1, -1})));

  SUBCASE("the hull is closed and bounded by the tangent cone") {
    for (const char* d : {"B2", "A3"}) {
      CAPTURE(d);
      RootSystem sys = RootSystem::parse(d);
      for (const WeylElement& w : oracle::full_group(sys)) {
        BruhatInterval I(w);
        for (const WeylElement& x : I.elements()) {
          RootSet h = bbT_weights(I, x);
          REQUIRE(curve_weights(I, x).subset_of(h));
          for (Root g : h.to_vector()) {
            CHECK_FALSE(sys.is_positive(x.apply_inverse(g)));
            for (int p = 0; p < sys.positive_count(); ++p) {
              if (!sys.is_positive(x.apply_inverse(Root(p)))) continue;
              std::vector<int> sum(sys.rank());
              for (int j = 0; j < sys.rank(); ++j)
                sum[j] = sys.coords(g)[j] + sys.coords(Root(p))[j];
              auto dd = sys.find_root(sum);
              if (dd && !sys.is_positive(x.apply_inverse(*dd)))
                CHECK(h.contains(*dd));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("correction weights for the long curves at s1") {
  RootSystem rs = b2();
  BruhatInterval X(elem(rs, {1, 2, 1}));
  WeylElement a = elem(rs, {1});

  // Both upward curves at s1 are long; each contributes exactly -(a+b),
  // which is how the translates escape the saturated hull.
  CHECK(v_c_weights(X, a, root_at(rs, {0, 1}), true) ==
        set_of(rs, {{-1, -1}}));
  CHECK(v_c_weights(X, a, root_at(rs, {2, 1}), true) ==
        set_of(rs, {{-1, -1}}));

  // Every translate stays inside hull-plus-correction.
  RootSet bound = bbT_weights(X, a);
  bound |= v_c_weights(X, a, root_at(rs, {0, 1}), true);
  CHECK(peterson_translate(X, elem(rs, {2, 1}), root_at(rs, {0, 1}))
            .subset_of(bound));
  bound = bbT_weights(X, a);
  bound |= v_c_weights(X, a, root_at(rs, {2, 1}), true);
  CHECK(peterson_translate(X, elem(rs, {1, 2}), root_at(rs, {2, 1}))
            .subset_of(bound));
}

TEST_CASE("correction weights gate their inputs") {
  RootSystem rs = b2();
  BruhatInterval X(elem(rs, {1, 2, 1}));
  WeylElement a = elem(rs, {1});
  WeylElement b = elem(rs, {2});

  CHECK_THROWS_AS((void)v_c_weights(X, a, root_at(rs, {0, 1}), false),
                  NotSmoothUpperPoint);
  // alpha and alpha+beta are short in B2.
  CHECK_THROWS_AS((void)v_c_weights(X, b, root_at(rs, {1, 0}), true),
                  CurveNotLong);
  CHECK_THROWS_AS((void)v_c_weights(X, b, root_at(rs, {1, 1}), true),
                  CurveNotLong);
  // alpha is a descent of a, so the curve points downward there.
  CHECK_THROWS_AS((void)v_c_weights(X, a, root_at(rs, {1, 0}), true),
                  InvalidCurve);
  CHECK_THROWS_AS((void)v_c_weights(X, elem(rs, {2, 1, 2}), root_at(rs, {1, 0}), true),
                  NotInInterval);

  // Simply-laced factors have no correction weights at all.
  RootSystem a3 = RootSystem::parse("A3");
  BruhatInterval Y(elem(a3, {2, 1, 3, 2}));
  CHECK(v_c_weights(Y, elem(a3, {}), a3.simple_root(2), true).empty());
}
