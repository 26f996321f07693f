#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wzw/fusion.hpp"

using namespace wzw;

TEST_CASE("su(2) fusion rules against the truncated Clebsch-Gordan rule") {
  const auto a1 = build_algebra('A', 1);
  for (int k = 1; k <= 8; ++k) {
    const auto ring = verlinde(kac_peterson(a1, k));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) {
          const bool allowed = std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) &&
                               (a + b + c) % 2 == 0;
          CHECK(ring(a, b, c) == (allowed ? 1 : 0));
        }
  }
}

TEST_CASE("su(3) level 2 fusion of the fundamental") {
  const auto md = kac_peterson(build_algebra('A', 2), 2);
  const auto ring = verlinde(md);
  const int f = md.index_of("(1,0)"), fb = md.index_of("(0,1)"), adj = md.index_of("(1,1)");
  // 3 x 3bar = 1 + 8
  CHECK(ring(f, fb, md.vacuum) == 1);
  CHECK(ring(f, fb, adj) == 1);
  // 3 x 3 = 3bar + 6, with 6 = (2,0)
  CHECK(ring(f, f, fb) == 1);
  CHECK(ring(f, f, md.index_of("(2,0)")) == 1);
  CHECK(ring_violations(ring).total() == 0);
}

TEST_CASE("ring axioms over a suite") {
  for (const char* name : {"A1", "A2", "B2", "G2", "C3"})
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      CHECK(ring_violations(verlinde(kac_peterson(parse_algebra(name), k))).total() == 0);
    }
}

TEST_CASE("simple currents match the center") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2"})
    for (int k = 1; k <= 2; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto alg = parse_algebra(name);
      const auto md = kac_peterson(alg, k);
      const auto g = simple_currents(md, verlinde(md));
      CHECK(invariant_factors(g.group) == center_group(alg).factors);
    }
}

TEST_CASE("E8 level 2 is excluded from the center correspondence") {
  // Its Weyl group is far beyond the default cap.
  CHECK_THROWS_AS(kac_peterson(build_algebra('E', 8), 2), CapExceeded);
}

TEST_CASE("monodromy charges of su(2) level k") {
  const auto md = kac_peterson(build_algebra('A', 1), 3);
  const auto g = simple_currents(md, verlinde(md));
  REQUIRE(g.size() == 2);
  for (int l = 0; l <= 3; ++l) CHECK(g.charge[1][l] == Rational(l % 2, 2));
  CHECK(g.action[1][1] == 2);
}

TEST_CASE("tensor product and label bijection") {
  const auto a = kac_peterson(build_algebra('A', 1), 1);
  const auto t = tensor_product(a, a);
  CHECK(t.size() == 4);
  CHECK(t.c == Rational(2));
  CHECK(label_bijection(t, t) == std::vector<int>{0, 1, 2, 3});
  // Four labels each, but the conformal weights differ.
  CHECK(label_bijection(t, kac_peterson(build_algebra('A', 3), 1)).empty());
  const auto b = kac_peterson(build_algebra('A', 1), 2);
  CHECK(label_bijection(a, b).empty());
}

TEST_CASE("subgroup generated by currents") {
  const auto md = kac_peterson(build_algebra('A', 3), 2);
  const auto g = simple_currents(md, verlinde(md));
  REQUIRE(g.size() == 4);
  const auto h = subgroup(g, {md.index_of("(0,2,0)")});
  CHECK(h.size() == 2);
}
