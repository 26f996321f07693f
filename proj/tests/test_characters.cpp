#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "wzw/characters.hpp"
#include "wzw/loopalg.hpp"
#include "wzw/orbit.hpp"

using namespace wzw;

TEST_CASE("su(2) level 1 characters against the theta-function series") {
  const auto a1 = build_algebra('A', 1);
  // sum_n q^{n^2} / prod(1 - q^m) and sum_n q^{n^2 + n} / prod(1 - q^m)
  const std::vector<std::int64_t> vac{1, 3, 4, 7, 13, 19, 29, 43, 62, 90, 126};
  const std::vector<std::int64_t> half{2, 2, 6, 8, 14, 20, 34, 46, 70, 96, 138};
  IVec l0(1), l1(1);
  l0 << 0;
  l1 << 1;
  const auto c0 = irreducible_character(a1, 1, l0, 10);
  const auto c1 = irreducible_character(a1, 1, l1, 10);
  CHECK(c0.integers() == vac);
  CHECK(c1.integers() == half);
  CHECK(c0.leading == Rational(-1, 24));
  CHECK(c1.leading == Rational(1, 4) - Rational(1, 24));
}

TEST_CASE("Verma characters of affine su(2)") {
  const auto a1 = build_algebra('A', 1);
  IVec l(1);
  l << 0;
  // prod (1 - q^n)^{-3}; principal: odd heights twice, even heights once.
  const std::vector<std::int64_t> hom{1, 3, 9, 22, 51, 108, 221, 429, 810, 1479, 2640};
  const std::vector<std::int64_t> pri{1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
  CHECK(verma_character(a1, 1, l, 10, Grading::Homogeneous).integers() == hom);
  CHECK(verma_character(a1, 1, l, 10, Grading::Principal).integers() == pri);
}

TEST_CASE("pbw_product") {
  // 1/(1-q)(1-q^2): partitions into parts 1 and 2.
  CHECK(pbw_product({{1, 1}, {2, 1}}, 6) == IntSeries{1, 1, 2, 2, 3, 3, 4});
}

TEST_CASE("Weyl-Kac denominator of affine su(2) gives the principal Verma character") {
  IMat a(2, 2);
  a << 2, -2, -2, 2;
  const std::vector<std::int64_t> pri{1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232};
  CHECK(kac_moody_verma_character(a, {1, 1}, 10).integers() == pri);
}

TEST_CASE("twining characters equal orbit-algebra characters") {
  for (const char* name : {"A1", "A2", "A3", "A4", "D4"}) {
    const auto alg = parse_algebra(name);
    const SimplyLacedAlgebra g(alg);
    for (const auto& w : diagram_automorphisms(alg, true)) {
      if (w.is_identity()) continue;
      CAPTURE(name);
      const IVec fixed = IVec::Zero(alg.rank + 1);
      const auto tw = twining_verma_character(alg, fixed, w, 6).integers();
      const auto orb = orbit_verma_character(alg, w, 6).integers();
      CHECK(tw == orb);
    }
  }
}

TEST_CASE("full rotation of affine A2 has trivial orbit algebra") {
  const auto a2 = build_algebra('A', 2);
  for (const auto& w : center_automorphisms(a2).maps) {
    if (w.is_identity()) continue;
    CHECK(orbit_verma_character(a2, w, 6).integers() == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0});
    CHECK(twining_verma_character(a2, IVec::Zero(3), w, 6).integers() ==
          std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0});
  }
}

TEST_CASE("loop algebra structure constants") {
  const SimplyLacedAlgebra g(build_algebra('A', 2));
  CHECK(g.dim() == 8);
  // Jacobi identity on the finite part.
  auto br = [&](const std::vector<std::pair<int, Rational>>& x, int b) {
    std::map<int, Rational> out;
    for (auto [i, c] : x)
      for (auto [j, d] : g.bracket(i, b)) out[j] += c * d;
    std::vector<std::pair<int, Rational>> v;
    for (auto [k, c] : out)
      if (c != Rational(0)) v.emplace_back(k, c);
    return v;
  };
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b)
      for (int c = 0; c < g.dim(); ++c) {
        std::map<int, Rational> sum;
        for (auto [k, v] : br(g.bracket(a, b), c)) sum[k] += v;
        for (auto [k, v] : br(g.bracket(b, c), a)) sum[k] += v;
        for (auto [k, v] : br(g.bracket(c, a), b)) sum[k] += v;
        for (auto [k, v] : sum) CHECK(v == Rational(0));
      }
}

TEST_CASE("numeric modular check at tau = i") {
  const auto a1 = build_algebra('A', 1);
  for (int k = 1; k <= 2; ++k) {
    const auto md = kac_peterson(a1, k);
    const auto r = numeric_modular_check(md, wzw_characters(a1, k, md, 40));
    CHECK(r.max_residual < 1e-4);
  }
}

TEST_CASE("non-simply-laced twining is not implemented") {
  CHECK_THROWS_AS(SimplyLacedAlgebra(build_algebra('B', 2)), Error);
}
