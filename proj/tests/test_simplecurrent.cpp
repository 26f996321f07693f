#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wzw/simplecurrent.hpp"

using namespace wzw;

namespace {

struct Setup {
  WzwTheory t;
  FusionRing ring;
  SimpleCurrentGroup g;
  SJCache sj;
  OrbitData od;

  Setup(const std::string& alg, std::int64_t k)
      : t(wzw_theory(parse_algebras(alg), k)),
        ring(verlinde(t.md)),
        g(simple_currents(t.md, ring)),
        sj(t.sj_provider()),
        od(orbit_data(t.md, g, sj)) {}
};

}  // namespace

TEST_CASE("orbit Cartan matrices of diagram flips") {
  const auto a2 = build_algebra('A', 2);
  const IMat ac = affine_cartan(a2);
  DiagramAutomorphism flip{{0, 2, 1}, true, 2};
  IMat want(2, 2);
  want << 2, -4, -1, 2;  // twisted A2
  CHECK(fold_cartan(ac, flip) == want);

  const auto a3 = build_algebra('A', 3);
  DiagramAutomorphism f3{{0, 3, 2, 1}, true, 2};
  IMat w3(3, 3);
  w3 << 2, -2, 0, -1, 2, -1, 0, -2, 2;
  CHECK(fold_cartan(affine_cartan(a3), f3) == w3);
}

TEST_CASE("rotation folding of affine A3") {
  const auto a3 = build_algebra('A', 3);
  const auto ca = center_automorphisms(a3);
  const auto d = orbit_algebra(a3, 2, ca.maps[2]);  // order 2 rotation
  CHECK(d.kind == FoldingKind::Rotation);
  CHECK(d.orbit_rank == 1);
  CHECK(d.orbit_level == 1);
  CHECK(d.fixed_points.size() == 2);
}

TEST_CASE("su(2) level 4 extension") {
  Setup s("A1", 4);
  const auto x = extended_smatrix(s.t.md, s.g, s.od, s.sj);
  REQUIRE(x.md.size() == 3);
  CHECK(x.md.delta == std::vector<Rational>{Rational(0), Rational(1, 3), Rational(1, 3)});
  // Z3 modular data: S_ab = omega^{+-ab} / sqrt 3.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(std::abs(std::abs(x.md.S(a, b)) - 1 / std::sqrt(3.0)) < 1e-12);
  CHECK(s.od.d[2] == 1);
  const IMat z = z_matrix(s.t.md, s.g, s.od);
  CHECK(z(2, 2) == 2);
  CHECK(z(0, 4) == 1);
  CHECK(z(1, 1) == 0);
  double zr = 0;
  for (const auto& [n, v] : z_residuals(s.t.md, z)) zr = std::max(zr, v);
  CHECK(zr < 1e-9);
}

TEST_CASE("S^J of the su(2) level 4 fixed point") {
  Setup s("A1", 4);
  const auto& m = s.sj.get(4);
  REQUIRE(m.fixed_points == std::vector<int>{2});
  CHECK(std::abs(std::abs(m.S(0, 0)) - 1.0) < 1e-12);
  CHECK(m.convention == "sl2z-cubic");
}

TEST_CASE("su(3) level 3 extension has four classes") {
  Setup s("A2", 3);
  const auto x = extended_smatrix(s.t.md, s.g, s.od, s.sj);
  CHECK(x.md.size() == 4);
  CHECK(s.od.d[s.t.md.index_of("(1,1)")] == 1);
  CHECK(s.od.central[s.t.md.index_of("(1,1)")].size() == 3);
}

TEST_CASE("half-integer spin currents are rejected") {
  Setup s("A1", 2);
  CHECK_THROWS_WITH_AS(extended_smatrix(s.t.md, s.g, s.od, s.sj), doctest::Contains("half-integer"), Error);
}

TEST_CASE("spin normalization makes (S^J)^4 = 1") {
  Setup s("A1", 2);
  const auto& m = s.sj.get(2);
  CHECK(m.convention == "sl2z-cubic-spin-normalized");
  const CMat s4 = m.S * m.S * m.S * m.S;
  CHECK(std::abs(s4(0, 0) - Complex(1, 0)) < 1e-12);
}

TEST_CASE("twisted orbit algebras are not guessed") {
  const auto d4 = build_algebra('D', 4);
  const auto md = kac_peterson(d4, 2);
  const auto g = simple_currents(md, verlinde(md));
  SJCache sj(wzw_sj_provider(d4, 2, md));
  CHECK_THROWS_AS(orbit_data(md, g, sj), Error);
}

TEST_CASE("so(3)^3 at level 1 extends to so(9) level 1") {
  Setup s("A1xA1xA1", 2);
  const int jj0 = 2 * 9 + 2 * 3, j0j = 2 * 3 + 2, sss = 9 + 3 + 1;
  const auto h = subgroup(s.g, {jj0, j0j});
  REQUIRE(h.size() == 4);
  const auto od = orbit_data(s.t.md, h, s.sj);
  CHECK(od.stabilizer[sss].size() == 4);
  CHECK(od.central[sss].size() == 1);
  CHECK(od.d[sss] == 2);
  const auto x = extended_smatrix(s.t.md, h, od, s.sj);
  const auto b4 = kac_peterson(build_algebra('B', 4), 1);
  CHECK(label_bijection(x.md, b4).size() == 3);
}

TEST_CASE("integer spin subgroup of su(4) level 4") {
  Setup s("A3", 4);
  const auto h = subgroup(s.g, {s.t.md.index_of("(0,4,0)")});
  REQUIRE(h.size() == 2);
  const auto od = orbit_data(s.t.md, h, s.sj);
  for (int mu = 0; mu < s.t.md.size(); ++mu) CHECK(od.alternating[mu]);
  const auto x = extended_smatrix(s.t.md, h, od, s.sj);
  double r = 0;
  for (const auto& [n, v] : x.residuals) r = std::max(r, v);
  CHECK(r < 1e-8);
}
