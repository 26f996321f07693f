#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wzw/orbifold.hpp"

using namespace wzw;

namespace {

double worst(const Residuals& r) {
  double w = 0;
  for (const auto& [n, v] : r) w = std::max(w, v);
  return w;
}

// Z2 gauge theory: four anyons, one fermion, c = 0.
ModularData toric_code() {
  ModularData md;
  md.name = "toric";
  md.S.resize(4, 4);
  const int sign[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  for (int a = 0; a < 4; ++a) {
    md.labels.push_back(std::to_string(a));
    md.weights.push_back(IVec::Constant(1, a));
    for (int b = 0; b < 4; ++b) md.S(a, b) = sign[a][b] / 2.0;
  }
  md.delta = {Rational(0), Rational(0), Rational(0), Rational(1, 2)};
  md.c = 0;
  return md;
}

}  // namespace

TEST_CASE("inner orbifold input of su(2) level 2") {
  const auto in = inner_orbifold_input(build_algebra('A', 1), 2, {Rational(1)});
  CHECK(in.fixed_points == std::vector<int>{0, 1, 2});
  CHECK(in.eta == std::vector<Rational>{Rational(0), Rational(1, 2), Rational(0)});
  CHECK(in.inner);
  const auto o = assemble_orbifold(in);
  CHECK(o.md.size() == 12);
  CHECK(worst(o.residuals) < 1e-12);
  CHECK(o.md.c == Rational(3, 2));
}

TEST_CASE("a shift acting only on modules gauges a Z2") {
  // (s, alpha) = 1 on every root, so the chiral algebra is untouched.
  const auto a1 = build_algebra('A', 1);
  const auto o = assemble_orbifold(inner_orbifold_input(a1, 1, {Rational(1)}));
  REQUIRE(o.md.size() == 8);
  CHECK(worst(modular_residuals(toric_code())) < 1e-15);
  CHECK(label_bijection(o.md, tensor_product(kac_peterson(a1, 1), toric_code())).size() == 8);
}

TEST_CASE("orbifold modular data and fusion for su(2) levels 1 to 4") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const auto in = inner_orbifold_input(build_algebra('A', 1), k, {Rational(1)});
    for (bool flip : {false, true}) {
      const auto o = assemble_orbifold(in, flip);
      CHECK(o.md.size() == 4 * (k + 1));
      CHECK(worst(o.residuals) < 1e-12);
      CHECK(o.p_square_vs_s0_square < 1e-12);
      CHECK(ring_violations(verlinde(o.md)).total() == 0);
      CHECK(dual_extension_label_count(o) == k + 1);
      const int d = dual_current(o);
      CHECK(o.kinds[d].kind == OrbifoldKind::Untwisted);
      CHECK(o.kinds[d].psi == -1);
      CHECK(o.md.delta[d] == Rational(0));
    }
  }
}

TEST_CASE("twisted sectors follow the fixed points") {
  const auto o = assemble_orbifold(inner_orbifold_input(build_algebra('A', 1), 3, {Rational(1)}));
  int orbit = 0, untwisted = 0, twisted = 0;
  for (const auto& l : o.kinds) {
    orbit += l.kind == OrbifoldKind::Orbit;
    untwisted += l.kind == OrbifoldKind::Untwisted;
    twisted += l.kind == OrbifoldKind::Twisted;
  }
  CHECK(orbit == 0);
  CHECK(untwisted == 8);
  CHECK(twisted == 8);
  // Twisted weights of a psi pair differ by 1/2.
  for (int i = 0; i < o.md.size(); ++i)
    for (int j = 0; j < o.md.size(); ++j)
      if (o.kinds[i].kind == OrbifoldKind::Twisted && o.kinds[j].kind == OrbifoldKind::Twisted &&
          o.kinds[i].index == o.kinds[j].index && o.kinds[i].psi == 1 && o.kinds[j].psi == -1)
        CHECK(frac(o.md.delta[j] - o.md.delta[i]) == Rational(1, 2));
}

TEST_CASE("a half shift gives a P matrix squaring to the current permutation") {
  const auto in = inner_orbifold_input(build_algebra('A', 1), 2, {Rational(1, 2)});
  try {
    assemble_orbifold(in);
    FAIL("expected the P check to fail");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantFailure);
    CHECK(std::string(e.what()).find("P_square") != std::string::npos);
  }
}

TEST_CASE("shift preconditions") {
  const auto a1 = build_algebra('A', 1);
  CHECK_THROWS_AS(inner_orbifold_input(a1, 2, {Rational(0)}), Error);
  CHECK_THROWS_AS(inner_orbifold_input(a1, 2, {Rational(1, 3)}), Error);
  CHECK_THROWS_AS(inner_orbifold_input(a1, 2, {Rational(1), Rational(1)}), Error);
}

TEST_CASE("outer orbifold labels of su(4) level 1") {
  const auto a3 = build_algebra('A', 3);
  const auto md = kac_peterson(a3, 1);
  const auto l = outer_orbifold_labels(a3, md, {2, 1, 0});
  const int a = md.index_of("(1,0,0)"), b = md.index_of("(0,0,1)");
  CHECK(l.sigma[a] == b);
  CHECK(l.sigma[b] == a);
  CHECK(l.fixed_points.size() == 2);
  CHECK_FALSE(l.exceptional_a2n);
  try {
    outer_orbifold_input(a3, 1, {2, 1, 0}, {Rational(0), Rational(0), Rational(0)});
    FAIL("expected E_NOT_IMPLEMENTED");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotImplemented);
  }
  const auto a2 = build_algebra('A', 2);
  CHECK(outer_orbifold_labels(a2, kac_peterson(a2, 1), {1, 0}).exceptional_a2n);
}

TEST_CASE("swap orbifolds of tensor squares") {
  for (int k = 1; k <= 4; ++k) {
    CAPTURE(k);
    const int n = k + 1;
    const auto in = permutation_orbifold_input(kac_peterson(build_algebra('A', 1), k));
    CHECK_FALSE(in.inner);
    const auto o = assemble_orbifold(in);
    CHECK(o.md.size() == n * (n - 1) / 2 + 4 * n);
    CHECK(worst(o.residuals) < 1e-12);
    CHECK(ring_violations(verlinde(o.md)).total() == 0);
    CHECK(dual_extension_label_count(o) == n * n);
  }
  const auto o = assemble_orbifold(permutation_orbifold_input(kac_peterson(build_algebra('A', 2), 1)));
  CHECK(o.md.size() == 3 + 12);
  CHECK(worst(o.residuals) < 1e-12);
}

TEST_CASE("trace of the induced map on fixed-point blocks") {
  for (int k = 1; k <= 4; ++k) {
    const auto in = inner_orbifold_input(build_algebra('A', 1), k, {Rational(1)});
    const auto vac = conjecture2_trace(in, {0, 0, 0}, Orientation::Forward);
    CHECK(vac.rank == 1);
    CHECK(std::abs(vac.trace - Complex(1, 0)) < 1e-9);
    for (int a = 0; a <= k; ++a)
      for (int b = a; b <= k; ++b)
        for (int c = b; c <= k; ++c)
          for (auto ori : {Orientation::Forward, Orientation::Transposed}) {
            const auto r = conjecture2_trace(in, {a, b, c}, ori);
            CHECK(r.integral);
            CHECK(std::abs(r.dim_plus + r.dim_minus - Complex(double(r.rank), 0)) < 1e-9);
            CHECK(r.dim_plus.real() > -1e-9);
            CHECK(r.dim_minus.real() > -1e-9);
          }
  }
  CHECK(std::string(orientation_name(Orientation::Transposed)) == "transposed");
}
