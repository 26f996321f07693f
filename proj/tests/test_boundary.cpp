#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wzw/boundary.hpp"

using namespace wzw;

namespace {

double worst(const Residuals& r) {
  double w = 0;
  for (const auto& [n, v] : r) w = std::max(w, v);
  return w;
}

struct Case {
  std::string name;
  OrbifoldInput in;
  OrbifoldModularData o;
  OrbifoldBoundary b;
};

Case build(std::string name, OrbifoldInput in) {
  auto o = assemble_orbifold(in);
  std::optional<CMat> block;
  if (!in.inner) block = antisymmetric_fixed_block(in, o);
  auto b = orbifold_boundary(in, o, block);
  return {std::move(name), std::move(in), std::move(o), std::move(b)};
}

std::vector<Case> suite() {
  const auto a1 = build_algebra('A', 1);
  std::vector<Case> out;
  for (int k = 1; k <= 4; ++k) {
    out.push_back(build("inner " + std::to_string(k), inner_orbifold_input(a1, k, {Rational(1)})));
    out.push_back(build("swap " + std::to_string(k), permutation_orbifold_input(kac_peterson(a1, k))));
  }
  out.push_back(build("swap A2", permutation_orbifold_input(kac_peterson(build_algebra('A', 2), 1))));
  return out;
}

}  // namespace

TEST_CASE("trivial group reproduces the fusion rules") {
  const auto a1 = build_algebra('A', 1);
  for (int k : {1, 2, 3, 5}) {
    const auto md = kac_peterson(a1, k);
    const auto ring = verlinde(md);
    const auto g = subgroup(simple_currents(md, ring), {md.vacuum});
    SJCache sj(wzw_sj_provider(a1, k, md));
    const auto od = orbit_data(md, g, sj);
    const auto a = classifying_algebra(md, g, od, sj);
    REQUIRE(a.size() == md.size());
    for (int l = 0; l < md.size(); ++l)
      for (int m = 0; m < md.size(); ++m)
        for (int v = 0; v < md.size(); ++v) CHECK(std::abs(a(l, m, v) - double(ring(l, m, v))) < 1e-9);
  }
}

TEST_CASE("su(2) level 4 with its Z2 current") {
  const auto a1 = build_algebra('A', 1);
  const auto md = kac_peterson(a1, 4);
  const auto g = simple_currents(md, verlinde(md));
  SJCache sj(wzw_sj_provider(a1, 4, md));
  const auto od = orbit_data(md, g, sj);
  const auto [hat, boundary] = classifying_labels(md, g, od);
  // Untwisted sectors: spins 0, 1, 2 with the fixed point 2 split in two.
  CHECK(hat.size() == 4);
  CHECK(boundary.size() == hat.size());
  const auto a = classifying_algebra(md, g, od, sj);
  CHECK(worst(a.residuals) < 1e-9);
  CHECK(a.hat_names[a.unit].rfind("(0)", 0) == 0);
}

TEST_CASE("orbifold boundary algebras") {
  for (const auto& c : suite()) {
    CAPTURE(c.name);
    const auto& a = c.b.algebra;
    CHECK(a.boundary.size() == a.hat.size());
    CHECK(worst(a.residuals) < 1e-9);
    CHECK(c.b.ideals.types.size() == 2);
    CHECK(c.b.ideals.residual < 1e-9);
    const auto table = z2_table_smatrix(c.in, c.o, c.b);
    CHECK(match_up_to_relabeling(a.S_hat, table, c.o, c.b) < 1e-9);
  }
}

TEST_CASE("label counts") {
  const auto s = suite();
  for (int k = 1; k <= 4; ++k) {
    CHECK(s[2 * (k - 1)].b.algebra.size() == 2 * (k + 1));
    CHECK(s[2 * (k - 1) + 1].b.algebra.size() == (k + 1) * (k + 2));
  }
  CHECK(s.back().b.algebra.size() == 12);
}

TEST_CASE("structure constants on untwisted labels are the orbifold fusion rules") {
  for (const auto& c : suite()) {
    CAPTURE(c.name);
    const auto ring = verlinde(c.o.md);
    const auto& a = c.b.algebra;
    int compared = 0;
    for (int x = 0; x < a.size(); ++x)
      for (int y = 0; y < a.size(); ++y)
        for (int z = 0; z < a.size(); ++z) {
          const int l = a.hat[x].sector, m = a.hat[y].sector, v = a.hat[z].sector;
          if (c.o.kinds[l].kind != OrbifoldKind::Untwisted || c.o.kinds[m].kind != OrbifoldKind::Untwisted ||
              c.o.kinds[v].kind != OrbifoldKind::Untwisted)
            continue;
          CHECK(std::abs(a(x, y, z) - double(ring(l, m, v))) < 1e-9);
          ++compared;
        }
    CHECK(compared > 0);
  }
}

TEST_CASE("reflection coefficients of the unit are one") {
  for (const auto& c : suite()) {
    const auto& a = c.b.algebra;
    for (int b = 0; b < static_cast<int>(a.boundary.size()); ++b) CHECK(std::abs(a.R(b, a.unit) - 1.0) < 1e-9);
  }
}

TEST_CASE("fixed block requirement") {
  const auto in = permutation_orbifold_input(kac_peterson(build_algebra('A', 1), 2));
  const auto o = assemble_orbifold(in);
  CHECK_THROWS_AS(orbifold_boundary(in, o, std::nullopt), Error);
}
