#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wzw/liealg.hpp"

using namespace wzw;

TEST_CASE("Cartan data of the classical and exceptional series") {
  struct Row {
    const char* name;
    std::int64_t dim, hvee, h;
    std::size_t weyl;
  };
  // Dimensions, dual Coxeter and Coxeter numbers, Weyl group orders.
  const Row rows[] = {{"A1", 3, 2, 2, 2},       {"A2", 8, 3, 3, 6},       {"A3", 15, 4, 4, 24},
                      {"B2", 10, 3, 4, 8},      {"B3", 21, 5, 6, 48},     {"C3", 21, 4, 6, 48},
                      {"D4", 28, 6, 6, 192},    {"G2", 14, 4, 6, 12},     {"F4", 52, 9, 12, 1152},
                      {"E6", 78, 12, 12, 51840}};
  for (const auto& r : rows) {
    CAPTURE(r.name);
    const auto a = parse_algebra(r.name);
    CHECK(a.dimension == r.dim);
    CHECK(a.dual_coxeter == r.hvee);
    CHECK(a.coxeter == r.h);
    CHECK(weyl_group(a).size() == r.weyl);
    CHECK(static_cast<std::int64_t>(a.positive_roots.size()) * 2 + a.rank == r.dim);
  }
}

TEST_CASE("Kac convention and symmetrizer") {
  const auto b2 = build_algebra('B', 2);
  // Bourbaki B2: alpha_1 long, alpha_2 short.
  CHECK(b2.cartan(0, 1) == -1);
  CHECK(b2.cartan(1, 0) == -2);
  CHECK(b2.root_metric(0, 0) == Rational(2));
  CHECK(b2.root_metric(1, 1) == Rational(1));
  const auto g2 = build_algebra('G', 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(g2.symmetrizer[i] * g2.cartan(i, j) == g2.symmetrizer[j] * g2.cartan(j, i));
}

TEST_CASE("highest root, marks and rho") {
  const auto e8 = build_algebra('E', 8);
  CHECK(e8.highest_root.sum() == 29);  // height h - 1
  const auto a3 = build_algebra('A', 3);
  CHECK(a3.weyl_vector == IVec::Ones(3));
  CHECK(level_of(a3, a3.weyl_vector) == 3);
}

TEST_CASE("center group from the Smith normal form") {
  struct Row {
    const char* name;
    std::vector<std::int64_t> factors;
  };
  const Row rows[] = {{"A1", {2}}, {"A4", {5}},    {"B3", {2}}, {"C2", {2}}, {"D4", {2, 2}},
                      {"D5", {4}}, {"D6", {2, 2}}, {"E6", {3}}, {"E7", {2}}, {"E8", {}},
                      {"F4", {}},  {"G2", {}}};
  for (const auto& r : rows) {
    CAPTURE(r.name);
    CHECK(center_group(parse_algebra(r.name)).factors == r.factors);
  }
}

TEST_CASE("Smith normal form reproduces U A V = D") {
  IMat a(3, 3);
  a << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  const auto s = smith_normal_form(a);
  CHECK((s.U * a * s.V) == s.D);
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D(1, 1) == 6);
  CHECK(s.D(2, 2) == 12);
  CHECK(std::abs(determinant(s.U)) == 1);
}

TEST_CASE("Weyl traversal honours the cap") {
  const auto e6 = build_algebra('E', 6);
  try {
    weyl_group(e6, 1000);
    FAIL("expected CapExceeded");
  } catch (const CapExceeded& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
    CHECK(e.partial() >= 1000);
  }
}

TEST_CASE("Weyl group signs and longest element") {
  const auto a2 = build_algebra('A', 2);
  int plus = 0;
  for (const auto& w : weyl_group(a2)) plus += w.sign > 0;
  CHECK(plus == 3);
  const IMat w0 = longest_element(a2);
  // w0 rho = -rho
  CHECK(w0 * a2.weyl_vector == -a2.weyl_vector);
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(build_algebra('D', 4), false).size() == 6);
  CHECK(diagram_automorphisms(build_algebra('A', 3), true).size() == 8);
  CHECK(center_automorphisms(build_algebra('E', 6)).maps.size() == 3);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_algebra("Q3"), Error);
  CHECK_THROWS_AS(parse_algebra("D2"), Error);
  CHECK_THROWS_AS(parse_algebra("E9"), Error);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
}
