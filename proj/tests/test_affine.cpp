#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wzw/affine.hpp"

using namespace wzw;

namespace {

double max_residual(const Residuals& r) {
  double m = 0;
  for (const auto& [n, v] : r) m = std::max(m, v);
  return m;
}

}  // namespace

TEST_CASE("su(2) S matrix against the sine formula") {
  const auto a1 = build_algebra('A', 1);
  for (int k = 1; k <= 7; ++k) {
    const auto md = kac_peterson(a1, k);
    REQUIRE(md.size() == k + 1);
    for (int a = 0; a <= k; ++a) {
      CHECK(md.delta[a] == Rational(a * (a + 2), 4 * (k + 2)));
      for (int b = 0; b <= k; ++b) {
        const double s = std::sqrt(2.0 / (k + 2)) * std::sin(std::numbers::pi * (a + 1) * (b + 1) / (k + 2));
        CHECK(std::abs(md.S(a, b) - Complex(s, 0)) < 1e-12);
      }
    }
  }
}

TEST_CASE("su(2) level 2 middle entry is +1/2") {
  const auto md = kac_peterson(build_algebra('A', 1), 2);
  CHECK(std::abs(md.S(2, 2) - Complex(0.5, 0)) < 1e-12);
  CHECK(std::abs(md.S(1, 1)) < 1e-12);
}

TEST_CASE("central charge and label count") {
  const auto a2 = build_algebra('A', 2);
  for (int k = 0; k <= 5; ++k) {
    CHECK(static_cast<int>(integrable_weights(a2, k).size()) == (k + 1) * (k + 2) / 2);
    CHECK(central_charge(a2, k) == Rational(8 * k, k + 3));
  }
  CHECK(central_charge(build_algebra('E', 8), 1) == Rational(8));
  CHECK(central_charge(build_algebra('G', 2), 1) == Rational(14, 5));
}

TEST_CASE("invariants for small algebras") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2"})
    for (int k = 1; k <= 3; ++k) {
      CAPTURE(name);
      CAPTURE(k);
      const auto md = kac_peterson(parse_algebra(name), k);
      CHECK(max_residual(modular_residuals(md)) < 1e-9);
    }
}

TEST_CASE("level zero is the trivial theory") {
  const auto md = kac_peterson(build_algebra('B', 3), 0);
  CHECK(md.size() == 1);
  CHECK(std::abs(md.S(0, 0) - Complex(1, 0)) < 1e-15);
  CHECK(md.c == Rational(0));
}

TEST_CASE("E8 level 1 is a single sector, level 2 exceeds the cap") {
  const auto e8 = build_algebra('E', 8);
  CHECK(integrable_weights(e8, 1).size() == 1);
  CHECK_THROWS_AS(kac_peterson(e8, 2, 1000), CapExceeded);
}

TEST_CASE("G2 level 1 is Fibonacci-like") {
  const auto md = kac_peterson(build_algebra('G', 2), 1);
  REQUIRE(md.size() == 2);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const int tau = md.labels[0] == "(0,0)" ? 1 : 0;
  CHECK(std::abs(md.S(md.vacuum, tau).real() / md.S(md.vacuum, md.vacuum).real() - phi) < 1e-12);
  CHECK(md.delta[tau] == Rational(2, 5));
}

TEST_CASE("charge conjugation and label action") {
  const auto a2 = build_algebra('A', 2);
  const auto md = kac_peterson(a2, 1);
  const auto c = conjugation(md);
  CHECK(c[md.index_of("(1,0)")] == md.index_of("(0,1)"));
  const auto ca = center_automorphisms(a2);
  const auto act = label_action(a2, 1, md.weights, ca.maps[1]);
  CHECK(act[md.vacuum] != md.vacuum);
  CHECK(affine_labels(a2, 3, md.weights[md.index_of("(1,0)")]).sum() == 3);
}
