#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "wzw/blocks.hpp"

using namespace wzw;

namespace {

// su(2) level k fusion of spins a, b, c given as twice the spin.
int su2_fusion(int a, int b, int c, int k) {
  if ((a + b + c) % 2) return 0;
  return std::abs(a - b) <= c && c <= std::min(a + b, 2 * k - a - b) ? 1 : 0;
}

struct Theory {
  SimpleLieAlgebra alg;
  std::int64_t k;
  ModularData md;
  SimpleCurrentGroup g;
  SJCache sj;
  OrbitData od;
  Theory(const std::string& name, std::int64_t level)
      : alg(parse_algebra(name)),
        k(level),
        md(kac_peterson(alg, k)),
        g(simple_currents(md, verlinde(md))),
        sj(wzw_sj_provider(alg, k, md)),
        od(orbit_data(md, g, sj)) {}
};

}  // namespace

TEST_CASE("block ranks match the su(2) fusion rule") {
  for (int k = 1; k <= 6; ++k) {
    const auto md = kac_peterson(build_algebra('A', 1), k);
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) CHECK(block_rank(md, 0, {a, b, c}) == su2_fusion(a, b, c, k));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c)
          for (int d = 0; d <= k; ++d) {
            std::int64_t want = 0;
            for (int e = 0; e <= k; ++e) want += su2_fusion(a, b, e, k) * su2_fusion(e, c, d, k);
            CHECK(block_rank(md, 0, {a, b, c, d}) == want);
          }
    CHECK(block_rank(md, 1, {}) == k + 1);
  }
}

TEST_CASE("higher genus without insertions") {
  const auto md = kac_peterson(build_algebra('A', 1), 1);
  for (int g = 0; g <= 5; ++g) CHECK(block_rank(md, g, {}) == (std::int64_t{1} << g));
  // su(2) level 2 genus 2: 10 blocks.
  CHECK(block_rank(kac_peterson(build_algebra('A', 1), 2), 2, {}) == 10);
}

TEST_CASE("Gamma_out counts") {
  Theory t("A1", 4);
  CHECK(gamma_out(t.g, 2).size() == 2);
  CHECK(gamma_out(t.g, 3).size() == 4);
  Theory a3("A3", 2);
  CHECK(gamma_out(a3.g, 3).size() == 16);
}

TEST_CASE("three spin-one insertions at su(2) level 4") {
  Theory t("A1", 4);
  const auto r = trace_report(t.md, t.g, t.od, t.sj, 0, {2, 2, 2});
  CHECK(r.rank == 1);
  REQUIRE(r.tuples.size() == 4);
  for (const auto& tr : r.traces) CHECK(std::abs(tr - Complex(1, 0)) < 1e-9);
  CHECK(r.dims == std::vector<std::int64_t>{1, 0, 0, 0});
  CHECK(r.holds());
}

TEST_CASE("a tuple outside the central subgroup is rejected") {
  Theory t("A1", 4);
  try {
    conjecture1_trace(t.md, t.g, t.od, t.sj, 0, {1, 1}, {1, 1});
    FAIL("expected a precondition failure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailure);
  }
}

TEST_CASE("sweep statistics") {
  struct Want {
    const char* alg;
    int k, m;
    std::size_t insertions, traces, rows;
  };
  for (const auto& w : {Want{"A1", 4, 3, 35, 16, 3}, Want{"A1", 4, 4, 70, 47, 9}, Want{"A2", 3, 3, 220, 54, 4},
                        Want{"A1", 8, 4, 495, 216, 25}, Want{"A3", 2, 4, 715, 209, 41}}) {
    CAPTURE(w.alg);
    CAPTURE(w.k);
    Theory t(w.alg, w.k);
    SweepStats st;
    const auto rows = sweep(w.alg, w.k, t.md, t.g, t.od, t.sj, 0, w.m, st);
    CHECK(st.insertions == w.insertions);
    CHECK(st.traces == w.traces);
    CHECK(st.integral_traces == st.traces);
    CHECK(st.violations == 0);
    CHECK(rows.size() == w.rows);
  }
}

TEST_CASE("cutting a twisted handle") {
  for (const auto& [name, k] : std::vector<std::pair<const char*, int>>{{"A1", 2}, {"A1", 4}, {"A2", 3}, {"A3", 2}}) {
    CAPTURE(name);
    Theory t(name, k);
    const auto conj = conjugation(t.md);
    double worst = 0;
    for (int mu = 0; mu < t.md.size(); ++mu)
      for (int p = 0; p < t.g.size(); ++p)
        for (const auto& tup : gamma_out(t.g, 2)) {
          const auto fc = factorization_check(t.md, t.g, t.sj, {mu, conj[mu]}, tup, p);
          worst = std::max({worst, fc.residual, fc.eta_residual});
        }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("eta is -1 for the su(2) level 4 current") {
  Theory t("A1", 4);
  const auto fc = factorization_check(t.md, t.g, t.sj, {0, 0}, gamma_out(t.g, 2)[0], 1);
  CHECK(std::abs(fc.eta - Complex(-1, 0)) < 1e-12);
}

TEST_CASE("Laurent arithmetic") {
  const BigRational c(3, 2);
  const auto inv = Laurent::shifted_inverse(c, 8);
  const auto one = inv * (Laurent::monomial(1) + Laurent::monomial(0, c));
  CHECK(one.at(0) == 1);
  for (int n = 1; n < 8; ++n) CHECK(one.at(n) == 0);
  CHECK_THROWS(one.at(8));

  const auto pole = Laurent::shifted_inverse(0, 8);
  CHECK(pole.residue() == 1);
  CHECK(pole.valuation() == -1);

  const auto cube = Laurent::shifted_power(c, 3, 10);
  CHECK(cube.at(0) == c * c * c);
  CHECK(cube.at(3) == 1);
  CHECK(max_difference(Laurent::shifted_power(c, -2, 6), inv * inv) == 0);
  CHECK(cube.derivative().at(2) == 3);
}

TEST_CASE("multi-shift automorphisms preserve the bracket exactly") {
  const SimplyLacedAlgebra a1(build_algebra('A', 1));
  for (int m : {2, 3}) {
    std::vector<IVec> nu(m, IVec::Zero(1));
    nu[0](0) = 1;
    nu[1](0) = -1;
    std::vector<BigRational> z;
    for (int s = 0; s < m; ++s) z.emplace_back(3 * s + 1, 2);
    const auto r = multishift_validate(a1, nu, z, 4);
    CHECK(r.pairs_checked > 0);
    CHECK(r.exact_zero());
  }
  const SimplyLacedAlgebra a2(build_algebra('A', 2));
  std::vector<IVec> nu{IVec::Zero(2), IVec::Zero(2)};
  nu[0] << 1, 0;
  nu[1] << -1, 0;
  CHECK(multishift_validate(a2, nu, {BigRational(0), BigRational(1)}, 2).exact_zero());
}
