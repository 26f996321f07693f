#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wzw/orbifold.hpp"
#include "wzw/simplecurrent.hpp"

namespace wzw {

// Bulk field label: an untwisted sector and a character of its full stabilizer.
struct HatLabel {
  int sector;
  std::vector<Rational> psi;  // indexed like OrbitData::stabilizer[sector]
};

// Boundary label: G-orbit of a sector (any twist) with a character of its
// central stabilizer, stored by the orbit's smallest label.
struct BoundaryLabel {
  int sector;
  std::vector<Rational> psi;  // indexed like OrbitData::central[sector]
};

struct ClassifyingAlgebra {
  std::vector<HatLabel> hat;
  std::vector<BoundaryLabel> boundary;
  std::vector<std::string> hat_names, boundary_names;
  CMat S_hat;                  // hat x boundary
  int unit = 0;                // hat label of the vacuum with trivial character
  std::vector<Complex> N;      // N[(l*n + m)*n + v], third index raised
  CMat R;                      // reflection coefficients, boundary x hat
  Residuals residuals;

  int size() const { return static_cast<int>(hat.size()); }
  Complex operator()(int l, int m, int v) const {
    return N[(static_cast<std::size_t>(l) * size() + m) * size() + v];
  }
};

std::pair<std::vector<HatLabel>, std::vector<BoundaryLabel>> classifying_labels(
    const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od);

CMat hat_smatrix(const SimpleCurrentGroup& g, const OrbitData& od, SJCache& sj,
                 const std::vector<HatLabel>& hat, const std::vector<BoundaryLabel>& boundary);

// Labels, S-hat, structure constants and reflection coefficients, with the
// algebra axioms and the one-dimensional representation property checked at tol.
ClassifyingAlgebra classifying_algebra(const ModularData& md, const SimpleCurrentGroup& g,
                                       const OrbitData& od, SJCache& sj, double tol = 1e-8);

// Boundary labels grouped by the charges of their sector under G, which
// fixes the automorphism type. The residual measures how far the summed
// idempotents of distinct types are from being orthogonal projections onto
// complementary ideals.
struct IdealDecomposition {
  std::vector<std::vector<Rational>> types;  // charge vector per type
  std::vector<int> type_of;                  // per boundary label
  double residual = 0.0;
};
IdealDecomposition automorphism_type_decomposition(const ClassifyingAlgebra& a,
                                                   const SimpleCurrentGroup& g);

// ---- Z2 orbifolds ----

// S^J of the orbifold theory on the G-fixed sectors (mu,0,0), taken as
// S_{lambda mu} - S_{lambda, sigma mu}.
CMat antisymmetric_fixed_block(const OrbifoldInput& in, const OrbifoldModularData& o);

struct OrbifoldBoundary {
  SimpleCurrentGroup group;  // generated by (Omega,-,0)
  OrbitData orbits;
  ClassifyingAlgebra algebra;
  IdealDecomposition ideals;
};

// Classifying algebra of boundary conditions preserving the orbifold
// subalgebra. fixed_block supplies S^J on the G-fixed sectors when there are any.
OrbifoldBoundary orbifold_boundary(const OrbifoldInput& in, const OrbifoldModularData& o,
                                   const std::optional<CMat>& fixed_block, double tol = 1e-8);

// S-hat written in terms of the base theory, in the label order of the
// classifying algebra: S_{lambda mu} on untwisted boundary labels,
// psi eta_lambda^{-1} S^(0) on twisted ones for fixed lambda and 0 otherwise.
CMat z2_table_smatrix(const OrbifoldInput& in, const OrbifoldModularData& o,
                      const OrbifoldBoundary& b);

// Largest entrywise difference after the best relabeling psi <-> -psi on the
// paired labels (lambda vs sigma lambda); throws E_INVARIANT if no relabeling
// gives agreement at tol.
double match_up_to_relabeling(const CMat& computed, const CMat& table, const OrbifoldModularData& o,
                              const OrbifoldBoundary& b, double tol = 1e-8);

}  // namespace wzw
