#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wzw/affine.hpp"
#include "wzw/fusion.hpp"

namespace wzw {

// Data of a Z2 orbifold by sigma = sigma_0 o exp(2 pi i ad H_s).
struct OrbifoldInput {
  ModularData base;
  std::vector<int> sigma;                   // induced label permutation, an involution
  std::vector<int> fixed_points;            // labels with sigma(mu) = mu
  std::vector<Rational> eta;                // per fixed point: eta_mu = exp(2 pi i eta[i])
  std::vector<std::string> twisted_labels;  // one per fixed point
  CMat S0;                                  // fixed x twisted
  std::vector<Rational> t0;                 // T^(0) exponents per fixed point
  std::vector<Rational> t1;                 // T^(1) exponents per twisted label
  bool inner = true;
  bool exceptional_a2n = false;             // charge conjugation of A_2n

  int fixed_position(int label) const;      // -1 if not fixed
};

// s in coweight coordinates, s = sum_i s_i omega_i^vee. Requires 2(s, alpha)
// integral on all roots and sigma of order two: either some (s, alpha) is a
// half-integer or eta is not constant on the labels.
OrbifoldInput inner_orbifold_input(const SimpleLieAlgebra& alg, std::int64_t k,
                                   const std::vector<Rational>& s,
                                   std::size_t weyl_cap = kDefaultWeylCap);

struct OuterOrbifoldLabels {
  std::vector<int> sigma;
  std::vector<int> fixed_points;
  bool exceptional_a2n = false;
};
// sigma_0 as an order-2 permutation of the finite Dynkin nodes.
OuterOrbifoldLabels outer_orbifold_labels(const SimpleLieAlgebra& alg, const ModularData& md,
                                          const std::vector<int>& node_perm);

// Twisted-sector data of an outer orbifold. These come from the twisted
// orbit algebra, which is not computed here.
struct TwistedSectorData {
  CMat S0;
  std::vector<Rational> t0, t1;
  std::vector<std::string> labels;
};

// Throws E_NOT_IMPLEMENTED unless the twisted-sector data is supplied.
OrbifoldInput outer_orbifold_input(const SimpleLieAlgebra& alg, std::int64_t k,
                                   const std::vector<int>& node_perm, const std::vector<Rational>& s,
                                   const std::optional<TwistedSectorData>& twisted = std::nullopt,
                                   std::size_t weyl_cap = kDefaultWeylCap);

// Swap orbifold of the tensor square of a theory: fixed points (l, l),
// twisted labels l^ with S^(0)_{(l,l), m^} = S_{lm}, T^(0) = T and
// T^(1) = T, so the twisted sectors carry T^{1/2}.
OrbifoldInput permutation_orbifold_input(const ModularData& md);

enum class OrbifoldKind { Orbit, Untwisted, Twisted };

struct OrbifoldLabel {
  OrbifoldKind kind;
  int index;  // base label, or position among the twisted labels
  int psi;    // +1 / -1, 0 for length-2 orbits
};

struct OrbifoldModularData {
  ModularData md;
  std::vector<OrbifoldLabel> kinds;
  CMat P;
  std::vector<Rational> half_t1;  // exponent of (T^(1))^{1/2} per twisted label
  bool flipped_branch = false;
  Residuals residuals;
  double s0_square_signed_permutation = 0.0;
  double p_square_vs_s0_square = 0.0;
};

// Assembles S^O, T^O and P and checks them. flip_branch takes the other
// square root of T^(1) throughout.
OrbifoldModularData assemble_orbifold(const OrbifoldInput& in, bool flip_branch = false,
                                      double tol = 1e-8);

// Label of the Z2 current dual to the orbifold group, (Omega, -1, 0).
int dual_current(const OrbifoldModularData& o);
// Number of labels of the extension of the orbifold by its dual current.
int dual_extension_label_count(const OrbifoldModularData& o);

// Forward reads S^(0) as stored (fixed row, twisted column); Transposed
// swaps the two roles and needs the canonical fixed <-> twisted bijection.
enum class Orientation { Forward, Transposed };
const char* orientation_name(Orientation o);

struct Conjecture2Report {
  std::vector<int> mu;
  std::int64_t rank = 0;
  Complex trace;
  Complex dim_plus, dim_minus;
  bool integral = true;
  Orientation orientation = Orientation::Forward;
};
Conjecture2Report conjecture2_trace(const OrbifoldInput& in, const std::vector<int>& mu,
                                    Orientation o, double tol = 1e-6);

}  // namespace wzw
