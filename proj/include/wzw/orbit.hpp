#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wzw/affine.hpp"

namespace wzw {

enum class FoldingKind { Identity, Rotation, Flip };
const char* folding_name(FoldingKind k);

// Orbit Lie algebra of an affine diagram automorphism together with the
// fixed-point label map at level k.
struct OrbitAlgebraDescriptor {
  DiagramAutomorphism automorphism;
  FoldingKind kind = FoldingKind::Identity;
  std::vector<std::vector<int>> node_orbits;  // ordered by smallest member
  std::vector<int> node_to_orbit;
  std::vector<std::int64_t> s;                // s_I = 1 - sum_{l>0} A_{i, w^l i}
  IMat folded_cartan;
  std::vector<int> fixed_points;              // label indices of the original theory
  std::vector<IVec> orbit_labels;             // orbit-algebra affine labels per fixed point
  // Rotations of A_n fold to untwisted A_{M-1} at level k/N; M = 1 is the
  // one-label trivial algebra.
  bool untwisted = false;
  int orbit_rank = 0;                         // M - 1
  std::int64_t orbit_level = 0;
};

// Generalized Cartan matrix of the orbit algebra (same convention as the
// input): A'_IJ = s_J sum_{j in J} A_{i,j} for any i in I.
IMat fold_cartan(const IMat& a, const DiagramAutomorphism& w);

OrbitAlgebraDescriptor orbit_algebra(const SimpleLieAlgebra& alg, std::int64_t k,
                                     const DiagramAutomorphism& a);

// Affine automorphism attached to the simple current with the given label,
// i.e. the weight k omega_j for a node of mark 1.
DiagramAutomorphism current_automorphism(const SimpleLieAlgebra& alg, std::int64_t k,
                                         const ModularData& md, int current);

struct SJMatrix {
  int current = 0;
  std::vector<int> fixed_points;
  CMat S;
  Complex phase{1.0, 0.0};
  Rational spin{0};               // fractional part of Delta_J
  Complex spin_phase{1.0, 0.0};   // exp(-2 pi i spin / 4), included in phase
  std::string convention;
  double unitarity = 0.0;
  double sl2z = 0.0;  // |(S^J T)^3 - (S^J)^2| before the spin rescaling
};

// S^J from the orbit-algebra Kac-Peterson matrix, global phase fixed by
// (S^J T)^3 = (S^J)^2 on the fixed points and then rescaled by spin_phase so
// that (S^J)^4 = 1 also for currents of fractional weight.
SJMatrix sj_matrix(const SimpleLieAlgebra& alg, std::int64_t k, const ModularData& md, int current,
                   std::size_t weyl_cap = kDefaultWeylCap);
// Same phase rule for an externally supplied orbit matrix.
SJMatrix phase_fixed(const CMat& orbit_s, const ModularData& md, int current,
                     const std::vector<int>& fixed_points);

// S^J of a tensor theory: Kronecker product of factor S^J matrices. The
// current is a label of the product theory.
SJMatrix tensor_sj(const std::vector<const SJMatrix*>& factors, const std::vector<int>& sizes,
                   int current);

}  // namespace wzw
