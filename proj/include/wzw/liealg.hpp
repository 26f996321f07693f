#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wzw/core.hpp"

namespace wzw {

// Finite-dimensional simple Lie algebra in the Kac convention
// cartan(i,j) = <alpha_i^vee, alpha_j>. Weights are stored by Dynkin labels,
// roots by simple-root coordinates.
struct SimpleLieAlgebra {
  char series = 'A';
  int rank = 0;
  IMat cartan;
  std::vector<std::int64_t> symmetrizer;  // d_i A_ij = d_j A_ji, coprime
  Mat<Rational> metric;                   // (omega_i, omega_j), long roots of length^2 2
  Mat<Rational> root_metric;              // (alpha_i, alpha_j)
  std::int64_t dual_coxeter = 0;
  std::int64_t coxeter = 0;
  std::int64_t dimension = 0;
  IVec weyl_vector;                       // Dynkin labels of rho
  std::vector<IVec> positive_roots;       // lexicographic on simple-root coordinates
  IVec highest_root;                      // simple-root coordinates = marks a_i
  IVec comarks;                           // a_i^vee

  std::string name() const { return std::string(1, series) + std::to_string(rank); }
};

SimpleLieAlgebra build_algebra(char series, int rank);
// Parses "X<rank>", e.g. "B3".
SimpleLieAlgebra parse_algebra(const std::string& spec);

IVec root_to_weight(const SimpleLieAlgebra& alg, const IVec& root);
Rational weight_product(const SimpleLieAlgebra& alg, const IVec& a, const IVec& b);
// (lambda, theta^vee), the level a weight needs to be integrable.
std::int64_t level_of(const SimpleLieAlgebra& alg, const IVec& lambda);

// ---- Weyl group ----

struct WeylElement {
  std::vector<int> word;  // reduced word, s_{word[0]} applied last
  int sign = 1;
  IMat action;            // acts on Dynkin-label column vectors
};

inline constexpr std::size_t kDefaultWeylCap = 200000;

// Breadth-first over reduced words; every element visited once.
// Throws CapExceeded once more than `cap` elements have been seen.
void weyl_traverse(const SimpleLieAlgebra& alg, std::size_t cap,
                   const std::function<void(const WeylElement&)>& visit);
std::vector<WeylElement> weyl_group(const SimpleLieAlgebra& alg,
                                    std::size_t cap = kDefaultWeylCap);
// Number of full traversals performed in this process (cache instrumentation).
std::size_t weyl_traversal_count();

// ---- lattices ----

struct SmithForm {
  IMat U, D, V;  // U * A * V = D, U and V unimodular
};
SmithForm smith_normal_form(const IMat& a);
std::int64_t determinant(const IMat& a);

// L_w^vee / L^vee as a product of cyclic groups.
struct CenterGroup {
  std::vector<std::int64_t> factors;     // invariant factors > 1
  std::vector<IVec> generators;          // coweight coordinates, one per factor
  std::int64_t order() const;
};
CenterGroup center_group(const SimpleLieAlgebra& alg);

// ---- diagram symmetries ----

struct DiagramAutomorphism {
  std::vector<int> perm;  // node i -> perm[i]; node 0 is the affine node when affine
  bool affine = false;
  int order = 1;
  bool is_identity() const;
  DiagramAutomorphism compose(const DiagramAutomorphism& other) const;  // this after other
  DiagramAutomorphism power(int n) const;
  DiagramAutomorphism compose_raw(const DiagramAutomorphism& other) const;  // order left at 1
};

IMat affine_cartan(const SimpleLieAlgebra& alg);
std::vector<DiagramAutomorphism> diagram_automorphisms(const SimpleLieAlgebra& alg,
                                                       bool affine);
bool preserves(const IMat& cartan, const std::vector<int>& perm);

// Longest element of the parabolic subgroup generated by all simple
// reflections except `skip` (pass -1 for the full w_0), as a Dynkin-label action.
IMat longest_element(const SimpleLieAlgebra& alg, int skip = -1);

// Affine diagram automorphisms coming from the center: one per node j with
// mark 1 (node 0 gives the identity). Entry j of the result belongs to
// affine node nodes[j].
struct CenterAutomorphisms {
  std::vector<int> nodes;
  std::vector<DiagramAutomorphism> maps;
};
CenterAutomorphisms center_automorphisms(const SimpleLieAlgebra& alg);

}  // namespace wzw
