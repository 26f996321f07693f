#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wzw/liealg.hpp"

namespace wzw {

// Modular data of a rational theory. T is carried exactly through the
// conformal weights: T_mu = exp(2 pi i (delta_mu - c/24)).
struct ModularData {
  std::string name;
  std::vector<std::string> labels;
  std::vector<IVec> weights;  // Dynkin labels when the theory is a WZW model (tensor: concatenated)
  int vacuum = 0;
  CMat S;
  std::vector<Rational> delta;
  Rational c{0};

  int size() const { return static_cast<int>(labels.size()); }
  Rational t_exponent(int mu) const { return frac(delta[mu] - c / Rational(24)); }
  CVec T() const;
  int index_of(const std::string& label) const;  // -1 when absent
};

std::vector<IVec> integrable_weights(const SimpleLieAlgebra& alg, std::int64_t k);
Rational conformal_weight(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda);
Rational central_charge(const SimpleLieAlgebra& alg, std::int64_t k);
std::string weight_label(const IVec& lambda);

ModularData kac_peterson(const SimpleLieAlgebra& alg, std::int64_t k,
                         std::size_t weyl_cap = kDefaultWeylCap);

// Named residuals of an invariant check, in a fixed order.
using Residuals = std::vector<std::pair<std::string, double>>;

// Unitarity, symmetry, S^4 = 1, (ST)^3 = S^2, S^2 a permutation, positive vacuum row.
Residuals modular_residuals(const ModularData& md);
// Throws InvariantFailure naming the worst relation if any residual exceeds tol.
void require(const Residuals& r, double tol, const std::string& what);

// Charge conjugation read off from S^2.
std::vector<int> conjugation(const ModularData& md);

// Affine Dynkin labels (lambda_0, lambda_1, ..., lambda_r).
IVec affine_labels(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda);
// Label permutation induced by an affine diagram automorphism: (a lambda)_{perm[i]} = lambda_i.
std::vector<int> label_action(const SimpleLieAlgebra& alg, std::int64_t k,
                              const std::vector<IVec>& weights, const DiagramAutomorphism& a);

}  // namespace wzw
