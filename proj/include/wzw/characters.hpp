#pragma once

#include <functional>
#include <vector>

#include "wzw/affine.hpp"

namespace wzw {

enum class Grading { Homogeneous, Principal };

// Truncated q-series q^leading * sum_n coeff[n] q^n, grades 0..N.
struct QSeries {
  Rational leading{0};
  Grading grading = Grading::Homogeneous;
  std::vector<Complex> coeff;

  int truncation() const { return static_cast<int>(coeff.size()) - 1; }
  // Exact integer coefficients; throws E_INTEGRALITY if any is not integral.
  std::vector<std::int64_t> integers() const;
  Complex evaluate(Complex q) const;
};

// Exact power series helpers on grades 0..N.
using IntSeries = std::vector<std::int64_t>;
// prod over (grade, multiplicity) of (1 - q^grade)^(-multiplicity), truncated.
IntSeries pbw_product(const std::vector<std::pair<int, std::int64_t>>& generators, int N);

// Character of the affine Verma module of highest weight lambda (finite
// Dynkin labels) at level k: PBW count over the positive affine roots
// enumerated grade by grade. Homogeneous grading counts the loop modes
// t^{-n}, n >= 1; principal grading counts every negative root vector by height.
QSeries verma_character(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda, int N,
                        Grading grading = Grading::Homogeneous);

// Trace of the diagram automorphism w on the principally graded Verma module
// with highest weight lambda (affine labels, must be w-invariant). Uses the
// loop-algebra engine; simply-laced algebras only.
QSeries twining_verma_character(const SimpleLieAlgebra& alg, const IVec& affine_lambda,
                                const DiagramAutomorphism& w, int N);

// Verma character of the Kac-Moody algebra with generalized Cartan matrix
// `gcm` and simple-root grades `grades`, from the Weyl-Kac denominator: the
// reciprocal of sum_w eps(w) q^{grade(rho - w rho)}. A 1x1 matrix stands for
// the trivial orbit algebra (character 1).
QSeries kac_moody_verma_character(const IMat& gcm, const std::vector<int>& grades, int N);

// Orbit-algebra side of the twining identity for the folding w: folded
// Cartan matrix, node I graded by s_I |orbit I|.
QSeries orbit_verma_character(const SimpleLieAlgebra& alg, const DiagramAutomorphism& w, int N);

// Specialized irreducible character of the integrable weight lambda at level
// k, homogeneous grading, from the truncated Weyl-Kac sum over the coroot
// lattice. Leading exponent Delta - c/24.
QSeries irreducible_character(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda,
                              int N);

struct ModularCheck {
  std::vector<double> residuals;  // per label
  double max_residual = 0.0;
  double tail_estimate = 0.0;
};
using CharacterSupplier = std::function<QSeries(int label)>;
// Compares chi_mu(i) with sum_nu S_{mu nu} chi_nu(i).
ModularCheck numeric_modular_check(const ModularData& md, const CharacterSupplier& chars);
CharacterSupplier wzw_characters(const SimpleLieAlgebra& alg, std::int64_t k,
                                 const ModularData& md, int N);

}  // namespace wzw
