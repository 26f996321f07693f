#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wzw/liealg.hpp"

namespace wzw {

// Simply-laced simple Lie algebra in a Cartan-Weyl basis with Frenkel-Kac
// signs: basis 0..r-1 are the simple coroots H_i = alpha_i, then one E_alpha
// per root. [E_a, E_b] = eps(a,b) E_{a+b}, [E_a, E_{-a}] = -a, (E_a, E_{-a}) = -1.
class SimplyLacedAlgebra {
 public:
  explicit SimplyLacedAlgebra(const SimpleLieAlgebra& alg);

  const SimpleLieAlgebra& algebra() const { return alg_; }
  int rank() const { return alg_.rank; }
  int dim() const { return alg_.rank + static_cast<int>(roots_.size()); }
  const std::vector<IVec>& roots() const { return roots_; }
  // Basis index of E_alpha, -1 if alpha is not a root.
  int root_basis(const IVec& alpha) const;
  const IVec& root_of(int basis) const { return roots_[basis - alg_.rank]; }
  bool is_cartan(int basis) const { return basis < alg_.rank; }

  int eps(const IVec& a, const IVec& b) const;
  // Sparse bracket of basis elements.
  std::vector<std::pair<int, Rational>> bracket(int a, int b) const;
  Rational form(int a, int b) const;

 private:
  SimpleLieAlgebra alg_;
  std::vector<IVec> roots_;
  std::map<std::vector<std::int64_t>, int> index_;
};

// Element of the loop algebra g (x) C[t, 1/t] + C K; key (basis, power).
struct LoopElement {
  std::map<std::pair<int, int>, Rational> coeff;
  Rational central{0};

  bool is_zero() const;
  LoopElement& operator+=(const LoopElement& o);
  LoopElement operator*(const Rational& s) const;
};

LoopElement loop_bracket(const SimplyLacedAlgebra& g, const LoopElement& a, const LoopElement& b);

// Chevalley generators F_0..F_r of the untwisted affine algebra:
// F_i = -E_{-alpha_i}, F_0 = -E_theta (x) t^{-1}.
std::vector<LoopElement> affine_lowering_generators(const SimplyLacedAlgebra& g);

// Graded pieces n_-[1..N] (principal grading) together with the matrix of the
// diagram automorphism w (F_i -> F_{w(i)}) on each piece.
struct GradedAction {
  std::vector<int> dims;          // dims[g], g = 0..N (dims[0] = 0)
  std::vector<Mat<Rational>> mats;
};
GradedAction lowering_action(const SimplyLacedAlgebra& g, const DiagramAutomorphism& w, int N);

}  // namespace wzw
