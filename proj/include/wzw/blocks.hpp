#pragma once

#include <string>
#include <vector>

#include "wzw/loopalg.hpp"
#include "wzw/laurent.hpp"
#include "wzw/simplecurrent.hpp"

namespace wzw {

// Dimension of the space of chiral blocks on a genus-g surface with
// insertions mu (label indices).
std::int64_t block_rank(const ModularData& md, int genus, const std::vector<int>& mu);
// Unrounded Verlinde sum behind block_rank.
Complex block_rank_sum(const ModularData& md, int genus, const std::vector<int>& mu);

// m-tuples of current positions (in G) with trivial product, lexicographic.
using CurrentTuple = std::vector<int>;
std::vector<CurrentTuple> gamma_out(const SimpleCurrentGroup& g, int m);
// Componentwise product table on a list of tuples closed under it.
AbelianGroup tuple_group(const SimpleCurrentGroup& g, const std::vector<CurrentTuple>& tuples);

// Tuples in Gamma_out stabilizing every insertion and pairing trivially
// with all such tuples under the product cocycle.
std::vector<CurrentTuple> central_tuples(const SimpleCurrentGroup& g, const OrbitData& od,
                                         const std::vector<int>& mu);

// sum_nu |S_{0 nu}|^{2-2g} prod_s S^{J_s}_{mu_s nu} / S_{0 nu}, S^J zero off its fixed points.
// Throws E_PRECONDITION if the tuple is not in the central subgroup.
Complex conjecture1_trace(const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od,
                          SJCache& sj, int genus, const std::vector<int>& mu,
                          const CurrentTuple& tuple);

struct TraceReport {
  std::vector<int> mu;
  int genus = 0;
  std::int64_t rank = 0;
  std::vector<CurrentTuple> tuples;           // the central subgroup
  std::vector<Complex> traces;
  std::vector<std::vector<Rational>> characters;  // of the central subgroup
  std::vector<Complex> raw_dims;
  std::vector<std::int64_t> dims;
  bool traces_integral = true;
  bool dims_integral = true;
  bool dims_nonnegative = true;
  bool dims_sum_to_rank = true;
  bool holds() const { return dims_integral && dims_nonnegative && dims_sum_to_rank; }
};

// dim_psi = |U|^{-1} sum_t conj(psi(t)) trace(t).
std::vector<Complex> fourier_eigendims(const AbelianGroup& u,
                                       const std::vector<std::vector<Rational>>& characters,
                                       const std::vector<Complex>& traces);

TraceReport trace_report(const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od,
                         SJCache& sj, int genus, const std::vector<int>& mu, double tol = 1e-6);

// Genus-1 trace with a handle twisted by J: sum over J-fixed nu of
// prod_s S^{J_s}_{mu_s nu} / S_{0 nu}.
Complex handle_trace(const ModularData& md, const SimpleCurrentGroup& g, SJCache& sj,
                     const std::vector<int>& mu, const CurrentTuple& tuple, int handle_current);

// Cutting the handle: sum_kappa of the genus-0 trace with the extra pair
// (kappa, kappa^+) carrying (J, J^{-1}) equals eta_J times the handle trace,
// where sum_kappa S^J_{kappa nu} S^{J^{-1}}_{kappa^+ nu'} = eta_J delta_{nu nu'}.
struct FactorizationCheck {
  Complex cut, handle, eta;
  double eta_residual = 0.0;  // distance of the kappa-sum matrix from eta_J * 1
  double residual = 0.0;      // |cut - eta_J handle|
};
FactorizationCheck factorization_check(const ModularData& md, const SimpleCurrentGroup& g,
                                       SJCache& sj, const std::vector<int>& mu,
                                       const CurrentTuple& tuple, int handle_position);

struct SweepRow {
  std::string algebra;
  std::int64_t level = 0;
  TraceReport report;
};
struct SweepStats {
  std::size_t insertions = 0, traces = 0, integral_traces = 0, violations = 0;
};
// All sorted insertion tuples of length m; rows only for nontrivial central subgroups.
std::vector<SweepRow> sweep(const std::string& algebra, std::int64_t level, const ModularData& md,
                            const SimpleCurrentGroup& g, const OrbitData& od, SJCache& sj,
                            int genus, int m, SweepStats& stats);
std::string sweep_csv(const std::vector<SweepRow>& rows, const ModularData& md);

// ---- multi-shift automorphisms ----

struct MultishiftReport {
  std::size_t pairs_checked = 0;
  BigRational max_residual = 0;
  bool exact_zero() const { return max_residual == 0; }
};

// Checks sigma([X, Y]) = [sigma X, sigma Y] on the loop algebra with insertion
// points z and coweights nu (fundamental-weight coordinates, summing to zero)
// for X, Y in {H_i (x) t^n, E_beta (x) t^n, K}, |n| <= truncation.
MultishiftReport multishift_validate(const SimplyLacedAlgebra& g, const std::vector<IVec>& nu,
                                     const std::vector<BigRational>& z, int truncation = 4);

}  // namespace wzw
