#pragma once

#include <functional>
#include <map>
#include <vector>

#include "wzw/fusion.hpp"
#include "wzw/orbit.hpp"

namespace wzw {

// Supplies S^J for a simple current given by its label index.
using SJProvider = std::function<SJMatrix(int current)>;

// S^J for a WZW theory built by kac_peterson.
SJProvider wzw_sj_provider(const SimpleLieAlgebra& alg, std::int64_t k, const ModularData& md);

// WZW theory of g_1 + ... + g_n at a common level k, labels in mixed radix
// (last factor fastest).
struct WzwTheory {
  std::vector<SimpleLieAlgebra> algebras;
  std::int64_t level = 0;
  std::vector<ModularData> factors;
  ModularData md;
  // S^J as the tensor product of the factor S^J matrices.
  SJProvider sj_provider() const;
};
// Parses "A1" or "A1xA1xB2".
std::vector<SimpleLieAlgebra> parse_algebras(const std::string& spec);
WzwTheory wzw_theory(const std::vector<SimpleLieAlgebra>& algebras, std::int64_t k,
                     std::size_t weyl_cap = kDefaultWeylCap);

struct OrbitData {
  std::vector<int> orbit_of;                 // label -> orbit id
  std::vector<std::vector<int>> orbits;      // sorted label indices
  std::vector<std::vector<int>> stabilizer;  // per label, positions in G
  std::vector<CMat> cocycle;                 // per label, F(J,J') on stabilizer positions
  std::vector<std::vector<int>> central;     // per label, U_mu as positions in G
  std::vector<int> d;                        // sqrt(|S_mu| / |U_mu|), 0 if not a square
  // False where F is not a commutator cocycle (half-integer spin currents).
  std::vector<bool> alternating;

  int length(int mu) const { return static_cast<int>(orbits[orbit_of[mu]].size()); }
};

// Cached S^J matrices keyed by current label.
class SJCache {
 public:
  explicit SJCache(SJProvider p) : provider_(std::move(p)) {}
  const SJMatrix& get(int current);
  // Entry S^J_{lambda mu}; zero when either label is not J-fixed.
  Complex entry(int current, int lambda, int mu);

 private:
  SJProvider provider_;
  std::map<int, SJMatrix> cache_;
  std::map<int, std::vector<int>> pos_;
};

// Subgroup of G on the given positions, as a group of its own.
AbelianGroup restricted_group(const SimpleCurrentGroup& g, const std::vector<int>& positions);

OrbitData orbit_data(const ModularData& md, const SimpleCurrentGroup& g, SJCache& sj);

struct ExtendedModularData {
  ModularData md;
  std::vector<int> representative;          // label of the orbit representative
  std::vector<std::vector<Rational>> psi;   // character of U on the representative, per class
  std::vector<int> d;
  Residuals residuals;
};

// Classes [mu, psi]: one per surviving orbit representative and character of U_mu.
struct ExtendedLabel {
  int rep;
  std::vector<Rational> psi;  // exponents indexed like OrbitData::central[rep]
};
std::vector<ExtendedLabel> extended_labels(const ModularData& md, const SimpleCurrentGroup& g,
                                           const OrbitData& od);

ExtendedModularData extended_smatrix(const ModularData& md, const SimpleCurrentGroup& g,
                                     const OrbitData& od, SJCache& sj, double tol = 1e-8);

IMat z_matrix(const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od);
Residuals z_residuals(const ModularData& md, const IMat& z);

// Rejects groups whose currents do not have integer conformal weight.
void require_integer_spin(const ModularData& md, const SimpleCurrentGroup& g);

}  // namespace wzw
