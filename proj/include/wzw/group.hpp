#pragma once

#include <vector>

#include "wzw/core.hpp"

namespace wzw {

// Finite abelian group given by its multiplication table on indices 0..n-1.
struct AbelianGroup {
  IMat table;
  int identity = 0;

  int size() const { return static_cast<int>(table.rows()); }
  int mul(int a, int b) const { return static_cast<int>(table(a, b)); }
  int inverse(int a) const;
  int order(int a) const;
  int exponent() const;
  // Characters as exponents q with chi(a) = exp(2 pi i q); row c, column a.
  // Enumerated lexicographically in the values on a greedy generating set.
  std::vector<std::vector<Rational>> characters() const;
};

AbelianGroup cyclic_product(const std::vector<std::int64_t>& factors);
AbelianGroup direct_power(const AbelianGroup& g, int m);

// Invariant factors d_1 | d_2 | ..., trivial group gives an empty list.
std::vector<std::int64_t> invariant_factors(const AbelianGroup& g);
bool isomorphic(const AbelianGroup& a, const AbelianGroup& b);

}  // namespace wzw
