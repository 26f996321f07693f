#pragma once

#include <vector>

#include "wzw/affine.hpp"
#include "wzw/group.hpp"

namespace wzw {

struct FusionRing {
  int n = 0;
  int vacuum = 0;
  std::vector<std::int64_t> N;  // N[(l*n + m)*n + v] = N_{lm}^v
  std::vector<int> conj;

  std::int64_t operator()(int l, int m, int v) const {
    return N[(static_cast<std::size_t>(l) * n + m) * n + v];
  }
  std::int64_t& at(int l, int m, int v) { return N[(static_cast<std::size_t>(l) * n + m) * n + v]; }
};

// Verlinde formula with hard integrality check at tol.
FusionRing verlinde(const ModularData& md, double tol = 1e-6);

// Number of violated ring axioms per axiom, zero for a valid ring.
struct RingViolations {
  int unit = 0, commutativity = 0, associativity = 0, conjugation = 0, negativity = 0;
  int total() const { return unit + commutativity + associativity + conjugation + negativity; }
};
RingViolations ring_violations(const FusionRing& r);

struct SimpleCurrentGroup {
  std::vector<int> currents;              // label indices, vacuum first
  AbelianGroup group;                     // on positions in `currents`
  std::vector<std::vector<int>> action;   // action[j][mu] = label of J_j * mu
  std::vector<std::vector<Rational>> charge;  // Q_J(mu) in [0,1)

  int size() const { return static_cast<int>(currents.size()); }
  int position(int label) const;  // -1 if not a current
};

SimpleCurrentGroup simple_currents(const ModularData& md, const FusionRing& ring, double tol = 1e-9);

// Subgroup of G generated by the given currents (label indices).
SimpleCurrentGroup subgroup(const SimpleCurrentGroup& g, const std::vector<int>& generators);

// Bijection p with a.S(i,j) = b.S(p[i],p[j]) and equal T, fixing the vacuum;
// empty when none exists at tol.
std::vector<int> label_bijection(const ModularData& a, const ModularData& b, double tol = 1e-8);

ModularData tensor_product(const ModularData& a, const ModularData& b);

}  // namespace wzw
