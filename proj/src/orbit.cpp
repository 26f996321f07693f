#include "wzw/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace wzw {

const char* folding_name(FoldingKind k) {
  switch (k) {
    case FoldingKind::Identity: return "identity";
    case FoldingKind::Rotation: return "rotation";
    case FoldingKind::Flip: return "flip";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> orbits_of(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> o;
    for (int j = static_cast<int>(i); !seen[j]; j = perm[j]) {
      seen[j] = true;
      o.push_back(j);
    }
    std::sort(o.begin(), o.end());
    out.push_back(o);
  }
  return out;
}

bool is_rotation(const DiagramAutomorphism& a) {
  const int n = static_cast<int>(a.perm.size());
  for (int i = 0; i < n; ++i)
    if (a.perm[i] != (i + a.perm[0]) % n) return false;
  return true;
}

}  // namespace

IMat fold_cartan(const IMat& a, const DiagramAutomorphism& w) {
  const auto orbits = orbits_of(w.perm);
  const int m = static_cast<int>(orbits.size());
  std::vector<std::int64_t> s(m, 1);
  for (int J = 0; J < m; ++J)
    for (int j : orbits[J])
      if (j != orbits[J][0]) s[J] -= a(orbits[J][0], j);
  // Column J collects the whole orbit of J, scaled by s_J.
  IMat f(m, m);
  for (int I = 0; I < m; ++I)
    for (int J = 0; J < m; ++J) {
      std::int64_t sum = 0;
      for (int j : orbits[J]) sum += a(orbits[I][0], j);
      f(I, J) = s[J] * sum;
    }
  return f;
}

OrbitAlgebraDescriptor orbit_algebra(const SimpleLieAlgebra& alg, std::int64_t k,
                                     const DiagramAutomorphism& a) {
  if (!a.affine || static_cast<int>(a.perm.size()) != alg.rank + 1)
    throw Error(ErrorCode::InvalidInput, "expected an automorphism of the affine diagram");
  const IMat ac = affine_cartan(alg);
  if (!preserves(ac, a.perm))
    throw Error(ErrorCode::InvalidInput, "permutation is not a diagram automorphism");

  OrbitAlgebraDescriptor d;
  d.automorphism = a;
  if (a.is_identity()) {
    d.kind = FoldingKind::Identity;
  } else if (alg.series == 'A' && is_rotation(a)) {
    d.kind = FoldingKind::Rotation;
  } else if (a.order == 2 && (alg.series == 'A' || alg.series == 'D' ||
                              (alg.series == 'E' && alg.rank == 6))) {
    d.kind = FoldingKind::Flip;
  } else {
    throw Error(ErrorCode::NotImplemented,
                "folding of affine " + alg.name() + " by an automorphism of order " +
                    std::to_string(a.order) + " is not supported");
  }

  d.node_orbits = orbits_of(a.perm);
  d.node_to_orbit.assign(a.perm.size(), 0);
  for (std::size_t I = 0; I < d.node_orbits.size(); ++I)
    for (int i : d.node_orbits[I]) d.node_to_orbit[i] = static_cast<int>(I);
  for (const auto& o : d.node_orbits) {
    std::int64_t s = 1;
    for (int j : o)
      if (j != o[0]) s -= ac(o[0], j);
    d.s.push_back(s);
  }
  d.folded_cartan = fold_cartan(ac, a);

  const auto weights = integrable_weights(alg, k);
  for (std::size_t l = 0; l < weights.size(); ++l) {
    const IVec lab = affine_labels(alg, k, weights[l]);
    bool fixed = true;
    for (Eigen::Index i = 0; i < lab.size() && fixed; ++i) fixed = lab(a.perm[i]) == lab(i);
    if (!fixed) continue;
    d.fixed_points.push_back(static_cast<int>(l));
    IVec o(d.node_orbits.size());
    for (std::size_t I = 0; I < d.node_orbits.size(); ++I) o(I) = lab(d.node_orbits[I][0]);
    d.orbit_labels.push_back(o);
  }

  if (d.kind == FoldingKind::Identity) {
    d.untwisted = true;
    d.orbit_rank = alg.rank;
    d.orbit_level = k;
  } else if (d.kind == FoldingKind::Rotation) {
    const int n1 = alg.rank + 1;
    const int N = a.order;
    d.untwisted = true;
    d.orbit_rank = n1 / N - 1;
    d.orbit_level = k % N == 0 ? k / N : -1;
  }
  return d;
}

DiagramAutomorphism current_automorphism(const SimpleLieAlgebra& alg, std::int64_t k,
                                         const ModularData& md, int current) {
  const auto ca = center_automorphisms(alg);
  const IVec& w = md.weights.at(current);
  for (std::size_t t = 0; t < ca.nodes.size(); ++t) {
    IVec e = IVec::Zero(alg.rank);
    if (ca.nodes[t] > 0) e(ca.nodes[t] - 1) = k;
    if (e == w) return ca.maps[t];
  }
  throw Error(ErrorCode::NotImplemented,
              "label " + md.labels[current] + " is not a center simple current of " + alg.name());
}

SJMatrix phase_fixed(const CMat& orbit_s, const ModularData& md, int current,
                     const std::vector<int>& fixed_points) {
  SJMatrix r;
  r.current = current;
  r.fixed_points = fixed_points;
  const int f = static_cast<int>(fixed_points.size());
  if (f == 0) {
    r.S = CMat(0, 0);
    r.convention = "empty";
    return r;
  }
  CVec t(f);
  const CVec T = md.T();
  for (int i = 0; i < f; ++i) t(i) = T(fixed_points[i]);
  const CMat ST = orbit_s * t.asDiagonal();
  const CMat cube = ST * ST * ST;
  const CMat sq = orbit_s * orbit_s;
  Eigen::Index bi, bj;
  cube.cwiseAbs().maxCoeff(&bi, &bj);
  Complex x = sq(bi, bj) / cube(bi, bj);
  x /= std::abs(x);
  const CMat SJT = x * orbit_s * t.asDiagonal();
  r.sl2z = max_abs(SJT * SJT * SJT - x * x * sq);
  if (r.sl2z > 1e-8)
    throw Error(ErrorCode::PhaseFixFailure,
                "no global phase makes (S^J T)^3 = (S^J)^2 for current " + md.labels[current],
                r.sl2z);
  r.convention = "sl2z-cubic";
  // The cubic rule gives (S^J)^4 = exp(2 pi i Delta_J); rescale so that (S^J)^4 = 1.
  const Rational spin = frac(md.delta[current]);
  r.spin = spin;
  if (spin != Rational(0)) {
    r.spin_phase = root_of_unity(-spin / Rational(4));
    x *= r.spin_phase;
    r.convention = "sl2z-cubic-spin-normalized";
  }
  r.phase = x;
  r.S = x * orbit_s;
  r.unitarity = max_abs(r.S * r.S.adjoint() - CMat::Identity(f, f));
  return r;
}

SJMatrix sj_matrix(const SimpleLieAlgebra& alg, std::int64_t k, const ModularData& md, int current,
                   std::size_t weyl_cap) {
  if (current == md.vacuum) {
    SJMatrix r;
    r.current = current;
    r.fixed_points.resize(md.size());
    std::iota(r.fixed_points.begin(), r.fixed_points.end(), 0);
    r.S = md.S;
    r.convention = "identity";
    r.unitarity = max_abs(md.S * md.S.adjoint() - CMat::Identity(md.size(), md.size()));
    return r;
  }
  const auto a = current_automorphism(alg, k, md, current);
  const auto d = orbit_algebra(alg, k, a);
  if (!d.untwisted)
    throw Error(ErrorCode::NotImplemented,
                "S matrix of the twisted orbit algebra for " + alg.name() + " current " +
                    md.labels[current]);
  const int f = static_cast<int>(d.fixed_points.size());
  CMat orbit_s(f, f);
  if (f > 0) {
    if (d.orbit_rank == 0) {
      orbit_s = CMat::Ones(1, 1);
    } else {
      const auto oalg = build_algebra('A', d.orbit_rank);
      const auto omd = kac_peterson(oalg, d.orbit_level, weyl_cap);
      std::map<std::vector<std::int64_t>, int> index;
      for (int i = 0; i < omd.size(); ++i)
        index[{omd.weights[i].data(), omd.weights[i].data() + omd.weights[i].size()}] = i;
      std::vector<int> pos(f);
      for (int i = 0; i < f; ++i) {
        const IVec& o = d.orbit_labels[i];
        pos[i] = index.at({o.data() + 1, o.data() + o.size()});
      }
      for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) orbit_s(i, j) = omd.S(pos[i], pos[j]);
    }
  }
  return phase_fixed(orbit_s, md, current, d.fixed_points);
}

SJMatrix tensor_sj(const std::vector<const SJMatrix*>& factors, const std::vector<int>& sizes,
                   int current) {
  SJMatrix r;
  r.current = current;
  r.S = CMat::Ones(1, 1);
  r.fixed_points = {0};
  r.convention = "tensor";
  for (std::size_t f = 0; f < factors.size(); ++f) {
    const SJMatrix& s = *factors[f];
    const int fs = static_cast<int>(s.fixed_points.size());
    CMat K(r.S.rows() * fs, r.S.cols() * fs);
    for (Eigen::Index i = 0; i < r.S.rows(); ++i)
      for (Eigen::Index j = 0; j < r.S.cols(); ++j)
        K.block(i * fs, j * fs, fs, fs) = r.S(i, j) * s.S;
    r.S = K;
    std::vector<int> fp;
    for (int p : r.fixed_points)
      for (int q : s.fixed_points) fp.push_back(p * sizes[f] + q);
    r.fixed_points = fp;
    r.phase *= s.phase / s.spin_phase;
    r.spin += s.spin;
    r.sl2z += s.sl2z;
  }
  // Undo the per-factor spin normalization and normalize by the total spin.
  Complex undo = 1.0;
  for (const auto* f : factors) undo /= f->spin_phase;
  r.spin = frac(r.spin);
  if (r.spin != Rational(0)) r.spin_phase = root_of_unity(-r.spin / Rational(4));
  r.S *= undo * r.spin_phase;
  r.phase *= r.spin_phase;
  const int n = static_cast<int>(r.fixed_points.size());
  r.unitarity = max_abs(r.S * r.S.adjoint() - CMat::Identity(n, n));
  return r;
}

}  // namespace wzw
