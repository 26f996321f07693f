#include "wzw/orbifold.hpp"

#include <algorithm>
#include <cmath>

#include "wzw/blocks.hpp"

namespace wzw {

int OrbifoldInput::fixed_position(int label) const {
  auto it = std::find(fixed_points.begin(), fixed_points.end(), label);
  return it == fixed_points.end() ? -1 : static_cast<int>(it - fixed_points.begin());
}

namespace {

// 2 / (alpha_i, alpha_i): turns coweight coordinates into weight coordinates.
std::vector<Rational> coweight_scale(const SimpleLieAlgebra& alg) {
  std::vector<Rational> f(alg.rank);
  for (int i = 0; i < alg.rank; ++i) f[i] = Rational(2) / alg.root_metric(i, i);
  return f;
}

// (s, mu) for s in coweight coordinates and mu in Dynkin labels.
Rational pair_weight(const SimpleLieAlgebra& alg, const std::vector<Rational>& s, const IVec& mu) {
  const auto f = coweight_scale(alg);
  Rational r(0);
  for (int i = 0; i < alg.rank; ++i)
    for (int j = 0; j < alg.rank; ++j) r += s[i] * f[i] * alg.metric(i, j) * Rational(mu(j));
  return r;
}

Rational pair_coweights(const SimpleLieAlgebra& alg, const std::vector<Rational>& s) {
  const auto f = coweight_scale(alg);
  Rational r(0);
  for (int i = 0; i < alg.rank; ++i)
    for (int j = 0; j < alg.rank; ++j) r += s[i] * f[i] * s[j] * f[j] * alg.metric(i, j);
  return r;
}

// Reduces q into [0, m).
Rational mod(const Rational& q, std::int64_t m) {
  Rational r = q / Rational(m);
  return (r - Rational(boost::rational_cast<std::int64_t>(r)) -
          (r < Rational(boost::rational_cast<std::int64_t>(r)) ? Rational(1) : Rational(0))) *
         Rational(m);
}

bool is_integer(const Rational& q) { return q.denominator() == 1; }

void check_shift(const SimpleLieAlgebra& alg, const std::vector<Rational>& s) {
  if (static_cast<int>(s.size()) != alg.rank)
    throw Error(ErrorCode::InvalidInput, "shift vector needs " + std::to_string(alg.rank) +
                                             " coweight coordinates");
  for (const auto& root : alg.positive_roots) {
    Rational v(0);
    for (int i = 0; i < alg.rank; ++i) v += s[i] * Rational(root(i));
    if (!is_integer(Rational(2) * v))
      throw Error(ErrorCode::PreconditionFailure,
                  "exp(2 pi i ad H_s) is not of order 2: 2(s, alpha) = " + to_string(Rational(2) * v));
  }
}

std::string sector_name(const std::string& base, int psi, int twist) {
  std::string p = psi > 0 ? "+" : psi < 0 ? "-" : "0";
  return "(" + base + "," + p + "," + std::to_string(twist) + ")";
}

}  // namespace

OrbifoldInput inner_orbifold_input(const SimpleLieAlgebra& alg, std::int64_t k,
                                   const std::vector<Rational>& s, std::size_t weyl_cap) {
  check_shift(alg, s);
  OrbifoldInput in;
  in.base = kac_peterson(alg, k, weyl_cap);
  const int n = in.base.size();
  in.sigma.resize(n);
  for (int i = 0; i < n; ++i) in.sigma[i] = i;
  in.fixed_points = in.sigma;

  bool half_root = false;
  for (const auto& root : alg.positive_roots) {
    Rational v(0);
    for (int i = 0; i < alg.rank; ++i) v += s[i] * Rational(root(i));
    half_root = half_root || !is_integer(v);
  }
  for (int i = 0; i < n; ++i) in.eta.push_back(frac(pair_weight(alg, s, in.base.weights[i])));
  const bool eta_constant =
      std::all_of(in.eta.begin(), in.eta.end(), [&](const Rational& e) { return e == in.eta[0]; });
  if (!half_root && eta_constant)
    throw Error(ErrorCode::PreconditionFailure,
                "shift vector gives the identity automorphism (order 1, not 2)");

  in.S0 = in.base.S;
  const Rational kss = Rational(k) * pair_coweights(alg, s);
  for (int i = 0; i < n; ++i) {
    in.twisted_labels.push_back(in.base.labels[i] + "^");
    const Rational t = in.base.delta[i] - in.base.c / Rational(24);
    in.t0.push_back(t / Rational(2));
    in.t1.push_back(kss + Rational(2) * pair_weight(alg, s, in.base.weights[i]) + Rational(2) * t);
  }
  return in;
}

OuterOrbifoldLabels outer_orbifold_labels(const SimpleLieAlgebra& alg, const ModularData& md,
                                          const std::vector<int>& node_perm) {
  if (static_cast<int>(node_perm.size()) != alg.rank || !preserves(alg.cartan, node_perm))
    throw Error(ErrorCode::InvalidInput, "permutation is not a symmetry of the Dynkin diagram");
  bool identity = true, involution = true;
  for (int i = 0; i < alg.rank; ++i) {
    identity = identity && node_perm[i] == i;
    involution = involution && node_perm[node_perm[i]] == i;
  }
  if (identity || !involution)
    throw Error(ErrorCode::PreconditionFailure, "diagram symmetry must have order 2");

  OuterOrbifoldLabels out;
  const int n = md.size();
  out.sigma.resize(n);
  for (int l = 0; l < n; ++l) {
    IVec w(alg.rank);
    for (int i = 0; i < alg.rank; ++i) w(node_perm[i]) = md.weights[l](i);
    int img = -1;
    for (int m = 0; m < n && img < 0; ++m)
      if (md.weights[m] == w) img = m;
    if (img < 0) throw Error(ErrorCode::Internal, "image of " + md.labels[l] + " is not a label");
    out.sigma[l] = img;
    if (img == l) out.fixed_points.push_back(l);
  }
  out.exceptional_a2n = alg.series == 'A' && alg.rank % 2 == 0;
  return out;
}

OrbifoldInput outer_orbifold_input(const SimpleLieAlgebra& alg, std::int64_t k,
                                   const std::vector<int>& node_perm, const std::vector<Rational>& s,
                                   const std::optional<TwistedSectorData>& twisted,
                                   std::size_t weyl_cap) {
  check_shift(alg, s);
  OrbifoldInput in;
  in.base = kac_peterson(alg, k, weyl_cap);
  const auto lab = outer_orbifold_labels(alg, in.base, node_perm);
  in.inner = false;
  in.sigma = lab.sigma;
  in.fixed_points = lab.fixed_points;
  in.exceptional_a2n = lab.exceptional_a2n;
  for (int l : in.fixed_points) in.eta.push_back(frac(pair_weight(alg, s, in.base.weights[l])));
  if (!twisted)
    throw Error(ErrorCode::NotImplemented,
                "S matrix of the twisted orbit algebra of " + alg.name() +
                    " under the diagram flip is not computed; supply the twisted-sector data");
  const auto f = in.fixed_points.size();
  if (static_cast<std::size_t>(twisted->S0.rows()) != f ||
      static_cast<std::size_t>(twisted->S0.cols()) != f || twisted->t0.size() != f ||
      twisted->t1.size() != f || twisted->labels.size() != f)
    throw Error(ErrorCode::InvalidInput,
                "twisted-sector data must be indexed by the " + std::to_string(f) + " fixed points");
  in.S0 = twisted->S0;
  in.t0 = twisted->t0;
  in.t1 = twisted->t1;
  in.twisted_labels = twisted->labels;
  return in;
}

OrbifoldInput permutation_orbifold_input(const ModularData& md) {
  const int n = md.size();
  OrbifoldInput in;
  in.base = tensor_product(md, md);
  in.inner = false;
  in.sigma.resize(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) in.sigma[a * n + b] = b * n + a;
  for (int a = 0; a < n; ++a) {
    in.fixed_points.push_back(a * n + a);
    in.eta.push_back(Rational(0));
    in.twisted_labels.push_back(md.labels[a] + "^");
    const Rational t = md.delta[a] - md.c / Rational(24);
    in.t0.push_back(t);
    in.t1.push_back(t);
  }
  in.S0 = md.S;
  return in;
}

OrbifoldModularData assemble_orbifold(const OrbifoldInput& in, bool flip_branch, double tol) {
  const ModularData& b = in.base;
  const int n = b.size();
  const int f = static_cast<int>(in.fixed_points.size());
  for (int i = 0; i < n; ++i)
    if (in.sigma[in.sigma[i]] != i)
      throw Error(ErrorCode::PreconditionFailure, "label permutation is not an involution");
  if (in.sigma[b.vacuum] != b.vacuum)
    throw Error(ErrorCode::PreconditionFailure, "label permutation moves the vacuum");
  const double u0 = max_abs(in.S0 * in.S0.adjoint() - CMat::Identity(f, f));
  if (u0 > tol) throw Error(ErrorCode::InvariantFailure, "S^(0) is not unitary", u0);

  OrbifoldModularData o;
  o.flipped_branch = flip_branch;
  for (int l = 0; l < n; ++l)
    if (in.sigma[l] > l) o.kinds.push_back({OrbifoldKind::Orbit, l, 0});
  for (int psi : {1, -1})
    for (int l : in.fixed_points) o.kinds.push_back({OrbifoldKind::Untwisted, l, psi});
  for (int psi : {1, -1})
    for (int t = 0; t < f; ++t) o.kinds.push_back({OrbifoldKind::Twisted, t, psi});

  // (T^(1))^{1/2} from the exact exponent reduced mod 2.
  for (int t = 0; t < f; ++t) {
    Rational h = mod(in.t1[t], 2) / Rational(2);
    if (flip_branch) h += Rational(1, 2);
    o.half_t1.push_back(frac(h));
  }
  CVec eta(f), th(f), t0(f);
  for (int i = 0; i < f; ++i) {
    eta(i) = root_of_unity(in.eta[i]);
    th(i) = root_of_unity(o.half_t1[i]);
    t0(i) = root_of_unity(in.t0[i]);
  }
  const CVec mid = (t0.array() / eta.array()).square().matrix();
  o.P = th.asDiagonal() * in.S0.transpose() * mid.asDiagonal() * in.S0 * th.asDiagonal();

  const int N = static_cast<int>(o.kinds.size());
  ModularData& md = o.md;
  md.name = b.name + "/Z2";
  md.c = b.c;
  md.S = CMat::Zero(N, N);
  for (int a = 0; a < N; ++a) {
    const auto& x = o.kinds[a];
    if (x.kind == OrbifoldKind::Twisted) {
      md.labels.push_back(sector_name(in.twisted_labels[x.index], x.psi, 1));
      Rational d = o.half_t1[x.index] + b.c / Rational(24);
      if (x.psi < 0) d += Rational(1, 2);
      md.delta.push_back(d);
    } else {
      md.labels.push_back(sector_name(b.labels[x.index], x.psi, 0));
      md.delta.push_back(b.delta[x.index]);
      if (x.index == b.vacuum && x.psi >= 0) md.vacuum = a;
    }
  }
  for (int a = 0; a < N; ++a)
    for (int c = 0; c < N; ++c) {
      const auto& x = o.kinds[a];
      const auto& y = o.kinds[c];
      Complex v(0, 0);
      using K = OrbifoldKind;
      if (x.kind == K::Orbit && y.kind == K::Orbit) {
        v = b.S(x.index, y.index) + b.S(x.index, in.sigma[y.index]);
      } else if (x.kind == K::Twisted && y.kind == K::Twisted) {
        v = 0.5 * double(x.psi * y.psi) * o.P(x.index, y.index);
      } else if (x.kind == K::Twisted || y.kind == K::Twisted) {
        const auto& u = x.kind == K::Twisted ? y : x;
        const auto& t = x.kind == K::Twisted ? x : y;
        if (u.kind == K::Untwisted) {
          const int p = in.fixed_position(u.index);
          v = 0.5 * double(u.psi) / eta(p) * in.S0(p, t.index);
        }
      } else if (x.kind == K::Untwisted && y.kind == K::Untwisted) {
        v = 0.5 * b.S(x.index, y.index);
      } else {
        v = b.S(x.index, y.index);
      }
      md.S(a, c) = v;
    }

  o.residuals = modular_residuals(md);
  require(o.residuals, tol, "orbifold modular data");
  verlinde(md);

  // S0 S0 (or S0^T S0 when the alphabets differ) against P^2, up to signs.
  const CMat sq = in.S0.transpose() * in.S0;
  const CMat p2 = o.P * o.P;
  double perm = 0.0, match = 0.0;
  for (int i = 0; i < f; ++i) {
    Eigen::Index j;
    sq.row(i).cwiseAbs().maxCoeff(&j);
    for (int m = 0; m < f; ++m) {
      const double target = m == j ? 1.0 : 0.0;
      perm = std::max(perm, std::abs(std::abs(sq(i, m)) - target));
      match = std::max(match, std::abs(std::abs(p2(i, m)) - std::abs(sq(i, m))));
    }
    if (std::abs(std::abs(sq(i, j).real()) - 1.0) > tol) perm = std::max(perm, 1.0);
  }
  o.s0_square_signed_permutation = perm;
  o.p_square_vs_s0_square = match;
  require({{"S0_square_signed_permutation", perm}, {"P_square_vs_S0_square", match}}, tol,
          "orbifold P matrix");
  return o;
}

int dual_current(const OrbifoldModularData& o) {
  const int omega = o.kinds[o.md.vacuum].index;
  for (std::size_t a = 0; a < o.kinds.size(); ++a)
    if (o.kinds[a].kind == OrbifoldKind::Untwisted && o.kinds[a].index == omega && o.kinds[a].psi < 0)
      return static_cast<int>(a);
  throw Error(ErrorCode::Internal, "orbifold data has no (Omega,-,0) label");
}

int dual_extension_label_count(const OrbifoldModularData& o) {
  const FusionRing ring = verlinde(o.md);
  const SimpleCurrentGroup all = simple_currents(o.md, ring);
  const int j = dual_current(o);
  if (all.position(j) < 0)
    throw Error(ErrorCode::InvariantFailure, "(Omega,-,0) is not a simple current of the orbifold");
  const SimpleCurrentGroup g = subgroup(all, {j});
  require_integer_spin(o.md, g);
  // For Z2 with integer spin every fixed point splits in two.
  int count = 0;
  const int pj = g.position(j);
  for (int mu = 0; mu < o.md.size(); ++mu) {
    if (g.charge[pj][mu] != Rational(0)) continue;
    const int img = g.action[pj][mu];
    if (img == mu) count += 2;
    else if (img > mu) count += 1;
  }
  return count;
}

const char* orientation_name(Orientation o) {
  return o == Orientation::Forward ? "forward" : "transposed";
}

Conjecture2Report conjecture2_trace(const OrbifoldInput& in, const std::vector<int>& mu,
                                    Orientation o, double tol) {
  Conjecture2Report r;
  r.mu = mu;
  r.orientation = o;
  std::vector<int> pos;
  for (int m : mu) {
    const int p = in.fixed_position(m);
    if (p < 0)
      throw Error(ErrorCode::PreconditionFailure,
                  "insertion " + in.base.labels[m] + " is not fixed by the orbifold symmetry");
    pos.push_back(p);
  }
  const int f = static_cast<int>(in.fixed_points.size());
  const int vac = in.fixed_position(in.base.vacuum);
  // Forward: kappa runs over twisted columns. Transposed: kappa runs over rows
  // and the insertions are read as twisted columns through the bijection.
  auto entry = [&](int kappa, int p) {
    return o == Orientation::Forward ? in.S0(p, kappa) : in.S0(kappa, p);
  };
  Complex tr(0, 0);
  for (int kappa = 0; kappa < f; ++kappa) {
    const Complex s0 = entry(kappa, vac);
    if (std::abs(s0) < 1e-14) continue;
    Complex term = std::norm(s0);
    for (int p : pos) term *= entry(kappa, p) / s0;
    tr += term;
  }
  r.trace = tr;
  r.rank = block_rank(in.base, 0, mu);
  r.dim_plus = (double(r.rank) + tr) / 2.0;
  r.dim_minus = (double(r.rank) - tr) / 2.0;
  for (const Complex& d : {r.dim_plus, r.dim_minus}) {
    const double re = std::round(d.real());
    if (std::abs(d - Complex(re, 0)) > tol || re < -tol) r.integral = false;
  }
  return r;
}

}  // namespace wzw
