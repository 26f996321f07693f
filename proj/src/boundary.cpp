#include "wzw/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include <Eigen/LU>

namespace wzw {

namespace {

std::string character_suffix(const std::vector<Rational>& psi) {
  if (psi.size() <= 1) return "";
  if (psi.size() == 2) return psi[1] == Rational(0) ? ",+" : ",-";
  std::string s = ",psi";
  for (const auto& q : psi) s += ":" + to_string(q);
  return s;
}

bool untwisted(const SimpleCurrentGroup& g, int mu) {
  for (int p = 0; p < g.size(); ++p)
    if (g.charge[p][mu] != Rational(0)) return false;
  return true;
}

}  // namespace

std::pair<std::vector<HatLabel>, std::vector<BoundaryLabel>> classifying_labels(
    const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od) {
  std::vector<HatLabel> hat;
  for (int mu = 0; mu < md.size(); ++mu) {
    if (!untwisted(g, mu)) continue;
    for (auto& chi : restricted_group(g, od.stabilizer[mu]).characters()) hat.push_back({mu, chi});
  }
  std::vector<BoundaryLabel> boundary;
  for (const auto& orb : od.orbits) {
    const int rep = orb.front();
    for (auto& chi : restricted_group(g, od.central[rep]).characters())
      boundary.push_back({rep, chi});
  }
  return {hat, boundary};
}

CMat hat_smatrix(const SimpleCurrentGroup& g, const OrbitData& od, SJCache& sj,
                 const std::vector<HatLabel>& hat, const std::vector<BoundaryLabel>& boundary) {
  CMat S(hat.size(), boundary.size());
  const double G = g.size();
  for (std::size_t a = 0; a < hat.size(); ++a)
    for (std::size_t b = 0; b < boundary.size(); ++b) {
      const int mu = hat[a].sector, rho = boundary[b].sector;
      const auto& Smu = od.stabilizer[mu];
      const auto& Urho = od.central[rho];
      const double pref = G / std::sqrt(double(Smu.size()) * od.central[mu].size() *
                                        od.stabilizer[rho].size() * Urho.size());
      Complex sum(0, 0);
      for (std::size_t i = 0; i < Smu.size(); ++i) {
        auto jt = std::find(Urho.begin(), Urho.end(), Smu[i]);
        if (jt == Urho.end()) continue;
        const std::size_t j = jt - Urho.begin();
        sum += root_of_unity(hat[a].psi[i]) * std::conj(root_of_unity(boundary[b].psi[j])) *
               sj.entry(g.currents[Smu[i]], mu, rho);
      }
      S(a, b) = pref * sum;
    }
  return S;
}

ClassifyingAlgebra classifying_algebra(const ModularData& md, const SimpleCurrentGroup& g,
                                       const OrbitData& od, SJCache& sj, double tol) {
  ClassifyingAlgebra a;
  std::tie(a.hat, a.boundary) = classifying_labels(md, g, od);
  const int n = a.size();
  if (static_cast<int>(a.boundary.size()) != n)
    throw Error(ErrorCode::InvariantFailure,
                std::to_string(n) + " bulk labels against " + std::to_string(a.boundary.size()) +
                    " boundary labels");
  for (const auto& h : a.hat)
    a.hat_names.push_back(md.labels[h.sector] + character_suffix(h.psi));
  for (const auto& b : a.boundary)
    a.boundary_names.push_back("[" + md.labels[b.sector] + character_suffix(b.psi) + "]");
  a.unit = -1;
  for (int i = 0; i < n && a.unit < 0; ++i)
    if (a.hat[i].sector == md.vacuum &&
        std::all_of(a.hat[i].psi.begin(), a.hat[i].psi.end(), [](const Rational& q) { return q == Rational(0); }))
      a.unit = i;

  a.S_hat = hat_smatrix(g, od, sj, a.hat, a.boundary);
  Eigen::FullPivLU<CMat> lu(a.S_hat);
  if (!lu.isInvertible())
    throw Error(ErrorCode::InvariantFailure, "S-hat is singular; the boundary labels are not determined");
  for (int b = 0; b < n; ++b)
    if (std::abs(a.S_hat(a.unit, b)) < 1e-12)
      throw Error(ErrorCode::InvariantFailure,
                  "vacuum entry of S-hat vanishes at boundary label " + a.boundary_names[b]);

  // Lower-index constants, then raise the third index with the inverse of C-hat.
  std::vector<Complex> low(static_cast<std::size_t>(n) * n * n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        Complex s(0, 0);
        for (int b = 0; b < n; ++b)
          s += a.S_hat(l, b) * a.S_hat(m, b) * a.S_hat(v, b) / a.S_hat(a.unit, b);
        low[(static_cast<std::size_t>(l) * n + m) * n + v] = s;
      }
  CMat C(n, n);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) C(l, m) = low[(static_cast<std::size_t>(l) * n + m) * n + a.unit];
  const CMat Ci = C.inverse();
  a.N.assign(low.size(), Complex(0, 0));
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        Complex s(0, 0);
        for (int k = 0; k < n; ++k) s += low[(static_cast<std::size_t>(l) * n + m) * n + k] * Ci(k, v);
        a.N[(static_cast<std::size_t>(l) * n + m) * n + v] = s;
      }

  a.R.resize(n, n);
  for (int b = 0; b < n; ++b)
    for (int l = 0; l < n; ++l) a.R(b, l) = a.S_hat(l, b) / a.S_hat(a.unit, b);

  double unit = 0.0, comm = 0.0, assoc = 0.0, rep = 0.0;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        unit = std::max(unit, std::abs(a(a.unit, m, v) - Complex(m == v ? 1.0 : 0.0, 0.0)));
        comm = std::max(comm, std::abs(a(l, m, v) - a(m, l, v)));
      }
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int p = 0; p < n; ++p)
        for (int w = 0; w < n; ++w) {
          Complex x(0, 0), y(0, 0);
          for (int v = 0; v < n; ++v) {
            x += a(l, m, v) * a(v, p, w);
            y += a(m, p, v) * a(l, v, w);
          }
          assoc = std::max(assoc, std::abs(x - y));
        }
  for (int b = 0; b < n; ++b)
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m) {
        Complex s(0, 0);
        for (int v = 0; v < n; ++v) s += a(l, m, v) * a.R(b, v);
        rep = std::max(rep, std::abs(a.R(b, l) * a.R(b, m) - s));
      }
  a.residuals = {{"unit", unit}, {"commutativity", comm}, {"associativity", assoc},
                 {"representation", rep}};
  require(a.residuals, tol, "classifying algebra");
  return a;
}

IdealDecomposition automorphism_type_decomposition(const ClassifyingAlgebra& a,
                                                   const SimpleCurrentGroup& g) {
  IdealDecomposition d;
  const int n = a.size();
  for (const auto& b : a.boundary) {
    std::vector<Rational> q;
    for (int p = 0; p < g.size(); ++p) q.push_back(g.charge[p][b.sector]);
    auto it = std::find(d.types.begin(), d.types.end(), q);
    if (it == d.types.end()) {
      d.type_of.push_back(static_cast<int>(d.types.size()));
      d.types.push_back(q);
    } else {
      d.type_of.push_back(static_cast<int>(it - d.types.begin()));
    }
  }
  // Idempotent of boundary label b: the element on which only R^b is 1.
  const CMat E = a.R.inverse();  // column b holds e_b in the hat basis
  const int t = static_cast<int>(d.types.size());
  CMat P = CMat::Zero(n, t);
  for (int b = 0; b < n; ++b) P.col(d.type_of[b]) += E.col(b);
  auto product = [&](const CVec& x, const CVec& y) {
    CVec z = CVec::Zero(n);
    for (int l = 0; l < n; ++l)
      for (int m = 0; m < n; ++m)
        if (std::abs(x(l)) > 0 && std::abs(y(m)) > 0)
          for (int v = 0; v < n; ++v) z(v) += x(l) * y(m) * a(l, m, v);
    return z;
  };
  double res = 0.0;
  CVec total = CVec::Zero(n);
  for (int i = 0; i < t; ++i) {
    total += P.col(i);
    for (int j = 0; j < t; ++j) {
      const CVec z = product(P.col(i), P.col(j));
      const CVec want = i == j ? CVec(P.col(i)) : CVec(CVec::Zero(n));
      res = std::max(res, (z - want).cwiseAbs().maxCoeff());
    }
  }
  CVec unit = CVec::Zero(n);
  unit(a.unit) = 1.0;
  d.residual = std::max(res, (total - unit).cwiseAbs().maxCoeff());
  return d;
}

CMat antisymmetric_fixed_block(const OrbifoldInput& in, const OrbifoldModularData& o) {
  std::vector<int> base;
  for (const auto& k : o.kinds)
    if (k.kind == OrbifoldKind::Orbit) base.push_back(k.index);
  const int f = static_cast<int>(base.size());
  CMat S(f, f);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j)
      S(i, j) = in.base.S(base[i], base[j]) - in.base.S(base[i], in.sigma[base[j]]);
  return S;
}

OrbifoldBoundary orbifold_boundary(const OrbifoldInput& in, const OrbifoldModularData& o,
                                   const std::optional<CMat>& fixed_block, double tol) {
  OrbifoldBoundary r;
  const FusionRing ring = verlinde(o.md);
  const int j = dual_current(o);
  r.group = subgroup(simple_currents(o.md, ring), {j});
  std::vector<int> fixed;
  for (int a = 0; a < o.md.size(); ++a)
    if (o.kinds[a].kind == OrbifoldKind::Orbit) fixed.push_back(a);
  SJCache sj([&](int current) -> SJMatrix {
    if (current == o.md.vacuum) {
      SJMatrix m;
      m.current = current;
      m.fixed_points.resize(o.md.size());
      std::iota(m.fixed_points.begin(), m.fixed_points.end(), 0);
      m.S = o.md.S;
      m.convention = "identity";
      return m;
    }
    if (fixed.empty()) return phase_fixed(CMat(0, 0), o.md, current, fixed);
    if (!fixed_block)
      throw Error(ErrorCode::NotImplemented,
                  "S^J of the orbifold theory on its fixed points must be supplied");
    return phase_fixed(*fixed_block, o.md, current, fixed);
  });
  r.orbits = orbit_data(o.md, r.group, sj);
  r.algebra = classifying_algebra(o.md, r.group, r.orbits, sj, tol);
  r.ideals = automorphism_type_decomposition(r.algebra, r.group);
  (void)in;
  return r;
}

namespace {

// Base label of a sector with a Z2 character: psi = + keeps it, - takes sigma of it.
int base_label(const OrbifoldInput& in, const OrbifoldModularData& o, int sector,
               const std::vector<Rational>& psi, bool swapped) {
  const int l = o.kinds[sector].index;
  bool minus = psi.size() == 2 && psi[1] != Rational(0);
  if (swapped) minus = !minus;
  return minus ? in.sigma[l] : l;
}

}  // namespace

CMat z2_table_smatrix(const OrbifoldInput& in, const OrbifoldModularData& o,
                      const OrbifoldBoundary& b) {
  const auto& a = b.algebra;
  CMat T(a.size(), a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) {
      const auto& h = a.hat[i];
      const auto& bl = a.boundary[j];
      const int lam = base_label(in, o, h.sector, h.psi, false);
      const auto& bk = o.kinds[bl.sector];
      if (bk.kind == OrbifoldKind::Twisted) {
        const int p = in.fixed_position(lam);
        const auto& hk = o.kinds[h.sector];
        T(i, j) = p < 0 ? Complex(0, 0)
                        : double(hk.psi) / root_of_unity(in.eta[p]) * in.S0(p, bk.index);
      } else {
        T(i, j) = in.base.S(lam, base_label(in, o, bl.sector, bl.psi, false));
      }
    }
  return T;
}

double match_up_to_relabeling(const CMat& computed, const CMat& table, const OrbifoldModularData& o,
                              const OrbifoldBoundary& b, double tol) {
  const auto& a = b.algebra;
  const int n = a.size();
  // Paired rows and columns: the two characters on a sector (mu,0,0).
  std::map<int, std::vector<int>> row_pairs, col_pairs;
  for (int i = 0; i < n; ++i)
    if (o.kinds[a.hat[i].sector].kind == OrbifoldKind::Orbit) row_pairs[a.hat[i].sector].push_back(i);
  for (int j = 0; j < n; ++j)
    if (o.kinds[a.boundary[j].sector].kind == OrbifoldKind::Orbit)
      col_pairs[a.boundary[j].sector].push_back(j);
  // Variables: one swap bit per paired sector, rows then columns.
  std::map<int, int> row_var, col_var;
  int nv = 0;
  for (auto& [s, v] : row_pairs) row_var[s] = nv++;
  for (auto& [s, v] : col_pairs) col_var[s] = nv++;
  auto partner = [](const std::map<int, std::vector<int>>& pairs, int sector, int idx) {
    const auto& v = pairs.at(sector);
    return v[0] == idx ? v[1] : v[0];
  };
  auto entry_ok = [&](int i, int j, bool sr, bool sc) {
    const int ti = sr ? partner(row_pairs, a.hat[i].sector, i) : i;
    const int tj = sc ? partner(col_pairs, a.boundary[j].sector, j) : j;
    return std::abs(computed(i, j) - table(ti, tj)) < tol;
  };

  // Union-find with parity, plus forced values.
  std::vector<int> parent(nv), parity(nv, 0), forced(nv, -1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  };
  bool consistent = true;
  auto fix = [&](int x, int val) {
    auto [r, p] = find(x);
    const int want = val ^ p;
    if (forced[r] >= 0 && forced[r] != want) consistent = false;
    forced[r] = want;
  };
  auto link = [&](int x, int y, int rel) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) {
      if ((px ^ py) != rel) consistent = false;
      return;
    }
    parent[rx] = ry;
    parity[rx] = px ^ py ^ rel;
    if (forced[rx] >= 0) {
      const int want = forced[rx] ^ parity[rx];
      if (forced[ry] >= 0 && forced[ry] != want) consistent = false;
      forced[ry] = want;
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int rs = a.hat[i].sector, cs = a.boundary[j].sector;
      const int rv = row_var.count(rs) ? row_var[rs] : -1;
      const int cv = col_var.count(cs) ? col_var[cs] : -1;
      bool ok[2][2];
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
          ok[x][y] = entry_ok(i, j, x && rv >= 0, y && cv >= 0);
      if (rv < 0 && cv < 0) {
        if (!ok[0][0]) consistent = false;
      } else if (cv < 0) {
        if (ok[0][0] != ok[1][0]) fix(rv, ok[1][0] ? 1 : 0);
        else if (!ok[0][0]) consistent = false;
      } else if (rv < 0) {
        if (ok[0][0] != ok[0][1]) fix(cv, ok[0][1] ? 1 : 0);
        else if (!ok[0][0]) consistent = false;
      } else {
        const int cnt = ok[0][0] + ok[0][1] + ok[1][0] + ok[1][1];
        if (cnt == 0) consistent = false;
        else if (cnt == 2 && ok[0][0] && ok[1][1]) link(rv, cv, 0);
        else if (cnt == 2 && ok[0][1] && ok[1][0]) link(rv, cv, 1);
        else if (cnt <= 2) {
          for (int x = 0; x < 2; ++x)
            if (!ok[x][0] && !ok[x][1]) fix(rv, 1 - x);
          for (int y = 0; y < 2; ++y)
            if (!ok[0][y] && !ok[1][y]) fix(cv, 1 - y);
        }
      }
    }
  std::vector<int> value(nv);
  for (int v = 0; v < nv; ++v) {
    auto [r, p] = find(v);
    value[v] = (forced[r] < 0 ? 0 : forced[r]) ^ p;
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int rs = a.hat[i].sector, cs = a.boundary[j].sector;
      const bool sr = row_var.count(rs) && value[row_var[rs]];
      const bool sc = col_var.count(cs) && value[col_var[cs]];
      const int ti = sr ? partner(row_pairs, rs, i) : i;
      const int tj = sc ? partner(col_pairs, cs, j) : j;
      worst = std::max(worst, std::abs(computed(i, j) - table(ti, tj)));
    }
  if (!consistent || worst > tol)
    throw Error(ErrorCode::InvariantFailure, "S-hat does not match the Z2 table under any relabeling",
                worst);
  return worst;
}

}  // namespace wzw
