#include "wzw/simplecurrent.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

namespace wzw {

SJProvider wzw_sj_provider(const SimpleLieAlgebra& alg, std::int64_t k, const ModularData& md) {
  return [alg, k, md](int current) { return sj_matrix(alg, k, md, current); };
}

std::vector<SimpleLieAlgebra> parse_algebras(const std::string& spec) {
  std::vector<SimpleLieAlgebra> out;
  std::size_t start = 0;
  while (true) {
    const auto x = spec.find('x', start);
    out.push_back(parse_algebra(spec.substr(start, x == std::string::npos ? x : x - start)));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return out;
}

WzwTheory wzw_theory(const std::vector<SimpleLieAlgebra>& algebras, std::int64_t k,
                     std::size_t weyl_cap) {
  if (algebras.empty()) throw Error(ErrorCode::InvalidInput, "no algebra given");
  WzwTheory t;
  t.algebras = algebras;
  t.level = k;
  for (const auto& a : algebras) t.factors.push_back(kac_peterson(a, k, weyl_cap));
  t.md = t.factors[0];
  for (std::size_t i = 1; i < t.factors.size(); ++i) t.md = tensor_product(t.md, t.factors[i]);
  return t;
}

SJProvider WzwTheory::sj_provider() const {
  if (algebras.size() == 1) return wzw_sj_provider(algebras[0], level, factors[0]);
  struct State {
    std::vector<SJCache> caches;
    std::vector<int> sizes;
  };
  auto st = std::make_shared<State>();
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    st->caches.emplace_back(wzw_sj_provider(algebras[i], level, factors[i]));
    st->sizes.push_back(factors[i].size());
  }
  return [st](int current) {
    std::vector<int> labels(st->sizes.size());
    int rest = current;
    for (std::size_t i = st->sizes.size(); i-- > 0;) {
      labels[i] = rest % st->sizes[i];
      rest /= st->sizes[i];
    }
    std::vector<const SJMatrix*> f;
    for (std::size_t i = 0; i < labels.size(); ++i) f.push_back(&st->caches[i].get(labels[i]));
    return tensor_sj(f, st->sizes, current);
  };
}

const SJMatrix& SJCache::get(int current) {
  auto it = cache_.find(current);
  if (it != cache_.end()) return it->second;
  SJMatrix m = provider_(current);
  std::vector<int> pos;
  for (std::size_t i = 0; i < m.fixed_points.size(); ++i) {
    int f = m.fixed_points[i];
    if (static_cast<int>(pos.size()) <= f) pos.resize(f + 1, -1);
    pos[f] = static_cast<int>(i);
  }
  pos_[current] = std::move(pos);
  return cache_.emplace(current, std::move(m)).first->second;
}

Complex SJCache::entry(int current, int lambda, int mu) {
  const SJMatrix& m = get(current);
  const auto& pos = pos_[current];
  auto at = [&](int l) { return l < static_cast<int>(pos.size()) ? pos[l] : -1; };
  const int a = at(lambda), b = at(mu);
  if (a < 0 || b < 0) return {0.0, 0.0};
  return m.S(a, b);
}

AbelianGroup restricted_group(const SimpleCurrentGroup& g, const std::vector<int>& positions) {
  const int m = static_cast<int>(positions.size());
  AbelianGroup h;
  h.table.resize(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = g.group.mul(positions[a], positions[b]);
      h.table(a, b) = std::find(positions.begin(), positions.end(), p) - positions.begin();
    }
  h.identity = static_cast<int>(std::find(positions.begin(), positions.end(), g.group.identity) -
                                positions.begin());
  return h;
}

OrbitData orbit_data(const ModularData& md, const SimpleCurrentGroup& g, SJCache& sj) {
  const int n = md.size();
  OrbitData od;
  od.orbit_of.assign(n, -1);
  for (int mu = 0; mu < n; ++mu) {
    if (od.orbit_of[mu] >= 0) continue;
    std::vector<int> orb;
    for (int p = 0; p < g.size(); ++p) orb.push_back(g.action[p][mu]);
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    for (int x : orb) od.orbit_of[x] = static_cast<int>(od.orbits.size());
    od.orbits.push_back(orb);
  }
  od.stabilizer.resize(n);
  od.cocycle.resize(n);
  od.central.resize(n);
  od.d.resize(n);
  for (int mu = 0; mu < n; ++mu) {
    auto& st = od.stabilizer[mu];
    for (int p = 0; p < g.size(); ++p)
      if (g.action[p][mu] == mu) st.push_back(p);
    if (od.length(mu) * static_cast<int>(st.size()) != g.size())
      throw Error(ErrorCode::Internal, "orbit-stabilizer count fails at " + md.labels[mu]);
    const int s = static_cast<int>(st.size());
    // F(J, J') from S^J_{J' lambda, mu} = (T_mu / T_{J' mu}) F(J, J') S^J_{lambda mu}.
    // Row Omega carries the monodromy charges of mu, so it is kept.
    CMat F = CMat::Ones(s, s);
    if (s > 1) {
      for (int a = 0; a < s; ++a) {
        const int J = g.currents[st[a]];
        const SJMatrix& m = sj.get(J);
        // Row with the largest |S^J_{lambda mu}| pins F(J, .).
        int best = -1;
        double mag = 0.0;
        for (int lam : m.fixed_points) {
          double v = std::abs(sj.entry(J, lam, mu));
          if (v > mag) {
            mag = v;
            best = lam;
          }
        }
        if (best < 0 || mag < 1e-12)
          throw Error(ErrorCode::InvariantFailure,
                      "cocycle at " + md.labels[mu] + " under-determined: S^J column vanishes");
        const CVec T = md.T();
        for (int b = 0; b < s; ++b) {
          const int moved = g.action[st[b]][best];
          F(a, b) = sj.entry(J, moved, mu) / sj.entry(J, best, mu) * T(g.action[st[b]][mu]) / T(mu);
        }
      }
    }
    bool alt = true;
    for (int a = 0; a < s; ++a)
      for (int b = 0; b < s; ++b)
        if (std::abs(F(a, a) - 1.0) > 1e-6 || std::abs(F(a, b) * F(b, a) - 1.0) > 1e-6) alt = false;
    od.alternating.push_back(alt);
    od.cocycle[mu] = F;
    for (int a = 0; a < s; ++a) {
      bool central = true;
      for (int b = 0; b < s && central; ++b) central = std::abs(F(a, b) - 1.0) < 1e-6;
      if (central) od.central[mu].push_back(st[a]);
    }
    const int u = static_cast<int>(od.central[mu].size());
    const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(s / u))));
    const bool square = s % u == 0 && d * d * u == s;
    if (alt && !square)
      throw Error(ErrorCode::Internal, "index |S|/|U| at " + md.labels[mu] + " is not a square");
    od.d[mu] = square ? d : 0;
  }
  return od;
}

void require_integer_spin(const ModularData& md, const SimpleCurrentGroup& g) {
  for (int j : g.currents) {
    const Rational f = frac(md.delta[j]);
    if (f == Rational(1, 2))
      throw Error(ErrorCode::PreconditionFailure,
                  "simple current " + md.labels[j] +
                      " has half-integer weight; extensions with discrete torsion are not supported");
    if (f != Rational(0))
      throw Error(ErrorCode::PreconditionFailure,
                  "simple current " + md.labels[j] + " has non-integer weight " + to_string(md.delta[j]));
  }
}

std::vector<ExtendedLabel> extended_labels(const ModularData& md, const SimpleCurrentGroup& g,
                                           const OrbitData& od) {
  std::vector<ExtendedLabel> out;
  for (const auto& orb : od.orbits) {
    const int rep = orb.front();
    bool survives = true;
    for (int p = 0; p < g.size() && survives; ++p) survives = g.charge[p][rep] == Rational(0);
    if (!survives) continue;
    for (auto& chi : restricted_group(g, od.central[rep]).characters()) out.push_back({rep, chi});
  }
  (void)md;
  return out;
}

ExtendedModularData extended_smatrix(const ModularData& md, const SimpleCurrentGroup& g,
                                     const OrbitData& od, SJCache& sj, double tol) {
  require_integer_spin(md, g);
  for (int mu = 0; mu < md.size(); ++mu)
    if (!od.alternating[mu])
      throw Error(ErrorCode::InvariantFailure, "cocycle at " + md.labels[mu] + " is not alternating");
  const auto classes = extended_labels(md, g, od);
  const int n = static_cast<int>(classes.size());
  ExtendedModularData x;
  x.md.name = md.name + "/ext";
  x.md.c = md.c;
  x.md.S = CMat::Zero(n, n);
  for (const auto& cl : classes) {
    const auto& U = od.central[cl.rep];
    std::string name = "[" + md.labels[cl.rep];
    if (U.size() == 2) {
      name += cl.psi[1] == Rational(0) ? ",+" : ",-";
    } else if (U.size() > 1) {
      name += ",psi";
      for (const auto& q : cl.psi) name += ":" + to_string(q);
    }
    x.md.labels.push_back(name + "]");
    if (!md.weights.empty()) x.md.weights.push_back(md.weights[cl.rep]);
    x.md.delta.push_back(md.delta[cl.rep]);
    x.representative.push_back(cl.rep);
    x.psi.push_back(cl.psi);
    x.d.push_back(od.d[cl.rep]);
  }
  for (int a = 0; a < n; ++a)
    if (classes[a].rep == md.vacuum) x.md.vacuum = a;

  const double G = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int l = classes[a].rep, m = classes[b].rep;
      const auto& Ul = od.central[l];
      const auto& Um = od.central[m];
      const double pref = G / std::sqrt(double(od.stabilizer[l].size()) * Ul.size() *
                                        od.stabilizer[m].size() * Um.size());
      Complex sum(0, 0);
      for (std::size_t i = 0; i < Ul.size(); ++i) {
        auto jt = std::find(Um.begin(), Um.end(), Ul[i]);
        if (jt == Um.end()) continue;
        const std::size_t j = jt - Um.begin();
        const int J = g.currents[Ul[i]];
        sum += root_of_unity(classes[a].psi[i]) * sj.entry(J, l, m) *
               std::conj(root_of_unity(classes[b].psi[j]));
      }
      x.md.S(a, b) = pref * sum;
    }
  x.residuals = modular_residuals(x.md);
  require(x.residuals, tol, "extended modular data");
  verlinde(x.md);
  return x;
}

IMat z_matrix(const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od) {
  const int n = md.size();
  IMat z = IMat::Zero(n, n);
  for (const auto& orb : od.orbits) {
    const int rep = orb.front();
    bool survives = true;
    for (int p = 0; p < g.size() && survives; ++p) survives = g.charge[p][rep] == Rational(0);
    if (!survives) continue;
    const std::int64_t s = static_cast<std::int64_t>(od.stabilizer[rep].size());
    for (int a : orb)
      for (int b : orb) z(a, b) += s;
  }
  return z;
}

Residuals z_residuals(const ModularData& md, const IMat& z) {
  const CMat Z = z.cast<double>().cast<Complex>();
  const CMat T = md.T().asDiagonal();
  Residuals r;
  r.emplace_back("ZS-SZ", max_abs(Z * md.S - md.S * Z));
  r.emplace_back("ZT-TZ", max_abs(Z * T - T * Z));
  r.emplace_back("Z_vacuum", std::abs(static_cast<double>(z(md.vacuum, md.vacuum)) - 1.0));
  return r;
}

}  // namespace wzw
