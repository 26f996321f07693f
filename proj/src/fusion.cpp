#include "wzw/fusion.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace wzw {

FusionRing verlinde(const ModularData& md, double tol) {
  const int n = md.size();
  FusionRing r;
  r.n = n;
  r.vacuum = md.vacuum;
  r.N.assign(static_cast<std::size_t>(n) * n * n, 0);
  const CMat& S = md.S;
  const CMat St = S.transpose();
  const CMat Sc = S.conjugate();
  std::vector<double> worst(n, 0.0);
  std::vector<std::string> where(n);
  parallel_for(n, [&](std::size_t l) {
    CVec d(n);
    for (int k = 0; k < n; ++k) d(k) = S(k, l) / S(k, md.vacuum);
    const CMat Nl = St * d.asDiagonal() * Sc;
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        const Complex x = Nl(m, v);
        const double rounded = std::round(x.real());
        const double res = std::abs(x - rounded);
        if (res > worst[l] || rounded < 0) {
          worst[l] = rounded < 0 ? std::max(res, 1.0) : res;
          where[l] = "N(" + md.labels[l] + "," + md.labels[m] + ";" + md.labels[v] + ")";
        }
        r.at(static_cast<int>(l), m, v) = static_cast<std::int64_t>(rounded);
      }
  });
  for (int l = 0; l < n; ++l)
    if (worst[l] > tol) {
      std::ostringstream s;
      s << "fusion coefficient " << where[l] << " not a non-negative integer, residual " << worst[l];
      throw Error(ErrorCode::IntegralityFailure, s.str(), worst[l]);
    }
  r.conj.resize(n);
  for (int m = 0; m < n; ++m)
    for (int v = 0; v < n; ++v)
      if (r(m, v, md.vacuum) == 1) r.conj[m] = v;
  return r;
}

RingViolations ring_violations(const FusionRing& r) {
  RingViolations v;
  const int n = r.n;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      if (r(r.vacuum, l, m) != (l == m)) ++v.unit;
      if (r(l, m, r.vacuum) != (r.conj[l] == m)) ++v.conjugation;
      for (int k = 0; k < n; ++k) {
        if (r(l, m, k) != r(m, l, k)) ++v.commutativity;
        if (r(l, m, k) < 0) ++v.negativity;
      }
    }
  // Associativity as N_a N_b = sum_s N_ab^s N_s; exhaustive for small rings,
  // contracted against fixed pseudo-random integer weights otherwise.
  std::vector<IMat> mats(n, IMat(n, n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int s = 0; s < n; ++s) mats[a](b, s) = r(a, b, s);
  auto check = [&](const IVec& x, const IVec& y) {
    IMat X = IMat::Zero(n, n), Y = IMat::Zero(n, n), rhs = IMat::Zero(n, n);
    IVec xy = IVec::Zero(n);
    for (int a = 0; a < n; ++a) {
      X += x(a) * mats[a];
      Y += y(a) * mats[a];
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (x(a) && y(b)) xy += x(a) * y(b) * mats[a].row(b).transpose();
    for (int s = 0; s < n; ++s) rhs += xy(s) * mats[s];
    return (X * Y - rhs).cwiseAbs().sum() != 0;
  };
  if (n <= 24) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        IVec x = IVec::Zero(n), y = IVec::Zero(n);
        x(a) = 1;
        y(b) = 1;
        if (check(x, y)) ++v.associativity;
      }
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 8; ++trial) {
      IVec x(n), y(n);
      for (int a = 0; a < n; ++a) {
        x(a) = dist(rng);
        y(a) = dist(rng);
      }
      if (check(x, y)) ++v.associativity;
    }
  }
  return v;
}

int SimpleCurrentGroup::position(int label) const {
  for (int i = 0; i < size(); ++i)
    if (currents[i] == label) return i;
  return -1;
}

namespace {

SimpleCurrentGroup assemble(const ModularData& md, const FusionRing& ring, std::vector<int> cur) {
  const int n = md.size();
  SimpleCurrentGroup g;
  g.currents = std::move(cur);
  const int m = g.size();
  for (int j : g.currents) {
    std::vector<int> act(n, -1);
    for (int mu = 0; mu < n; ++mu)
      for (int v = 0; v < n; ++v)
        if (ring(j, mu, v) == 1) act[mu] = v;
    g.action.push_back(act);
    std::vector<Rational> q(n);
    for (int mu = 0; mu < n; ++mu) q[mu] = frac(md.delta[j] + md.delta[mu] - md.delta[act[mu]]);
    g.charge.push_back(q);
  }
  g.group.table.resize(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = g.position(g.action[a][g.currents[b]]);
      if (p < 0) throw Error(ErrorCode::Internal, "simple currents not closed under fusion");
      g.group.table(a, b) = p;
    }
  g.group.identity = 0;
  return g;
}

}  // namespace

SimpleCurrentGroup simple_currents(const ModularData& md, const FusionRing& ring, double tol) {
  const int n = md.size();
  const Complex s00 = md.S(md.vacuum, md.vacuum);
  std::vector<int> cur{md.vacuum};
  for (int j = 0; j < n; ++j) {
    const bool by_s = std::abs(md.S(j, md.vacuum) - s00) < tol;
    bool by_fusion = true;
    for (int l = 0; l < n && by_fusion; ++l) {
      std::int64_t total = 0;
      for (int v = 0; v < n; ++v) total += ring(l, j, v);
      by_fusion = total == 1;
    }
    if (by_s != by_fusion)
      throw Error(ErrorCode::Internal, "label " + md.labels[j] +
                                           ": S-matrix and fusion characterizations of simple "
                                           "currents disagree");
    if (by_s && j != md.vacuum) cur.push_back(j);
  }
  return assemble(md, ring, cur);
}

SimpleCurrentGroup subgroup(const SimpleCurrentGroup& g, const std::vector<int>& generators) {
  std::vector<bool> in(g.size(), false);
  std::vector<int> span{0};
  in[0] = true;
  for (std::size_t i = 0; i < span.size(); ++i)
    for (int label : generators) {
      int p = g.position(label);
      if (p < 0) throw Error(ErrorCode::InvalidInput, "generator is not a simple current");
      int q = g.group.mul(span[i], p);
      if (!in[q]) {
        in[q] = true;
        span.push_back(q);
      }
    }
  std::vector<int> keep;
  for (int p = 0; p < g.size(); ++p)
    if (in[p]) keep.push_back(p);
  SimpleCurrentGroup h;
  for (int p : keep) {
    h.currents.push_back(g.currents[p]);
    h.action.push_back(g.action[p]);
    h.charge.push_back(g.charge[p]);
  }
  const int m = h.size();
  h.group.table.resize(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) h.group.table(a, b) = h.position(g.currents[g.group.mul(keep[a], keep[b])]);
  return h;
}

std::vector<int> label_bijection(const ModularData& a, const ModularData& b, double tol) {
  const int n = a.size();
  if (b.size() != n) return {};
  const CVec ta = a.T(), tb = b.T();
  std::vector<int> p(n, -1);
  std::vector<bool> used(n, false);
  // Backtracking in label order; each choice must agree with all earlier ones.
  std::function<bool(int)> place = [&](int i) {
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c] || std::abs(ta(i) - tb(c)) > tol) continue;
      if ((i == a.vacuum) != (c == b.vacuum)) continue;
      bool ok = true;
      for (int j = 0; j <= i && ok; ++j) {
        const int cj = j == i ? c : p[j];
        ok = std::abs(a.S(i, j) - b.S(c, cj)) <= tol;
      }
      if (!ok) continue;
      p[i] = c;
      used[c] = true;
      if (place(i + 1)) return true;
      used[c] = false;
    }
    p[i] = -1;
    return false;
  };
  if (!place(0)) return {};
  return p;
}

ModularData tensor_product(const ModularData& a, const ModularData& b) {
  ModularData t;
  t.name = a.name + "*" + b.name;
  const int na = a.size(), nb = b.size();
  t.S.resize(na * nb, na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      t.labels.push_back(a.labels[i] + "x" + b.labels[j]);
      if (!a.weights.empty() && !b.weights.empty()) {
        IVec w(a.weights[i].size() + b.weights[j].size());
        w << a.weights[i], b.weights[j];
        t.weights.push_back(w);
      }
      t.delta.push_back(a.delta[i] + b.delta[j]);
      for (int k = 0; k < na; ++k)
        for (int l = 0; l < nb; ++l) t.S(i * nb + j, k * nb + l) = a.S(i, k) * b.S(j, l);
    }
  t.vacuum = a.vacuum * nb + b.vacuum;
  t.c = a.c + b.c;
  return t;
}

}  // namespace wzw
