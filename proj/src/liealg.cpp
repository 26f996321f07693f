#include "wzw/liealg.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace wzw {

namespace {

IMat cartan_matrix(char series, int n) {
  IMat a = IMat::Zero(n, n);
  for (int i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      a(0, 1) = -3;  // alpha_1 short
      a(1, 0) = -1;
      break;
  }
  return a;
}

bool valid_pair(char s, int n) {
  switch (s) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

std::vector<std::int64_t> symmetrize(const IMat& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || a(i, j) == 0 || d[j] != Rational(0)) continue;
      d[j] = d[i] * Rational(a(i, j), a(j, i));
      stack.push_back(j);
    }
  }
  std::int64_t l = 1;
  for (auto& x : d) l = std::lcm(l, x.denominator());
  std::vector<std::int64_t> out(n);
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) {
    out[i] = (d[i] * l).numerator();
    g = std::gcd(g, out[i]);
  }
  for (auto& x : out) x /= g;
  return out;
}

bool is_positive_root(const IVec& v) {
  bool nonzero = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < 0) return false;
    if (v(i) != 0) nonzero = true;
  }
  return nonzero;
}

std::vector<std::int64_t> key(const IVec& v) { return {v.data(), v.data() + v.size()}; }

std::atomic<std::size_t> g_traversals{0};

}  // namespace

SimpleLieAlgebra build_algebra(char series, int rank) {
  series = static_cast<char>(std::toupper(static_cast<unsigned char>(series)));
  if (!valid_pair(series, rank))
    throw Error(ErrorCode::InvalidInput,
                "no simple Lie algebra " + std::string(1, series) + std::to_string(rank));
  SimpleLieAlgebra g;
  g.series = series;
  g.rank = rank;
  g.cartan = cartan_matrix(series, rank);
  g.symmetrizer = symmetrize(g.cartan);
  const std::int64_t dmax = *std::max_element(g.symmetrizer.begin(), g.symmetrizer.end());

  const Mat<Rational> ainv = inverse(to_rational(g.cartan));
  g.metric.resize(rank, rank);
  g.root_metric.resize(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational di(g.symmetrizer[i], dmax);
      g.metric(i, j) = di * ainv(i, j);
      g.root_metric(i, j) = di * Rational(g.cartan(i, j));
    }

  // Positive roots by closure under simple reflections.
  std::set<std::vector<std::int64_t>> seen;
  std::vector<IVec> queue;
  for (int i = 0; i < rank; ++i) {
    IVec e = IVec::Zero(rank);
    e(i) = 1;
    queue.push_back(e);
    seen.insert(key(e));
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const IVec beta = queue[q];
    for (int i = 0; i < rank; ++i) {
      std::int64_t c = g.cartan.row(i).dot(beta);
      IVec r = beta;
      r(i) -= c;
      if (is_positive_root(r) && seen.insert(key(r)).second) queue.push_back(r);
    }
  }
  std::sort(queue.begin(), queue.end(), [](const IVec& x, const IVec& y) {
    return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(),
                                        y.data() + y.size());
  });
  g.positive_roots = queue;
  g.dimension = rank + 2 * static_cast<std::int64_t>(queue.size());

  g.highest_root = *std::max_element(queue.begin(), queue.end(),
                                     [](const IVec& x, const IVec& y) { return x.sum() < y.sum(); });
  g.coxeter = g.highest_root.sum() + 1;
  g.comarks.resize(rank);
  std::int64_t hv = 1;
  for (int i = 0; i < rank; ++i) {
    g.comarks(i) = g.highest_root(i) * g.symmetrizer[i] / dmax;
    hv += g.comarks(i);
  }
  g.dual_coxeter = hv;
  g.weyl_vector = IVec::Ones(rank);
  return g;
}

SimpleLieAlgebra parse_algebra(const std::string& spec) {
  if (spec.size() < 2 || !std::isalpha(static_cast<unsigned char>(spec[0])))
    throw Error(ErrorCode::InvalidInput, "bad algebra spec '" + spec + "', expected X<rank>");
  for (std::size_t i = 1; i < spec.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(spec[i])))
      throw Error(ErrorCode::InvalidInput, "bad algebra spec '" + spec + "', expected X<rank>");
  return build_algebra(spec[0], std::stoi(spec.substr(1)));
}

IVec root_to_weight(const SimpleLieAlgebra& alg, const IVec& root) { return alg.cartan * root; }

Rational weight_product(const SimpleLieAlgebra& alg, const IVec& a, const IVec& b) {
  Rational s(0);
  for (int i = 0; i < alg.rank; ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < alg.rank; ++j)
      if (b(j) != 0) s += alg.metric(i, j) * Rational(a(i) * b(j));
  }
  return s;
}

std::int64_t level_of(const SimpleLieAlgebra& alg, const IVec& lambda) {
  return alg.comarks.dot(lambda);
}

// ---- Weyl group ----

void weyl_traverse(const SimpleLieAlgebra& alg, std::size_t cap,
                   const std::function<void(const WeylElement&)>& visit) {
  if (cap < 1) throw Error(ErrorCode::InvalidInput, "Weyl cap must be positive");
  const int n = alg.rank;
  std::vector<IMat> gens(n);
  for (int i = 0; i < n; ++i) {
    gens[i] = IMat::Identity(n, n);
    gens[i].col(i) -= alg.cartan.col(i);
  }
  // Reflection graph is bipartite by length, so neighbours of layer L lie in L-1 or L+1.
  std::set<std::vector<std::int64_t>> prev, cur;
  std::vector<WeylElement> layer(1);
  layer[0].action = IMat::Identity(n, n);
  cur.insert(key(alg.weyl_vector));
  std::size_t count = 0;
  int sign = 1;
  while (!layer.empty()) {
    for (auto& w : layer) {
      if (++count > cap) throw CapExceeded(count - 1, cap);
      w.sign = sign;
      visit(w);
    }
    std::set<std::vector<std::int64_t>> next;
    std::vector<WeylElement> nlayer;
    for (const auto& w : layer) {
      for (int i = 0; i < n; ++i) {
        IMat m = gens[i] * w.action;
        auto k = key(m * alg.weyl_vector);
        if (prev.count(k) || cur.count(k) || !next.insert(k).second) continue;
        WeylElement e;
        e.word.reserve(w.word.size() + 1);
        e.word.push_back(i);
        e.word.insert(e.word.end(), w.word.begin(), w.word.end());
        e.action = std::move(m);
        nlayer.push_back(std::move(e));
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
    layer = std::move(nlayer);
    sign = -sign;
  }
  ++g_traversals;
}

std::vector<WeylElement> weyl_group(const SimpleLieAlgebra& alg, std::size_t cap) {
  std::vector<WeylElement> out;
  weyl_traverse(alg, cap, [&](const WeylElement& w) { out.push_back(w); });
  return out;
}

std::size_t weyl_traversal_count() { return g_traversals.load(); }

// ---- lattices ----

SmithForm smith_normal_form(const IMat& a) {
  const Eigen::Index m = a.rows(), n = a.cols();
  SmithForm f{IMat::Identity(m, m), a, IMat::Identity(n, n)};
  IMat& D = f.D;
  for (Eigen::Index t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < m; ++i)
        for (Eigen::Index j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi < 0 || std::abs(D(i, j)) < std::abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) return f;
      D.row(t).swap(D.row(pi));
      f.U.row(t).swap(f.U.row(pi));
      D.col(t).swap(D.col(pj));
      f.V.col(t).swap(f.V.col(pj));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < m; ++i) {
        std::int64_t q = D(i, t) / D(t, t);
        D.row(i) -= q * D.row(t);
        f.U.row(i) -= q * f.U.row(t);
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < n; ++j) {
        std::int64_t q = D(t, j) / D(t, t);
        D.col(j) -= q * D.col(t);
        f.V.col(j) -= q * f.V.col(t);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and retry.
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < m && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      D.row(t) += D.row(bad);
      f.U.row(t) += f.U.row(bad);
    }
    if (D(t, t) < 0) {
      D.row(t) *= -1;
      f.U.row(t) *= -1;
    }
  }
  return f;
}

std::int64_t determinant(const IMat& a) {
  // Bareiss fraction-free elimination.
  IMat m = a;
  const Eigen::Index n = m.rows();
  std::int64_t sign = 1, prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.row(k).swap(m.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return n == 0 ? 1 : sign * m(n - 1, n - 1);
}

std::int64_t CenterGroup::order() const {
  std::int64_t o = 1;
  for (auto f : factors) o *= f;
  return o;
}

CenterGroup center_group(const SimpleLieAlgebra& alg) {
  // Coroots in the coweight basis are the rows of the Cartan matrix; with
  // U A V = D the coordinates z V mod D identify the quotient.
  SmithForm f = smith_normal_form(alg.cartan);
  Mat<Rational> vinv = inverse(to_rational(f.V));
  CenterGroup c;
  for (int i = 0; i < alg.rank; ++i) {
    if (f.D(i, i) == 1) continue;
    c.factors.push_back(f.D(i, i));
    IVec z(alg.rank);
    for (int j = 0; j < alg.rank; ++j) z(j) = vinv(i, j).numerator();
    c.generators.push_back(z);
  }
  return c;
}

// ---- diagram symmetries ----

bool DiagramAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

DiagramAutomorphism DiagramAutomorphism::compose(const DiagramAutomorphism& other) const {
  DiagramAutomorphism r{std::vector<int>(perm.size()), affine, 1};
  for (std::size_t i = 0; i < perm.size(); ++i) r.perm[i] = perm[other.perm[i]];
  int o = 1;
  for (DiagramAutomorphism p = r; !p.is_identity(); p = p.compose_raw(r)) ++o;
  r.order = o;
  return r;
}

DiagramAutomorphism DiagramAutomorphism::compose_raw(const DiagramAutomorphism& other) const {
  DiagramAutomorphism r{std::vector<int>(perm.size()), affine, 1};
  for (std::size_t i = 0; i < perm.size(); ++i) r.perm[i] = perm[other.perm[i]];
  return r;
}

DiagramAutomorphism DiagramAutomorphism::power(int n) const {
  const int o = order;
  n = ((n % o) + o) % o;
  DiagramAutomorphism r{std::vector<int>(perm.size()), affine, 1};
  std::iota(r.perm.begin(), r.perm.end(), 0);
  for (int i = 0; i < n; ++i) r = compose(r);
  return r;
}

IMat affine_cartan(const SimpleLieAlgebra& alg) {
  const int n = alg.rank;
  IMat a = IMat::Zero(n + 1, n + 1);
  a.bottomRightCorner(n, n) = alg.cartan;
  a(0, 0) = 2;
  for (int j = 0; j < n; ++j) {
    a(0, j + 1) = -alg.comarks.dot(alg.cartan.col(j));
    a(j + 1, 0) = -alg.cartan.row(j).dot(alg.highest_root);
  }
  return a;
}

bool preserves(const IMat& cartan, const std::vector<int>& perm) {
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < perm.size(); ++j)
      if (cartan(perm[i], perm[j]) != cartan(i, j)) return false;
  return true;
}

std::vector<DiagramAutomorphism> diagram_automorphisms(const SimpleLieAlgebra& alg, bool affine) {
  const IMat a = affine ? affine_cartan(alg) : alg.cartan;
  const int n = static_cast<int>(a.rows());
  std::vector<DiagramAutomorphism> out;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      DiagramAutomorphism d{perm, affine, 1};
      int o = 1;
      for (auto p = d; !p.is_identity(); p = p.compose_raw(d)) ++o;
      d.order = o;
      out.push_back(std::move(d));
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || a(c, c) != a(i, i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        ok = a(c, perm[j]) == a(i, j) && a(perm[j], c) == a(j, i);
      if (!ok) continue;
      used[c] = true;
      perm[i] = c;
      place(i + 1);
      used[c] = false;
    }
  };
  place(0);
  return out;
}

IMat longest_element(const SimpleLieAlgebra& alg, int skip) {
  const int n = alg.rank;
  IMat w = IMat::Identity(n, n);
  IVec v = alg.weyl_vector;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (i == skip || v(i) <= 0) continue;
      IMat s = IMat::Identity(n, n);
      s.col(i) -= alg.cartan.col(i);
      w = s * w;
      v = s * v;
      moved = true;
    }
  }
  return w;
}

CenterAutomorphisms center_automorphisms(const SimpleLieAlgebra& alg) {
  // A_j(lambda) = k omega_j + w_0^(j) w_0 lambda at level k.
  const int n = alg.rank;
  const IMat w0 = longest_element(alg);
  CenterAutomorphisms out;
  out.nodes.push_back(0);
  DiagramAutomorphism id{std::vector<int>(n + 1), true, 1};
  std::iota(id.perm.begin(), id.perm.end(), 0);
  out.maps.push_back(id);
  for (int j = 0; j < n; ++j) {
    if (alg.highest_root(j) != 1) continue;
    const IMat wj = longest_element(alg, j) * w0;
    DiagramAutomorphism d{std::vector<int>(n + 1), true, 1};
    for (int i = 0; i <= n; ++i) {
      IVec lam = IVec::Zero(n);
      std::int64_t k = 1;
      if (i > 0) {
        lam(i - 1) = 1;
        k = alg.comarks(i - 1);
      }
      IVec img = wj * lam;
      img(j) += k;
      std::int64_t lev = alg.comarks.dot(img);
      int target = -1;
      if (img.isZero() && lev == 0) target = 0;
      for (int m = 0; m < n && target < 0; ++m) {
        IVec e = IVec::Zero(n);
        e(m) = 1;
        if (img == e) target = m + 1;
      }
      if (target < 0 || (target == 0 && k != 1))
        throw Error(ErrorCode::Internal, "center action does not permute affine nodes");
      d.perm[i] = target;
    }
    int o = 1;
    for (auto p = d; !p.is_identity(); p = p.compose_raw(d)) ++o;
    d.order = o;
    out.nodes.push_back(j + 1);
    out.maps.push_back(d);
  }
  return out;
}

}  // namespace wzw
