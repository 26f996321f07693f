#include "wzw/loopalg.hpp"

#include <algorithm>

namespace wzw {

namespace {
std::vector<std::int64_t> key(const IVec& v) { return {v.data(), v.data() + v.size()}; }
}  // namespace

SimplyLacedAlgebra::SimplyLacedAlgebra(const SimpleLieAlgebra& alg) : alg_(alg) {
  if (alg.series != 'A' && alg.series != 'D' && alg.series != 'E')
    throw Error(ErrorCode::NotImplemented, "loop algebra engine needs a simply-laced algebra, got " +
                                               alg.name());
  for (const auto& r : alg.positive_roots) roots_.push_back(r);
  for (const auto& r : alg.positive_roots) roots_.push_back(-r);
  for (std::size_t i = 0; i < roots_.size(); ++i)
    index_[key(roots_[i])] = alg.rank + static_cast<int>(i);
}

int SimplyLacedAlgebra::root_basis(const IVec& alpha) const {
  auto it = index_.find(key(alpha));
  return it == index_.end() ? -1 : it->second;
}

int SimplyLacedAlgebra::eps(const IVec& a, const IVec& b) const {
  // Bimultiplicative; eps(a_i,a_i) = -1 and eps(a_i,a_j) = -1 for linked i < j.
  std::int64_t e = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      const bool neg = i == j || (i < j && alg_.cartan(i, j) == -1);
      if (neg) e += a(i) * b(j);
    }
  return (e % 2 == 0) ? 1 : -1;
}

std::vector<std::pair<int, Rational>> SimplyLacedAlgebra::bracket(int a, int b) const {
  std::vector<std::pair<int, Rational>> out;
  const int r = rank();
  if (is_cartan(a) && is_cartan(b)) return out;
  if (is_cartan(a) || is_cartan(b)) {
    const bool flip = !is_cartan(a);
    const int h = flip ? b : a, e = flip ? a : b;
    // [H_i, E_b] = (alpha_i, b) E_b
    const std::int64_t v = alg_.cartan.row(h).dot(root_of(e));
    if (v != 0) out.emplace_back(e, Rational(flip ? -v : v));
    return out;
  }
  const IVec& x = root_of(a);
  const IVec& y = root_of(b);
  const IVec s = x + y;
  if (s.isZero()) {
    // [E_x, E_{-x}] = eps(x,-x) x
    const int e = eps(x, y);
    for (int i = 0; i < r; ++i)
      if (x(i) != 0) out.emplace_back(i, Rational(e * x(i)));
    return out;
  }
  const int t = root_basis(s);
  if (t >= 0) out.emplace_back(t, Rational(eps(x, y)));
  return out;
}

Rational SimplyLacedAlgebra::form(int a, int b) const {
  if (is_cartan(a) && is_cartan(b)) return Rational(alg_.cartan(a, b));
  if (is_cartan(a) || is_cartan(b)) return Rational(0);
  if ((root_of(a) + root_of(b)).isZero()) return Rational(eps(root_of(a), root_of(b)));
  return Rational(0);
}

bool LoopElement::is_zero() const {
  if (central != Rational(0)) return false;
  for (const auto& [k, v] : coeff)
    if (v != Rational(0)) return false;
  return true;
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
  for (const auto& [k, v] : o.coeff) {
    Rational& c = coeff[k];
    c += v;
    if (c == Rational(0)) coeff.erase(k);
  }
  central += o.central;
  return *this;
}

LoopElement LoopElement::operator*(const Rational& s) const {
  LoopElement r;
  if (s == Rational(0)) return r;
  for (const auto& [k, v] : coeff) r.coeff[k] = v * s;
  r.central = central * s;
  return r;
}

LoopElement loop_bracket(const SimplyLacedAlgebra& g, const LoopElement& a, const LoopElement& b) {
  LoopElement r;
  for (const auto& [ka, va] : a.coeff)
    for (const auto& [kb, vb] : b.coeff) {
      const Rational c = va * vb;
      for (const auto& [t, w] : g.bracket(ka.first, kb.first)) {
        LoopElement term;
        term.coeff[{t, ka.second + kb.second}] = c * w;
        r += term;
      }
      if (ka.second + kb.second == 0 && ka.second != 0)
        r.central += c * Rational(ka.second) * g.form(ka.first, kb.first);
    }
  return r;
}

std::vector<LoopElement> affine_lowering_generators(const SimplyLacedAlgebra& g) {
  const SimpleLieAlgebra& alg = g.algebra();
  std::vector<LoopElement> f(alg.rank + 1);
  f[0].coeff[{g.root_basis(alg.highest_root), -1}] = Rational(-1);
  for (int i = 0; i < alg.rank; ++i) {
    IVec a = IVec::Zero(alg.rank);
    a(i) = -1;
    f[i + 1].coeff[{g.root_basis(a), 0}] = Rational(-1);
  }
  return f;
}

namespace {

// Row-reduced basis of a subspace; each row remembers its expression in the
// vectors added so far.
class Span {
 public:
  // Returns false when v is dependent on the stored vectors.
  bool add(const LoopElement& v) {
    std::vector<Rational> combo(added_ + 1, Rational(0));
    combo[added_] = Rational(1);
    auto r = reduce(v.coeff, combo);
    if (r.empty()) return false;
    const auto pivot = r.begin()->first;
    const Rational p = r.begin()->second;
    for (auto& [k, x] : r) x /= p;
    for (auto& x : combo) x /= p;
    pivots_.push_back(pivot);
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    ++added_;
    return true;
  }
  // Coordinates of v in terms of the added vectors; throws if outside the span.
  std::vector<Rational> coordinates(const LoopElement& v) const {
    std::vector<Rational> combo(added_, Rational(0));
    auto rest = reduce(v.coeff, combo, -1);
    if (!rest.empty()) throw Error(ErrorCode::Internal, "image leaves the graded piece");
    return combo;
  }

 private:
  using Sparse = std::map<std::pair<int, int>, Rational>;
  // sign = +1: track v - sum x_i row_i (for add); sign = -1: track sum x_i row_i.
  Sparse reduce(Sparse v, std::vector<Rational>& combo, int sign = 1) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      auto it = v.find(pivots_[i]);
      if (it == v.end()) continue;
      const Rational x = it->second;
      for (const auto& [k, y] : rows_[i]) {
        Rational& t = v[k];
        t -= x * y;
        if (t == Rational(0)) v.erase(k);
      }
      for (std::size_t j = 0; j < combos_[i].size(); ++j)
        combo[j] -= Rational(sign) * x * combos_[i][j];
    }
    return v;
  }

  std::vector<std::pair<int, int>> pivots_;
  std::vector<Sparse> rows_;
  std::vector<std::vector<Rational>> combos_;
  std::size_t added_ = 0;
};

}  // namespace

GradedAction lowering_action(const SimplyLacedAlgebra& g, const DiagramAutomorphism& w, int N) {
  const auto F = affine_lowering_generators(g);
  const int nodes = static_cast<int>(F.size());
  GradedAction out;
  out.dims.assign(N + 1, 0);
  out.mats.assign(N + 1, Mat<Rational>());
  std::vector<LoopElement> basis = F, image(nodes);
  for (int i = 0; i < nodes; ++i) image[i] = F[w.perm[i]];
  for (int grade = 1; grade <= N; ++grade) {
    if (grade > 1) {
      std::vector<LoopElement> nb, ni;
      Span span;
      for (int i = 0; i < nodes; ++i)
        for (std::size_t b = 0; b < basis.size(); ++b) {
          LoopElement v = loop_bracket(g, F[i], basis[b]);
          if (span.add(v)) {
            nb.push_back(v);
            ni.push_back(loop_bracket(g, F[w.perm[i]], image[b]));
          }
        }
      basis = std::move(nb);
      image = std::move(ni);
    }
    Span span;
    for (const auto& b : basis) span.add(b);
    const int d = static_cast<int>(basis.size());
    Mat<Rational> m(d, d);
    for (int c = 0; c < d; ++c) {
      const auto x = span.coordinates(image[c]);
      for (int r = 0; r < d; ++r) m(r, c) = x[r];
    }
    out.dims[grade] = d;
    out.mats[grade] = m;
  }
  return out;
}

}  // namespace wzw
