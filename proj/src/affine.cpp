#include "wzw/affine.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

namespace wzw {

CVec ModularData::T() const {
  CVec t(size());
  for (int i = 0; i < size(); ++i) t(i) = root_of_unity(t_exponent(i));
  return t;
}

int ModularData::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels[i] == label) return i;
  return -1;
}

std::vector<IVec> integrable_weights(const SimpleLieAlgebra& alg, std::int64_t k) {
  std::vector<IVec> out;
  IVec cur = IVec::Zero(alg.rank);
  std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t left) {
    if (i == alg.rank) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v * alg.comarks(i) <= left; ++v) {
      cur(i) = v;
      rec(i + 1, left - v * alg.comarks(i));
    }
    cur(i) = 0;
  };
  if (k >= 0) rec(0, k);
  return out;
}

Rational conformal_weight(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda) {
  IVec shifted = lambda + 2 * alg.weyl_vector;
  return weight_product(alg, lambda, shifted) / Rational(2 * (k + alg.dual_coxeter));
}

Rational central_charge(const SimpleLieAlgebra& alg, std::int64_t k) {
  return Rational(k * alg.dimension, k + alg.dual_coxeter);
}

std::string weight_label(const IVec& lambda) {
  std::ostringstream s;
  s << '(';
  for (Eigen::Index i = 0; i < lambda.size(); ++i) s << (i ? "," : "") << lambda(i);
  s << ')';
  return s.str();
}

ModularData kac_peterson(const SimpleLieAlgebra& alg, std::int64_t k, std::size_t weyl_cap) {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "level must be non-negative");
  ModularData md;
  md.name = alg.name() + "_k" + std::to_string(k);
  md.weights = integrable_weights(alg, k);
  for (const auto& w : md.weights) {
    md.labels.push_back(weight_label(w));
    md.delta.push_back(conformal_weight(alg, k, w));
  }
  md.c = central_charge(alg, k);
  const int n = md.size();
  if (k == 0) {
    md.S = CMat::Ones(1, 1);
    return md;
  }

  std::vector<IMat> actions;
  std::vector<int> signs;
  weyl_traverse(alg, weyl_cap, [&](const WeylElement& w) {
    actions.push_back(w.action);
    signs.push_back(w.sign);
  });

  // Integer form of the metric; phases live in Z / (L (k + h^vee)).
  std::int64_t L = 1;
  for (int i = 0; i < alg.rank; ++i)
    for (int j = 0; j < alg.rank; ++j) L = std::lcm(L, alg.metric(i, j).denominator());
  IMat G(alg.rank, alg.rank);
  for (int i = 0; i < alg.rank; ++i)
    for (int j = 0; j < alg.rank; ++j) G(i, j) = (alg.metric(i, j) * Rational(L)).numerator();
  const std::int64_t M = L * (k + alg.dual_coxeter);
  std::vector<Complex> phase(M);
  for (std::int64_t m = 0; m < M; ++m) phase[m] = root_of_unity(Rational(-m, M));

  md.S = CMat::Zero(n, n);
  parallel_for(n, [&](std::size_t l) {
    const IVec lr = md.weights[l] + alg.weyl_vector;
    std::vector<Complex> row(n, Complex(0, 0));
    for (std::size_t w = 0; w < actions.size(); ++w) {
      const IVec u = G * (actions[w] * lr);
      for (int m = 0; m < n; ++m) {
        std::int64_t e = u.dot(md.weights[m] + alg.weyl_vector) % M;
        if (e < 0) e += M;
        row[m] += static_cast<double>(signs[w]) * phase[e];
      }
    }
    for (int m = 0; m < n; ++m) md.S(l, m) = row[m];
  });

  const double norm = md.S.row(0).norm();
  const Complex ph = md.S(0, 0) / std::abs(md.S(0, 0));
  md.S /= (norm * ph);
  return md;
}

Residuals modular_residuals(const ModularData& md) {
  const int n = md.size();
  const CMat& S = md.S;
  const CMat I = CMat::Identity(n, n);
  const CMat T = md.T().asDiagonal();
  const CMat S2 = S * S;
  const CMat ST = S * T;
  Residuals r;
  r.emplace_back("unitarity", max_abs(S * S.adjoint() - I));
  r.emplace_back("symmetry", max_abs(S - S.transpose()));
  r.emplace_back("S4", max_abs(S2 * S2 - I));
  r.emplace_back("ST3", max_abs(ST * ST * ST - S2));
  double perm = 0.0;
  for (int i = 0; i < n; ++i) {
    Eigen::Index j;
    S2.row(i).cwiseAbs().maxCoeff(&j);
    for (int m = 0; m < n; ++m)
      perm = std::max(perm, std::abs(S2(i, m) - Complex(m == j ? 1.0 : 0.0, 0.0)));
  }
  r.emplace_back("S2_permutation", perm);
  double vac = 0.0;
  for (int m = 0; m < n; ++m) {
    const Complex v = S(md.vacuum, m);
    vac = std::max(vac, v.real() > 0 ? std::abs(v.imag()) : 1.0 + std::abs(v));
  }
  r.emplace_back("vacuum_row_positive", vac);
  return r;
}

void require(const Residuals& r, double tol, const std::string& what) {
  const std::pair<std::string, double>* worst = nullptr;
  for (const auto& e : r)
    if (!(e.second <= tol) && (!worst || e.second > worst->second)) worst = &e;
  if (worst) {
    std::ostringstream s;
    s << what << ": relation " << worst->first << " violated, residual " << worst->second;
    throw Error(ErrorCode::InvariantFailure, s.str(), worst->second);
  }
}

std::vector<int> conjugation(const ModularData& md) {
  const CMat S2 = md.S * md.S;
  std::vector<int> c(md.size());
  for (int i = 0; i < md.size(); ++i) {
    Eigen::Index j;
    S2.row(i).cwiseAbs().maxCoeff(&j);
    c[i] = static_cast<int>(j);
  }
  return c;
}

IVec affine_labels(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda) {
  IVec a(alg.rank + 1);
  a(0) = k - level_of(alg, lambda);
  a.tail(alg.rank) = lambda;
  return a;
}

std::vector<int> label_action(const SimpleLieAlgebra& alg, std::int64_t k,
                              const std::vector<IVec>& weights, const DiagramAutomorphism& a) {
  std::map<std::vector<std::int64_t>, int> index;
  for (std::size_t i = 0; i < weights.size(); ++i)
    index[{weights[i].data(), weights[i].data() + weights[i].size()}] = static_cast<int>(i);
  std::vector<int> out(weights.size());
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const IVec lab = affine_labels(alg, k, weights[i]);
    IVec img(lab.size());
    for (Eigen::Index j = 0; j < lab.size(); ++j) img(a.perm[j]) = lab(j);
    auto it = index.find({img.data() + 1, img.data() + img.size()});
    if (it == index.end()) throw Error(ErrorCode::Internal, "automorphism leaves the integrable set");
    out[i] = it->second;
  }
  return out;
}

}  // namespace wzw
