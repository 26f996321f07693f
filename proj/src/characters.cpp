#include "wzw/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/LU>

#include "wzw/loopalg.hpp"
#include "wzw/orbit.hpp"

namespace wzw {

std::vector<std::int64_t> QSeries::integers() const {
  std::vector<std::int64_t> out;
  out.reserve(coeff.size());
  for (std::size_t n = 0; n < coeff.size(); ++n) {
    const double r = std::round(coeff[n].real());
    if (std::abs(coeff[n] - Complex(r, 0)) > 1e-6)
      throw Error(ErrorCode::IntegralityFailure,
                  "coefficient at grade " + std::to_string(n) + " is not an integer");
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

Complex QSeries::evaluate(Complex q) const {
  Complex s = 0, p = 1;
  for (const auto& c : coeff) {
    s += c * p;
    p *= q;
  }
  return s * std::exp(std::log(q) * static_cast<double>(boost::rational_cast<long double>(leading)));
}

namespace {

QSeries from_integers(const IntSeries& s, Grading g, Rational leading = Rational(0)) {
  QSeries q;
  q.grading = g;
  q.leading = leading;
  for (auto c : s) q.coeff.emplace_back(static_cast<double>(c), 0.0);
  return q;
}

IntSeries multiply(const IntSeries& a, const IntSeries& b) {
  IntSeries c(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// 1/s for a series with s[0] = +-1.
IntSeries reciprocal(const IntSeries& s) {
  if (s.empty() || (s[0] != 1 && s[0] != -1))
    throw Error(ErrorCode::Internal, "series not invertible over the integers");
  IntSeries r(s.size(), 0);
  r[0] = s[0];
  for (std::size_t n = 1; n < s.size(); ++n) {
    std::int64_t acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += s[j] * r[n - j];
    r[n] = -acc * s[0];
  }
  return r;
}

}  // namespace

IntSeries pbw_product(const std::vector<std::pair<int, std::int64_t>>& generators, int N) {
  IntSeries s(N + 1, 0);
  s[0] = 1;
  for (const auto& [grade, mult] : generators) {
    if (grade <= 0 || grade > N) continue;
    // Multiply by 1/(1-q^grade), mult times.
    for (std::int64_t m = 0; m < mult; ++m)
      for (int n = grade; n <= N; ++n) s[n] += s[n - grade];
  }
  return s;
}

QSeries verma_character(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda, int N,
                        Grading grading) {
  std::vector<std::pair<int, std::int64_t>> gens;
  if (grading == Grading::Homogeneous) {
    for (int n = 1; n <= N; ++n) gens.emplace_back(n, alg.dimension);
    Rational lead = k + alg.dual_coxeter == 0 ? Rational(0)
                                               : conformal_weight(alg, k, lambda) - central_charge(alg, k) / Rational(24);
    return from_integers(pbw_product(gens, N), grading, lead);
  }
  // Principal: negative roots -(alpha + n delta) of height ht(alpha) + n h.
  const std::int64_t h = alg.coxeter;
  for (const auto& r : alg.positive_roots) {
    const std::int64_t ht = r.sum();
    for (std::int64_t n = 0; ht + n * h <= N; ++n) gens.emplace_back(static_cast<int>(ht + n * h), 1);
    for (std::int64_t n = 1; n * h - ht <= N; ++n) gens.emplace_back(static_cast<int>(n * h - ht), 1);
  }
  for (std::int64_t n = 1; n * h <= N; ++n) gens.emplace_back(static_cast<int>(n * h), alg.rank);
  return from_integers(pbw_product(gens, N), grading);
}

QSeries twining_verma_character(const SimpleLieAlgebra& alg, const IVec& affine_lambda,
                                const DiagramAutomorphism& w, int N) {
  if (affine_lambda.size() != alg.rank + 1 || static_cast<int>(w.perm.size()) != alg.rank + 1)
    throw Error(ErrorCode::InvalidInput, "twining character needs affine labels and an affine automorphism");
  for (int i = 0; i <= alg.rank; ++i)
    if (affine_lambda(w.perm[i]) != affine_lambda(i))
      throw Error(ErrorCode::PreconditionFailure, "automorphism does not fix the highest weight");
  const SimplyLacedAlgebra g(alg);
  const GradedAction act = lowering_action(g, w, N);
  // log prod_g det(1 - q^g M_g)^{-1} = sum_g sum_j tr(M_g^j) q^{gj} / j
  std::vector<Rational> log(N + 1, Rational(0));
  for (int grade = 1; grade <= N; ++grade) {
    if (act.dims[grade] == 0) continue;
    const Mat<Rational>& m = act.mats[grade];
    Mat<Rational> p = m;
    for (int j = 1; grade * j <= N; ++j) {
      log[grade * j] += p.trace() / Rational(j);
      p = (p * m).eval();
    }
  }
  // exp via n a_n = sum_{j=1}^n j l_j a_{n-j}
  std::vector<Rational> a(N + 1, Rational(0));
  a[0] = Rational(1);
  for (int n = 1; n <= N; ++n) {
    Rational acc(0);
    for (int j = 1; j <= n; ++j) acc += Rational(j) * log[j] * a[n - j];
    a[n] = acc / Rational(n);
  }
  IntSeries s(N + 1);
  for (int n = 0; n <= N; ++n) {
    if (a[n].denominator() != 1)
      throw Error(ErrorCode::IntegralityFailure, "twining coefficient " + to_string(a[n]) + " not integral");
    s[n] = a[n].numerator();
  }
  return from_integers(s, Grading::Principal);
}

QSeries kac_moody_verma_character(const IMat& gcm, const std::vector<int>& grades, int N) {
  const int n = static_cast<int>(gcm.rows());
  IntSeries denom(N + 1, 0);
  denom[0] = 1;
  if (n > 1) {
    // Breadth-first over w rho by length; state = rho - w rho in root coordinates.
    using Key = std::vector<std::int64_t>;
    std::set<Key> layer{Key(n, 0)};
    int length = 0;
    while (!layer.empty()) {
      std::set<Key> next;
      ++length;
      for (const auto& c : layer) {
        // Dynkin labels of w rho = rho - A c (columns act on roots)
        for (int i = 0; i < n; ++i) {
          std::int64_t label = 1;
          for (int j = 0; j < n; ++j) label -= gcm(i, j) * c[j];
          if (label <= 0) continue;
          Key d = c;
          d[i] += label;
          std::int64_t grade = 0;
          for (int j = 0; j < n; ++j) grade += d[j] * grades[j];
          if (grade > N) continue;
          if (next.insert(d).second) denom[grade] += (length % 2 == 0) ? 1 : -1;
        }
      }
      layer = std::move(next);
    }
  }
  return from_integers(reciprocal(denom), Grading::Principal);
}

QSeries orbit_verma_character(const SimpleLieAlgebra& alg, const DiagramAutomorphism& w, int N) {
  const IMat ac = affine_cartan(alg);
  const IMat f = fold_cartan(ac, w);
  std::vector<int> seen(w.perm.size(), 0), grades;
  for (std::size_t i = 0; i < w.perm.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    std::int64_t s = 1;
    for (int j = static_cast<int>(i); !seen[j]; j = w.perm[j]) {
      seen[j] = 1;
      ++len;
      if (j != static_cast<int>(i)) s -= ac(i, j);
    }
    grades.push_back(static_cast<int>(s * len));
  }
  return kac_moody_verma_character(f, grades, N);
}

QSeries irreducible_character(const SimpleLieAlgebra& alg, std::int64_t k, const IVec& lambda,
                              int N) {
  const int r = alg.rank;
  const std::int64_t c = k + alg.dual_coxeter;
  const std::int64_t dmax = *std::max_element(alg.symmetrizer.begin(), alg.symmetrizer.end());
  const IVec x = lambda + alg.weyl_vector;
  // Coroots in Dynkin labels: alpha_j^vee = column_j * dmax / d_j.
  IMat cor(r, r);
  for (int j = 0; j < r; ++j) cor.col(j) = alg.cartan.col(j) * (dmax / alg.symmetrizer[j]);
  Eigen::MatrixXd G(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) G(i, j) = boost::rational_cast<double>(alg.metric(i, j));
  const Eigen::MatrixXd gram = cor.cast<double>().transpose() * G * cor.cast<double>();
  const Eigen::MatrixXd gram_inv = gram.inverse();
  const Eigen::VectorXd xd = x.cast<double>();
  const double xnorm = std::sqrt(xd.dot(G * xd));
  // |x + c gamma|^2 <= |x|^2 + 2 c N bounds |gamma| <= (|x| + sqrt(|x|^2 + 2cN)) / c.
  const double radius = (xnorm + std::sqrt(xnorm * xnorm + 2.0 * c * N)) / c;
  std::vector<int> bound(r);
  for (int i = 0; i < r; ++i) bound[i] = static_cast<int>(std::ceil(radius * std::sqrt(gram_inv(i, i)))) + 1;

  // (v, alpha) for a positive root alpha = sum_j v_j alpha_j d_j / dmax
  auto pair = [&](const IVec& v, const IVec& a) {
    Rational s(0);
    for (int j = 0; j < r; ++j) s += Rational(v(j) * a(j) * alg.symmetrizer[j], dmax);
    return s;
  };
  std::vector<std::int64_t> numer(N + 1, 0);
  IVec gamma = IVec::Zero(r);
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = -bound[i];
  const Rational x2 = weight_product(alg, x, x);
  while (true) {
    for (int i = 0; i < r; ++i) gamma(i) = idx[i];
    const IVec v = x + c * (cor * gamma);
    const Rational shift = (weight_product(alg, v, v) - x2) / Rational(2 * c);
    if (shift.denominator() != 1) throw Error(ErrorCode::Internal, "non-integral Weyl-Kac grade");
    const std::int64_t grade = shift.numerator();
    if (grade >= 0 && grade <= N) {
      Rational d(1);
      for (const auto& a : alg.positive_roots) d *= pair(v, a) / pair(alg.weyl_vector, a);
      if (d.denominator() != 1) throw Error(ErrorCode::Internal, "non-integral Weyl dimension");
      numer[grade] += d.numerator();
    }
    int i = 0;
    for (; i < r && ++idx[i] > bound[i]; ++i) idx[i] = -bound[i];
    if (i == r) break;
  }
  std::vector<std::pair<int, std::int64_t>> gens;
  for (int n = 1; n <= N; ++n) gens.emplace_back(n, alg.dimension);
  const IntSeries s = multiply(numer, pbw_product(gens, N));
  return from_integers(s, Grading::Homogeneous,
                       conformal_weight(alg, k, lambda) - central_charge(alg, k) / Rational(24));
}

ModularCheck numeric_modular_check(const ModularData& md, const CharacterSupplier& chars) {
  const int n = md.size();
  const double q = std::exp(-2.0 * std::numbers::pi);
  CVec v(n);
  ModularCheck out;
  for (int m = 0; m < n; ++m) {
    const QSeries s = chars(m);
    v(m) = s.evaluate(Complex(q, 0));
    const int N = s.truncation();
    const double last = std::abs(s.coeff.back());
    const double lead = boost::rational_cast<double>(s.leading);
    // Geometric bound on the omitted grades using the last computed coefficient.
    out.tail_estimate = std::max(out.tail_estimate, 10.0 * last * std::pow(q, N + 1 + lead));
  }
  const CVec w = md.S * v;
  for (int m = 0; m < n; ++m) {
    out.residuals.push_back(std::abs(v(m) - w(m)));
    out.max_residual = std::max(out.max_residual, out.residuals.back());
  }
  return out;
}

CharacterSupplier wzw_characters(const SimpleLieAlgebra& alg, std::int64_t k,
                                 const ModularData& md, int N) {
  return [&alg, k, &md, N](int label) {
    if (k == 0) {
      QSeries one;
      one.coeff.assign(N + 1, 0.0);
      one.coeff[0] = 1.0;
      return one;
    }
    return irreducible_character(alg, k, md.weights[label], N);
  };
}

}  // namespace wzw
