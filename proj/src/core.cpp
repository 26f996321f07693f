#include "wzw/core.hpp"

#include <cmath>
#include <atomic>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace wzw {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput: return "E_INVALID_INPUT";
    case ErrorCode::CapExceeded: return "E_WEYL_CAP";
    case ErrorCode::NotImplemented: return "E_NOT_IMPLEMENTED";
    case ErrorCode::IntegralityFailure: return "E_INTEGRALITY";
    case ErrorCode::InvariantFailure: return "E_INVARIANT";
    case ErrorCode::PreconditionFailure: return "E_PRECONDITION";
    case ErrorCode::PhaseFixFailure: return "E_PHASE_FIX";
    case ErrorCode::ConjectureViolation: return "E_CONJECTURE_VIOLATION";
    case ErrorCode::CacheCorrupt: return "E_CACHE_CORRUPT";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "not a rational number: '" + s + "'");
  }
}

Rational frac(const Rational& q) {
  auto n = q.numerator() % q.denominator();
  if (n < 0) n += q.denominator();
  return Rational(n, q.denominator());
}

Complex root_of_unity(const Rational& q) {
  Rational r = frac(q);
  double a = 2.0 * std::numbers::pi * static_cast<double>(r.numerator()) /
             static_cast<double>(r.denominator());
  // Hit the common angles exactly.
  if (r.numerator() == 0) return {1.0, 0.0};
  if (r == Rational(1, 2)) return {-1.0, 0.0};
  if (r == Rational(1, 4)) return {0.0, 1.0};
  if (r == Rational(3, 4)) return {0.0, -1.0};
  return {std::cos(a), std::sin(a)};
}

double max_abs(const CMat& m) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r = std::max(r, std::abs(m(i, j)));
  return r;
}

Mat<Rational> to_rational(const IMat& a) {
  Mat<Rational> r(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

Mat<Rational> inverse(const Mat<Rational>& a) {
  const Eigen::Index n = a.rows();
  Mat<Rational> m = a;
  Mat<Rational> inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = Rational(i == j ? 1 : 0);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && m(p, c) == Rational(0)) ++p;
    if (p == n) throw Error(ErrorCode::Internal, "singular matrix");
    m.row(c).swap(m.row(p));
    inv.row(c).swap(inv.row(p));
    Rational piv = m(c, c);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == c || m(r, c) == Rational(0)) continue;
      Rational f = m(r, c);
      for (Eigen::Index j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex guard;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(guard);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wzw
