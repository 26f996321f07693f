#pragma once

#include <climits>
#include <map>

#include <boost/multiprecision/cpp_int.hpp>

namespace wzw {

using BigRational = boost::multiprecision::cpp_rational;

// Truncated Laurent series in t with exact rational coefficients. Every
// coefficient of exponent < precision() is known; exact polynomials have
// unbounded precision.
class Laurent {
 public:
  static constexpr int kExact = INT_MAX / 4;

  Laurent() = default;
  static Laurent monomial(int n, const BigRational& c = 1);
  // (t + c)^{-1}: the pole t^{-1} for c = 0, otherwise a power series to t^prec.
  static Laurent shifted_inverse(const BigRational& c, int prec);
  // (t + c)^p for any integer p.
  static Laurent shifted_power(const BigRational& c, int p, int prec);

  int precision() const { return prec_; }
  // Lowest exponent with a nonzero coefficient, precision() for the zero series.
  int valuation() const;
  BigRational at(int n) const;  // throws if n >= precision()
  BigRational residue() const { return at(-1); }
  Laurent derivative() const;
  const std::map<int, BigRational>& terms() const { return c_; }

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent operator*(const BigRational& s) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }

  // Max |coefficient| over exponents known in both series.
  friend BigRational max_difference(const Laurent& a, const Laurent& b);

 private:
  void trim();
  std::map<int, BigRational> c_;
  int prec_ = kExact;
};

}  // namespace wzw
