#include "wzw/laurent.hpp"

#include <algorithm>

#include "wzw/core.hpp"

namespace wzw {

Laurent Laurent::monomial(int n, const BigRational& c) {
  Laurent l;
  if (c != 0) l.c_[n] = c;
  return l;
}

Laurent Laurent::shifted_inverse(const BigRational& c, int prec) {
  if (c == 0) return monomial(-1);
  Laurent l;
  l.prec_ = prec;
  // 1/(t + c) = sum_n (-1)^n t^n / c^{n+1}
  BigRational p = 1 / c;
  for (int n = 0; n < prec; ++n) {
    l.c_[n] = (n % 2 == 0) ? p : BigRational(-p);
    p /= c;
  }
  return l;
}

Laurent Laurent::shifted_power(const BigRational& c, int p, int prec) {
  Laurent base = p >= 0 ? (monomial(1) + monomial(0, c)) : shifted_inverse(c, prec);
  Laurent r = monomial(0);
  for (int i = 0; i < std::abs(p); ++i) r = r * base;
  if (r.prec_ != kExact) {
    // Keep only what the requested precision asks for.
    for (auto it = r.c_.lower_bound(prec); it != r.c_.end();) it = r.c_.erase(it);
    r.prec_ = std::min(r.prec_, prec);
  }
  return r;
}

int Laurent::valuation() const { return c_.empty() ? prec_ : c_.begin()->first; }

BigRational Laurent::at(int n) const {
  if (n >= prec_)
    throw Error(ErrorCode::Internal, "Laurent coefficient t^" + std::to_string(n) +
                                         " beyond truncation t^" + std::to_string(prec_));
  auto it = c_.find(n);
  return it == c_.end() ? BigRational(0) : it->second;
}

Laurent Laurent::derivative() const {
  Laurent d;
  d.prec_ = prec_ == kExact ? kExact : prec_ - 1;
  for (const auto& [n, v] : c_)
    if (n != 0) d.c_[n - 1] = v * n;
  return d;
}

void Laurent::trim() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0 || it->first >= prec_)
      it = c_.erase(it);
    else
      ++it;
  }
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r.prec_ = std::min(prec_, o.prec_);
  for (const auto& [n, v] : o.c_) r.c_[n] += v;
  r.trim();
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + o * BigRational(-1); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  const long pa = prec_ == kExact ? kExact : static_cast<long>(o.valuation()) + prec_;
  const long pb = o.prec_ == kExact ? kExact : static_cast<long>(valuation()) + o.prec_;
  r.prec_ = static_cast<int>(std::clamp<long>(std::min(pa, pb), INT_MIN / 4, kExact));
  for (const auto& [n, v] : c_)
    for (const auto& [m, w] : o.c_)
      if (n + m < r.prec_) r.c_[n + m] += v * w;
  r.trim();
  return r;
}

Laurent Laurent::operator*(const BigRational& s) const {
  Laurent r = *this;
  for (auto& [n, v] : r.c_) v *= s;
  r.trim();
  return r;
}

BigRational max_difference(const Laurent& a, const Laurent& b) {
  const int p = std::min(a.prec_, b.prec_);
  BigRational m = 0;
  auto scan = [&](const Laurent& x) {
    for (const auto& [n, v] : x.c_) {
      if (n >= p) break;
      BigRational d = abs(a.at(n) - b.at(n));
      if (d > m) m = d;
    }
  };
  scan(a);
  scan(b);
  return m;
}

}  // namespace wzw
