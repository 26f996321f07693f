#include "wzw/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace wzw {

int AbelianGroup::inverse(int a) const {
  for (int b = 0; b < size(); ++b)
    if (mul(a, b) == identity) return b;
  throw Error(ErrorCode::Internal, "group element without inverse");
}

int AbelianGroup::order(int a) const {
  int o = 1;
  for (int x = a; x != identity; x = mul(x, a)) ++o;
  return o;
}

int AbelianGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < size(); ++a) e = std::lcm(e, order(a));
  return e;
}

std::vector<std::vector<Rational>> AbelianGroup::characters() const {
  const int n = size();
  // Greedy generating set together with the span built so far.
  std::vector<int> gens;
  std::vector<bool> in_span(n, false);
  std::vector<int> span{identity};
  in_span[identity] = true;
  for (int a = 0; a < n; ++a) {
    if (in_span[a]) continue;
    gens.push_back(a);
    std::vector<int> grown = span;
    for (int x = a; x != identity; x = mul(x, a))
      for (int s : span) {
        int y = mul(s, x);
        if (!in_span[y]) {
          in_span[y] = true;
          grown.push_back(y);
        }
      }
    span = grown;
  }
  std::vector<std::vector<Rational>> out;
  std::vector<int> val(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < gens.size()) {
      const int o = order(gens[i]);
      for (int v = 0; v < o; ++v) {
        val[i] = v;
        rec(i + 1);
      }
      return;
    }
    // Propagate through the span; reject if inconsistent.
    std::vector<Rational> chi(n);
    std::vector<bool> set(n, false);
    chi[identity] = Rational(0);
    set[identity] = true;
    std::vector<int> frontier{identity};
    for (std::size_t k = 0; k < frontier.size(); ++k) {
      int x = frontier[k];
      for (std::size_t g = 0; g < gens.size(); ++g) {
        int y = mul(x, gens[g]);
        Rational q = frac(chi[x] + Rational(val[g], order(gens[g])));
        if (!set[y]) {
          chi[y] = q;
          set[y] = true;
          frontier.push_back(y);
        } else if (chi[y] != q) {
          return;
        }
      }
    }
    out.push_back(std::move(chi));
  };
  rec(0);
  if (static_cast<int>(out.size()) != n)
    throw Error(ErrorCode::Internal, "character count differs from group order");
  return out;
}

AbelianGroup cyclic_product(const std::vector<std::int64_t>& factors) {
  std::int64_t n = 1;
  for (auto f : factors) n *= f;
  auto digits = [&](std::int64_t a) {
    std::vector<std::int64_t> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = a % factors[i];
      a /= factors[i];
    }
    return d;
  };
  AbelianGroup g;
  g.table.resize(n, n);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) {
      auto da = digits(a), db = digits(b);
      std::int64_t c = 0;
      for (std::size_t i = 0; i < factors.size(); ++i) c = c * factors[i] + (da[i] + db[i]) % factors[i];
      g.table(a, b) = c;
    }
  return g;
}

AbelianGroup direct_power(const AbelianGroup& g, int m) {
  const std::int64_t n = g.size();
  std::int64_t total = 1;
  for (int i = 0; i < m; ++i) total *= n;
  AbelianGroup p;
  p.table.resize(total, total);
  for (std::int64_t a = 0; a < total; ++a)
    for (std::int64_t b = 0; b < total; ++b) {
      std::int64_t x = a, y = b, c = 0, place = 1;
      for (int i = 0; i < m; ++i) {
        c += place * g.table(x % n, y % n);
        x /= n;
        y /= n;
        place *= n;
      }
      p.table(a, b) = c;
    }
  std::int64_t id = 0, place = 1;
  for (int i = 0; i < m; ++i) {
    id += place * g.identity;
    place *= n;
  }
  p.identity = static_cast<int>(id);
  return p;
}

std::vector<std::int64_t> invariant_factors(const AbelianGroup& g) {
  const int n = g.size();
  std::vector<int> orders(n);
  for (int a = 0; a < n; ++a) orders[a] = g.order(a);
  // p-parts from counts of elements killed by p^k.
  std::vector<std::vector<std::int64_t>> parts;  // per prime, exponents descending as powers
  int rest = n;
  for (int p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<int> log_counts{0};
    for (std::int64_t pk = p;; pk *= p) {
      // elements killed by p^k
      int c = 0;
      for (int o : orders)
        if (pk % o == 0) ++c;
      int l = 0;
      for (int t = c; t > 1; t /= p) ++l;
      log_counts.push_back(l);
      if (log_counts.back() == log_counts[log_counts.size() - 2]) break;
    }
    // number of cyclic factors of order >= p^k
    std::vector<std::int64_t> powers;
    const int K = static_cast<int>(log_counts.size()) - 1;
    std::vector<int> atleast(K + 1, 0);
    for (int k = 1; k <= K; ++k) atleast[k] = log_counts[k] - log_counts[k - 1];
    for (int k = 1; k <= K; ++k) {
      int exactly = atleast[k] - (k + 1 <= K ? atleast[k + 1] : 0);
      std::int64_t pk = 1;
      for (int t = 0; t < k; ++t) pk *= p;
      for (int e = 0; e < exactly; ++e) powers.push_back(pk);
    }
    std::sort(powers.rbegin(), powers.rend());
    parts.push_back(powers);
  }
  std::size_t len = 0;
  for (auto& v : parts) len = std::max(len, v.size());
  std::vector<std::int64_t> d(len, 1);
  for (auto& v : parts)
    for (std::size_t i = 0; i < v.size(); ++i) d[i] *= v[i];
  std::reverse(d.begin(), d.end());
  return d;
}

bool isomorphic(const AbelianGroup& a, const AbelianGroup& b) {
  return a.size() == b.size() && invariant_factors(a) == invariant_factors(b);
}

}  // namespace wzw
