#include "wzw/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace wzw {

namespace {

Complex verlinde_sum(const ModularData& md, int genus, const std::vector<int>& mu,
                     const std::function<Complex(int s, int nu)>& entry) {
  Complex total = 0;
  const int o = md.vacuum;
  for (int nu = 0; nu < md.size(); ++nu) {
    const double s0 = md.S(o, nu).real();
    Complex term = std::pow(std::abs(s0), 2.0 - 2.0 * genus);
    for (std::size_t s = 0; s < mu.size() && term != Complex(0); ++s) term *= entry(static_cast<int>(s), nu) / s0;
    total += term;
  }
  return total;
}

Complex trace_sum(const ModularData& md, const SimpleCurrentGroup& g, SJCache& sj, int genus,
                  const std::vector<int>& mu, const CurrentTuple& tuple) {
  return verlinde_sum(md, genus, mu, [&](int s, int nu) {
    return sj.entry(g.currents[tuple[s]], mu[s], nu);
  });
}

int stabilizer_index(const OrbitData& od, int mu, int position) {
  const auto& st = od.stabilizer[mu];
  auto it = std::find(st.begin(), st.end(), position);
  return it == st.end() ? -1 : static_cast<int>(it - st.begin());
}

std::string join_labels(const ModularData& md, const std::vector<int>& v, const SimpleCurrentGroup* g) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += md.labels[g ? g->currents[v[i]] : v[i]];
  }
  return s;
}

}  // namespace

Complex block_rank_sum(const ModularData& md, int genus, const std::vector<int>& mu) {
  if (genus < 0) throw Error(ErrorCode::InvalidInput, "genus must be non-negative");
  for (int m : mu)
    if (m < 0 || m >= md.size()) throw Error(ErrorCode::InvalidInput, "insertion label out of range");
  return verlinde_sum(md, genus, mu, [&](int s, int nu) { return md.S(mu[s], nu); });
}

std::int64_t block_rank(const ModularData& md, int genus, const std::vector<int>& mu) {
  const Complex v = block_rank_sum(md, genus, mu);
  const double r = std::round(v.real());
  const double res = std::abs(v - Complex(r, 0));
  if (res > 1e-6 || r < 0)
    throw Error(ErrorCode::IntegralityFailure, "block rank not a non-negative integer", res);
  return static_cast<std::int64_t>(r);
}

std::vector<CurrentTuple> gamma_out(const SimpleCurrentGroup& g, int m) {
  if (m < 2) throw Error(ErrorCode::InvalidInput, "Gamma_out needs at least two insertions");
  std::vector<CurrentTuple> out;
  CurrentTuple t(m, 0);
  while (true) {
    int prod = g.group.identity;
    for (int s = 0; s + 1 < m; ++s) prod = g.group.mul(prod, t[s]);
    t[m - 1] = g.group.inverse(prod);
    out.push_back(t);
    int s = m - 2;
    while (s >= 0 && ++t[s] == g.size()) t[s--] = 0;
    if (s < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroup tuple_group(const SimpleCurrentGroup& g, const std::vector<CurrentTuple>& tuples) {
  std::map<CurrentTuple, int> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);
  const int n = static_cast<int>(tuples.size());
  AbelianGroup h;
  h.table.resize(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      CurrentTuple p(tuples[a].size());
      for (std::size_t s = 0; s < p.size(); ++s) p[s] = g.group.mul(tuples[a][s], tuples[b][s]);
      auto it = index.find(p);
      if (it == index.end()) throw Error(ErrorCode::Internal, "tuple set not closed under products");
      h.table(a, b) = it->second;
    }
  h.identity = index.at(CurrentTuple(tuples.front().size(), g.group.identity));
  return h;
}

std::vector<CurrentTuple> central_tuples(const SimpleCurrentGroup& g, const OrbitData& od,
                                         const std::vector<int>& mu) {
  const int m = static_cast<int>(mu.size());
  if (m == 0) return {CurrentTuple{}};
  std::vector<CurrentTuple> stab;
  if (m == 1) {
    stab.push_back({g.group.identity});
  } else {
    for (auto& t : gamma_out(g, m)) {
      bool ok = true;
      for (int s = 0; s < m && ok; ++s) ok = stabilizer_index(od, mu[s], t[s]) >= 0;
      if (ok) stab.push_back(t);
    }
  }
  std::vector<CurrentTuple> out;
  for (const auto& t : stab) {
    bool central = true;
    for (const auto& u : stab) {
      Complex f = 1;
      for (int s = 0; s < m; ++s)
        f *= od.cocycle[mu[s]](stabilizer_index(od, mu[s], t[s]), stabilizer_index(od, mu[s], u[s]));
      if (std::abs(f - 1.0) > 1e-6) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(t);
  }
  return out;
}

Complex conjecture1_trace(const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od,
                          SJCache& sj, int genus, const std::vector<int>& mu,
                          const CurrentTuple& tuple) {
  if (tuple.size() != mu.size()) throw Error(ErrorCode::InvalidInput, "tuple and insertions differ in length");
  int prod = g.group.identity;
  for (int p : tuple) prod = g.group.mul(prod, p);
  if (prod != g.group.identity)
    throw Error(ErrorCode::PreconditionFailure, "current tuple does not multiply to the vacuum");
  for (std::size_t s = 0; s < mu.size(); ++s)
    if (stabilizer_index(od, mu[s], tuple[s]) < 0)
      throw Error(ErrorCode::PreconditionFailure, "current " + md.labels[g.currents[tuple[s]]] +
                                                      " does not fix insertion " + md.labels[mu[s]]);
  const auto u = central_tuples(g, od, mu);
  if (std::find(u.begin(), u.end(), tuple) == u.end())
    throw Error(ErrorCode::PreconditionFailure, "current tuple pairs nontrivially under the product cocycle");
  return trace_sum(md, g, sj, genus, mu, tuple);
}

std::vector<Complex> fourier_eigendims(const AbelianGroup& u,
                                       const std::vector<std::vector<Rational>>& characters,
                                       const std::vector<Complex>& traces) {
  if (static_cast<int>(traces.size()) != u.size())
    throw Error(ErrorCode::InvalidInput, "need one trace per element of the central subgroup");
  std::vector<Complex> dims;
  for (const auto& chi : characters) {
    Complex d = 0;
    for (int t = 0; t < u.size(); ++t) d += std::conj(root_of_unity(chi[t])) * traces[t];
    dims.push_back(d / static_cast<double>(u.size()));
  }
  return dims;
}

TraceReport trace_report(const ModularData& md, const SimpleCurrentGroup& g, const OrbitData& od,
                         SJCache& sj, int genus, const std::vector<int>& mu, double tol) {
  TraceReport r;
  r.mu = mu;
  r.genus = genus;
  r.rank = block_rank(md, genus, mu);
  r.tuples = central_tuples(g, od, mu);
  for (const auto& t : r.tuples) {
    const Complex v = trace_sum(md, g, sj, genus, mu, t);
    r.traces.push_back(v);
    if (std::abs(v - Complex(std::round(v.real()), 0)) > tol) r.traces_integral = false;
  }
  if (mu.size() < 2) {
    r.characters = {{Rational(0)}};
  } else {
    r.characters = tuple_group(g, r.tuples).characters();
  }
  const AbelianGroup u = mu.size() < 2 ? cyclic_product({}) : tuple_group(g, r.tuples);
  r.raw_dims = fourier_eigendims(u, r.characters, r.traces);
  std::int64_t sum = 0;
  for (const auto& d : r.raw_dims) {
    const double x = std::round(d.real());
    if (std::abs(d - Complex(x, 0)) > tol) r.dims_integral = false;
    if (x < 0) r.dims_nonnegative = false;
    r.dims.push_back(static_cast<std::int64_t>(x));
    sum += static_cast<std::int64_t>(x);
  }
  r.dims_sum_to_rank = sum == r.rank;
  return r;
}

Complex handle_trace(const ModularData& md, const SimpleCurrentGroup& g, SJCache& sj,
                     const std::vector<int>& mu, const CurrentTuple& tuple, int handle_current) {
  const auto& fixed = sj.get(handle_current).fixed_points;
  Complex total = 0;
  for (int nu : fixed) {
    const double s0 = md.S(md.vacuum, nu).real();
    Complex term = 1;
    for (std::size_t s = 0; s < mu.size(); ++s) term *= sj.entry(g.currents[tuple[s]], mu[s], nu) / s0;
    total += term;
  }
  return total;
}

FactorizationCheck factorization_check(const ModularData& md, const SimpleCurrentGroup& g,
                                       SJCache& sj, const std::vector<int>& mu,
                                       const CurrentTuple& tuple, int handle_position) {
  const auto conj = conjugation(md);
  const int J = g.currents[handle_position];
  const int Jinv = g.currents[g.group.inverse(handle_position)];
  FactorizationCheck f;
  for (int kappa = 0; kappa < md.size(); ++kappa) {
    auto m2 = mu;
    m2.push_back(kappa);
    m2.push_back(conj[kappa]);
    auto t2 = tuple;
    t2.push_back(handle_position);
    t2.push_back(g.group.inverse(handle_position));
    f.cut += trace_sum(md, g, sj, 0, m2, t2);
  }
  const auto& fixed = sj.get(J).fixed_points;
  const int n = static_cast<int>(fixed.size());
  CMat m = CMat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int kappa = 0; kappa < md.size(); ++kappa)
        m(a, b) += sj.entry(J, kappa, fixed[a]) * sj.entry(Jinv, conj[kappa], fixed[b]);
  f.eta = n > 0 ? m(0, 0) : Complex(1.0);
  f.eta_residual = n > 0 ? max_abs(m - f.eta * CMat::Identity(n, n)) : 0.0;
  f.handle = handle_trace(md, g, sj, mu, tuple, J);
  f.residual = std::abs(f.cut - f.eta * f.handle);
  return f;
}

std::vector<SweepRow> sweep(const std::string& algebra, std::int64_t level, const ModularData& md,
                            const SimpleCurrentGroup& g, const OrbitData& od, SJCache& sj,
                            int genus, int m, SweepStats& stats) {
  std::vector<SweepRow> rows;
  std::vector<int> mu(m, 0);
  const int n = md.size();
  while (true) {
    ++stats.insertions;
    if (block_rank(md, genus, mu) > 0) {
      TraceReport r = trace_report(md, g, od, sj, genus, mu);
      stats.traces += r.traces.size();
      for (const auto& t : r.traces)
        if (std::abs(t - Complex(std::round(t.real()), 0)) <= 1e-6) ++stats.integral_traces;
      if (!r.holds()) ++stats.violations;
      if (r.tuples.size() > 1) rows.push_back({algebra, level, std::move(r)});
    }
    // Next non-decreasing tuple.
    int s = m - 1;
    while (s >= 0 && mu[s] == n - 1) --s;
    if (s < 0) break;
    ++mu[s];
    for (int t = s + 1; t < m; ++t) mu[t] = mu[s];
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const ModularData& md) {
  std::ostringstream os;
  os.precision(17);
  os << "algebra,level,genus,insertions,tuple,trace_re,trace_im,dims,integral\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    std::string dims;
    for (std::size_t i = 0; i < r.dims.size(); ++i) dims += (i ? ";" : "") + std::to_string(r.dims[i]);
    for (std::size_t t = 0; t < r.tuples.size(); ++t) {
      std::string tuple;
      for (std::size_t s = 0; s < r.tuples[t].size(); ++s)
        tuple += (s ? ";" : "") + std::to_string(r.tuples[t][s]);
      os << row.algebra << ',' << row.level << ',' << r.genus << ",\"" << join_labels(md, r.mu, nullptr)
         << "\",\"" << tuple << "\"," << r.traces[t].real() << ',' << r.traces[t].imag() << ",\"" << dims
         << "\"," << (r.traces_integral && r.holds() ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

// ---- multi-shift automorphisms ----

namespace {

struct Element {
  std::map<int, Laurent> part;  // basis index -> coefficient series
  BigRational K = 0;
};

BigRational big(const Rational& q) { return BigRational(q.numerator()) / BigRational(q.denominator()); }

Element bracket(const SimplyLacedAlgebra& g, const Element& x, const Element& y) {
  Element r;
  for (const auto& [a, f] : x.part)
    for (const auto& [b, h] : y.part) {
      const Laurent fh = f * h;
      for (const auto& [c, v] : g.bracket(a, b)) {
        auto it = r.part.find(c);
        if (it == r.part.end())
          r.part.emplace(c, fh * big(v));
        else
          it->second += fh * big(v);
      }
      const Rational form = g.form(a, b);
      if (form != Rational(0)) r.K += big(form) * (h * f.derivative()).residue();
    }
  return r;
}

BigRational difference(const Element& a, const Element& b) {
  BigRational m = abs(a.K - b.K);
  auto scan = [&](const Element& x, const Element& y) {
    for (const auto& [k, f] : x.part) {
      auto it = y.part.find(k);
      const BigRational d = max_difference(f, it == y.part.end() ? Laurent() : it->second);
      if (d > m) m = d;
    }
  };
  scan(a, b);
  scan(b, a);
  return m;
}

}  // namespace

MultishiftReport multishift_validate(const SimplyLacedAlgebra& g, const std::vector<IVec>& nu,
                                     const std::vector<BigRational>& z, int truncation) {
  const int m = static_cast<int>(nu.size());
  const int r = g.rank();
  if (m == 0 || static_cast<int>(z.size()) != m)
    throw Error(ErrorCode::InvalidInput, "need one coweight per insertion point");
  IVec total = IVec::Zero(r);
  for (const auto& v : nu) {
    if (v.size() != r) throw Error(ErrorCode::InvalidInput, "coweight has the wrong rank");
    total += v;
  }
  if (!total.isZero()) throw Error(ErrorCode::PreconditionFailure, "coweights do not sum to zero");
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (z[a] == z[b]) throw Error(ErrorCode::PreconditionFailure, "insertion points must be distinct");

  const int prec = 8 * truncation + 16;
  // phi_{1,s} = (t + z_1 - z_s)^{-1}
  auto phi_power = [&](int s, int p) { return Laurent::shifted_power(z[0] - z[s], -p, prec); };
  std::vector<Laurent> phi;
  for (int s = 0; s < m; ++s) phi.push_back(phi_power(s, 1));

  auto sigma = [&](const Element& x) {
    Element y;
    y.K = x.K;
    for (const auto& [b, f] : x.part) {
      Laurent image = f;
      if (g.is_cartan(b)) {
        for (int s = 0; s < m; ++s)
          if (nu[s](b) != 0) y.K += BigRational(nu[s](b)) * (phi[s] * f).residue();
      } else {
        const IVec& beta = g.root_of(b);
        for (int s = 0; s < m; ++s) {
          const std::int64_t p = nu[s].dot(beta);
          if (p != 0) image = image * phi_power(s, static_cast<int>(-p));
        }
      }
      auto it = y.part.find(b);
      if (it == y.part.end())
        y.part.emplace(b, image);
      else
        it->second += image;
    }
    return y;
  };

  std::vector<Element> sample;
  Element k;
  k.K = 1;
  sample.push_back(k);
  for (int b = 0; b < g.dim(); ++b)
    for (int n = -truncation; n <= truncation; ++n) {
      Element e;
      e.part.emplace(b, Laurent::monomial(n));
      sample.push_back(e);
    }

  MultishiftReport rep;
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = 0; j < sample.size(); ++j) {
      const Element lhs = sigma(bracket(g, sample[i], sample[j]));
      const Element rhs = bracket(g, sigma(sample[i]), sigma(sample[j]));
      const BigRational d = difference(lhs, rhs);
      if (d > rep.max_residual) rep.max_residual = d;
      ++rep.pairs_checked;
    }
  return rep;
}

}  // namespace wzw
