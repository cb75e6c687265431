#include <algorithm>
#include <set>
#include <unordered_map>

#include "designlab/lattices.hpp"
#include "designlab/parallel.hpp"
#include "shells_internal.hpp"

namespace designlab::lattices {

Rational sphere_moment(int n, int k) {
  require(n >= 1 && k >= 0, "sphere_moment needs n >= 1, k >= 0");
  if (k % 2) return 0;
  // (k-1)!! / (n (n+2) ... (n+k-2))
  Integer num = 1, den = 1;
  for (int i = k - 1; i > 0; i -= 2) num *= i;
  for (int i = 0; i < k / 2; ++i) den *= n + 2 * i;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool is_antipodal(const Shell& x) {
  std::set<IntVec> s(x.vectors.begin(), x.vectors.end());
  for (const auto& v : x.vectors) {
    IntVec m(v);
    for (auto& c : m) c = -c;
    if (!s.count(m)) return false;
  }
  return true;
}

namespace {

std::vector<Rational> moments_by_pairs(const Lattice& l, const Shell& x, int t) {
  detail::Enumerator e(l);
  const size_t n = static_cast<size_t>(l.rank());
  const auto& vs = x.vectors;
  std::vector<std::vector<long>> gv(vs.size(), std::vector<long>(n, 0));
  // scaled Gram times each vector, so x.y is a plain dot product
  std::vector<std::vector<long>> gi(n, std::vector<long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) gi[i][j] = Rational(l.gram[i][j] * e.scale()).get_num().get_si();
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t j = 0; j < n; ++j) {
      long s = 0;
      for (size_t i = 0; i < n; ++i) s += vs[a][i] * gi[i][j];
      gv[a][j] = s;
    }
  using Hist = std::unordered_map<long, long>;
  auto parts = parallel_chunks<Hist>(0, static_cast<long>(vs.size()), [&](long lo, long hi) {
    Hist h;
    for (long a = lo; a < hi; ++a) {
      const auto& g = gv[static_cast<size_t>(a)];
      for (const auto& w : vs) {
        long s = 0;
        for (size_t j = 0; j < n; ++j) s += g[j] * w[j];
        ++h[s];
      }
    }
    return h;
  });
  std::map<long, long> hist;
  for (const auto& p : parts)
    for (const auto& [k, c] : p) hist[k] += c;
  std::vector<Rational> m(static_cast<size_t>(t) + 1, Rational(0));
  for (const auto& [ip, count] : hist) {
    Rational v(ip, e.scale());
    v.canonicalize();
    Rational pw = 1;
    for (int p = 0; p <= t; ++p) {
      m[static_cast<size_t>(p)] += pw * count;
      pw *= v;
    }
  }
  for (auto& r : m) r.canonicalize();
  return m;
}

struct MonomialWalk {
  int n, t;
  std::vector<int> degree;       // per leaf
  std::vector<Integer> multinom;  // per leaf
  std::vector<long> fact;

  MonomialWalk(int n_, int t_) : n(n_), t(t_) {
    fact.assign(static_cast<size_t>(t) + 1, 1);
    for (int i = 1; i <= t; ++i) fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i - 1)] * i;
    std::vector<int> e(static_cast<size_t>(n), 0);
    shape(0, 0, e);
  }

  void shape(int i, int used, std::vector<int>& e) {
    if (i == n) {
      long den = 1;
      for (int x : e) den *= fact[static_cast<size_t>(x)];
      degree.push_back(used);
      multinom.push_back(Integer(fact[static_cast<size_t>(used)] / den));
      return;
    }
    for (int k = 0; used + k <= t; ++k) {
      e[static_cast<size_t>(i)] = k;
      shape(i + 1, used + k, e);
    }
    e[static_cast<size_t>(i)] = 0;
  }

  // Adds y^alpha to sums[leaf] for every leaf, in the same order as shape().
  void add(const IntVec& y, std::vector<__int128>& sums) const {
    size_t leaf = 0;
    walk(y, 0, 0, 1, sums, leaf);
  }

  void walk(const IntVec& y, int i, int used, __int128 val, std::vector<__int128>& sums, size_t& leaf) const {
    if (i == n) {
      sums[leaf++] += val;
      return;
    }
    __int128 v = val;
    for (int k = 0; used + k <= t; ++k) {
      walk(y, i + 1, used + k, v, sums, leaf);
      v *= y[static_cast<size_t>(i)];
    }
  }
};

std::vector<Rational> moments_by_tensors(const Lattice& l, const Shell& x, int t) {
  const int n = static_cast<int>(l.frame->basis.front().size());
  MonomialWalk walk(n, t);
  const size_t leaves = walk.degree.size();
  auto parts = parallel_chunks<std::vector<__int128>>(0, x.size(), [&](long lo, long hi) {
    std::vector<__int128> sums(leaves, 0);
    for (long a = lo; a < hi; ++a) walk.add(ambient_vector(l, x.vectors[static_cast<size_t>(a)]), sums);
    return sums;
  });
  std::vector<Integer> raw(static_cast<size_t>(t) + 1, Integer(0));
  for (size_t leaf = 0; leaf < leaves; ++leaf) {
    __int128 s = 0;
    for (const auto& p : parts) s += p[leaf];
    const bool neg = s < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(s) : static_cast<unsigned __int128>(s);
    Integer big = 0;
    Integer hi_part(static_cast<unsigned long>(u >> 64)), lo_part(static_cast<unsigned long>(u));
    big = (hi_part << 64) + lo_part;
    raw[static_cast<size_t>(walk.degree[leaf])] += walk.multinom[leaf] * big * big;
  }
  std::vector<Rational> m(static_cast<size_t>(t) + 1);
  Rational sp = 1;
  for (int p = 0; p <= t; ++p) {
    m[static_cast<size_t>(p)] = Rational(raw[static_cast<size_t>(p)]) * sp;
    sp *= l.frame->scale;
  }
  return m;
}

}  // namespace

std::vector<Rational> shell_moments(const Lattice& l, const Shell& x, int t) {
  require(t >= 0, "moment degree must be nonnegative");
  require(!x.empty(), "empty shell");
  const double pair_cost = static_cast<double>(x.size()) * static_cast<double>(x.size()) * l.rank();
  if (l.frame) {
    const int n = static_cast<int>(l.frame->basis.front().size());
    double monomials = 1;
    for (int i = 1; i <= t; ++i) monomials = monomials * (n + i) / i;
    if (static_cast<double>(x.size()) * monomials * 2 < pair_cost) return moments_by_tensors(l, x, t);
  }
  return moments_by_pairs(l, x, t);
}

MomentReport moment_design_test(const Lattice& l, const Shell& x, int t) {
  require(!x.empty(), "moment test needs a nonempty shell");
  require(t >= 1, "t must be positive");
  MomentReport rep;
  rep.antipodal = is_antipodal(x);
  const auto m = shell_moments(l, x, t);
  const Rational size2 = Rational(x.size()) * x.size();
  bool ok = true;
  for (int k = 1; k <= t; ++k) {
    MomentVerdict v;
    v.k = k;
    v.lhs = m[static_cast<size_t>(k)];
    Rational rk = 1;
    for (int i = 0; i < k; ++i) rk *= x.norm;
    v.rhs = size2 * rk * sphere_moment(l.rank(), k);
    v.pass = v.lhs == v.rhs;
    if (k % 2 == 1 && rep.antipodal) ensure(v.pass, "odd moment nonzero on an antipodal shell");
    if (ok && v.pass) rep.strength = k;
    if (ok && !v.pass) {
      ok = false;
      rep.witness_k = k;
    }
    rep.per_k.push_back(v);
  }
  return rep;
}

Rational gegenbauer_sum(int n, const Rational& norm, const std::vector<Rational>& moments, int j) {
  require(static_cast<int>(moments.size()) > j, "not enough moments for this degree");
  const auto a = zonal_coefficients(n, j);
  const Rational n2 = norm * norm;
  Rational s = 0, pw = 1;
  for (size_t i = 0; i < a.size(); ++i) {
    s += a[i] * pw * moments[static_cast<size_t>(j - 2 * static_cast<int>(i))];
    pw *= n2;
  }
  return s;
}

Rational zonal_sum(const Lattice& l, const Shell& x, int k, const RatVec& w) {
  require(static_cast<int>(w.size()) == l.rank(), "direction has the wrong dimension");
  {
    Rational ww = 0;
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = 0; j < w.size(); ++j) ww += l.gram[i][j] * w[i] * w[j];
    require(ww != 0, "zonal direction must be nonzero");
    // G w, so that x.w is a plain dot product
    RatVec gw(w.size(), Rational(0));
    for (size_t i = 0; i < w.size(); ++i)
      for (size_t j = 0; j < w.size(); ++j) gw[i] += l.gram[i][j] * w[j];
    const auto a = zonal_coefficients(l.rank(), k);
    const Rational s = x.norm * ww;
    Rational total = 0;
    for (const auto& v : x.vectors) {
      Rational xw = 0;
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) xw += gw[i] * v[i];
      Rational sp = 1;
      for (size_t i = 0; i < a.size(); ++i) {
        Rational t = a[i] * sp;
        for (int e = 0; e < k - 2 * static_cast<int>(i); ++e) t *= xw;
        total += t;
        sp *= s;
      }
    }
    return total;
  }
}

std::vector<int> expected_T_set(int rank, int max_degree) {
  std::set<int> base;
  if (rank == 8) base = {1, 2, 3, 4, 5, 6, 7, 9, 10, 11};
  else if (rank == 16) base = {1, 2, 3, 5, 6, 7};
  else if (rank == 24) base = {1, 2, 3};
  else require(false, "expected T-sets are known for ranks 8, 16, 24");
  std::vector<int> out;
  for (int j = 1; j <= max_degree; ++j)
    if (base.count(j) || j % 2 == 1) out.push_back(j);
  return out;
}

bool TDesignReport::pass() const {
  return std::all_of(per_degree.begin(), per_degree.end(), [](const DegreeResult& d) { return d.pass; });
}

TDesignReport spherical_T_design_report(const Lattice& l, const Shell& x, const std::vector<int>& T) {
  require(!x.empty(), "T-design report needs a nonempty shell");
  TDesignReport rep;
  rep.norm = x.norm;
  rep.shell_size = x.size();
  rep.antipodal = is_antipodal(x);
  int top = 0;
  for (int j : T) {
    require(j >= 1, "degrees must be positive");
    top = std::max(top, j);
  }
  if (T.empty()) return rep;
  const auto m = shell_moments(l, x, top);
  std::set<int> expected;
  const int n = l.rank();
  if ((n == 8 || n == 16 || n == 24) && is_even(l) && is_unimodular(l))
    for (int j : expected_T_set(n, top)) expected.insert(j);
  const Rational size2 = Rational(x.size()) * x.size();
  for (int j : T) {
    DegreeResult d;
    d.degree = j;
    d.kernel_sum = gegenbauer_sum(n, x.norm, m, j);
    d.pass = d.kernel_sum == 0;
    if (j % 2 == 1 && rep.antipodal) ensure(d.pass, "odd-degree kernel sum nonzero on an antipodal shell");
    Rational rk = 1;
    for (int i = 0; i < j; ++i) rk *= x.norm;
    d.raw_moment_pass = m[static_cast<size_t>(j)] == size2 * rk * sphere_moment(n, j);
    d.in_expected = expected.count(j) > 0;
    rep.per_degree.push_back(d);
  }
  return rep;
}

}  // namespace designlab::lattices
