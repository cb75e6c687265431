#include <bit>

#include "designlab/lattices.hpp"
#include "designlab/parallel.hpp"
#include "shells_internal.hpp"

namespace designlab::lattices {

using modforms::QSeries;

namespace {

// For a zonal weight on a framed lattice: the single ambient axis that B^T w
// points along, with B^T w = lambda e_axis.
bool zonal_axis(const Lattice& l, const ThetaWeight& w, int* axis, Rational* lambda) {
  if (!l.frame || w.kind != ThetaWeight::Kind::Zonal) return false;
  const auto& b = l.frame->basis;
  const size_t dim = b.front().size();
  int found = -1;
  for (size_t c = 0; c < dim; ++c) {
    Rational s = 0;
    for (size_t i = 0; i < b.size(); ++i) s += w.direction[i] * b[i][c];
    if (s == 0) continue;
    if (found >= 0) return false;
    found = static_cast<int>(c);
    *lambda = s;
  }
  if (found < 0) return false;
  *axis = found;
  return true;
}

using Poly = std::vector<Integer>;  // truncated in t, t-exponent = |y|^2

Poly poly_mul(const Poly& a, const Poly& b, size_t len) {
  Poly r(len, Integer(0));
  for (size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < len; ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  return r;
}

// sum over m with m = parity (mod 2) of m^p t^{m^2}
Poly parity_series(int parity, int p, size_t len) {
  Poly r(len, Integer(0));
  for (long m = -static_cast<long>(len); m <= static_cast<long>(len); ++m) {
    if (((m % 2) + 2) % 2 != parity) continue;
    const unsigned long e = static_cast<unsigned long>(m * m);
    if (e >= len) continue;
    Integer v;
    mpz_pow_ui(v.get_mpz_t(), Integer(m).get_mpz_t(), static_cast<unsigned long>(p));
    r[e] += v;
  }
  return r;
}

QSeries theta_by_codewords(const Lattice& l, const ThetaWeight& w, long prec_norm) {
  const auto& code = *l.source;
  const int n = code.n;
  const Rational s = l.frame->scale;
  // norm = s |y|^2, so |y|^2 <= prec_norm / s
  const Rational ymax_r = Rational(prec_norm) / s;
  const size_t len = static_cast<size_t>(mpz_class(ymax_r.get_num() / ymax_r.get_den()).get_ui()) + 1;

  int axis = -1;
  Rational lambda = 1;
  const int k = w.kind == ThetaWeight::Kind::One ? 0 : w.degree;
  if (k > 0) ensure(zonal_axis(l, w, &axis, &lambda), "codeword route needs an axis-aligned zonal weight");

  // counts[bit][weight outside the axis]
  std::vector<std::vector<long>> counts(2, std::vector<long>(static_cast<size_t>(n) + 1, 0));
  codes::for_each_codeword(code, [&](codes::Word c) {
    if (axis < 0) {
      ++counts[0][static_cast<size_t>(std::popcount(c))];
    } else {
      const int bit = (c >> axis) & 1;
      ++counts[static_cast<size_t>(bit)][static_cast<size_t>(std::popcount(c) - bit)];
    }
  });
  const int others = axis < 0 ? n : n - 1;
  const Poly phi0 = parity_series(0, 0, len), phi1 = parity_series(1, 0, len);
  std::vector<Poly> pow0{Poly(len, Integer(0))}, pow1{Poly(len, Integer(0))};
  pow0[0][0] = 1;
  pow1[0][0] = 1;
  for (int i = 1; i <= others; ++i) {
    pow0.push_back(poly_mul(pow0.back(), phi0, len));
    pow1.push_back(poly_mul(pow1.back(), phi1, len));
  }
  // base[bit] = sum over codewords of the product over non-axis coordinates
  std::vector<Poly> base(2, Poly(len, Integer(0)));
  for (int bit = 0; bit < 2; ++bit)
    for (int wt = 0; wt <= others; ++wt) {
      const long c = counts[static_cast<size_t>(bit)][static_cast<size_t>(wt)];
      if (!c) continue;
      Poly term = poly_mul(pow0[static_cast<size_t>(others - wt)], pow1[static_cast<size_t>(wt)], len);
      for (size_t e = 0; e < len; ++e) base[static_cast<size_t>(bit)][e] += term[e] * c;
    }

  std::vector<Rational> coeff_by_e(len, Rational(0));
  if (axis < 0) {
    for (size_t e = 0; e < len; ++e) coeff_by_e[e] = base[0][e];
  } else {
    // value at y: (s lambda)^k sum_i a_i y_a^{k-2i} |y|^{2i}
    const auto zc = zonal_coefficients(l.rank(), k);
    std::vector<Poly> sp;  // sp[i][E] = sum of y_a^{k-2i} over vectors with |y|^2 = E
    for (size_t i = 0; i < zc.size(); ++i) {
      const int p = k - 2 * static_cast<int>(i);
      Poly acc(len, Integer(0));
      for (int bit = 0; bit < 2; ++bit) {
        Poly t = poly_mul(parity_series(bit, p, len), base[static_cast<size_t>(bit)], len);
        for (size_t e = 0; e < len; ++e) acc[e] += t[e];
      }
      sp.push_back(std::move(acc));
    }
    Rational scale = 1;
    for (int i = 0; i < k; ++i) scale *= s * lambda;
    for (size_t e = 0; e < len; ++e) {
      Rational v = 0;
      Integer ep = 1;
      for (size_t i = 0; i < zc.size(); ++i) {
        v += zc[i] * sp[i][e] * ep;
        ep *= static_cast<unsigned long>(e);
      }
      coeff_by_e[e] = v * scale;
    }
  }
  std::vector<Rational> coeffs(static_cast<size_t>(prec_norm) + 1, Rational(0));
  for (size_t e = 0; e < len; ++e) {
    if (coeff_by_e[e] == 0) continue;
    const Rational nm = s * static_cast<unsigned long>(e);
    ensure(nm.get_den() == 1, "non-integral norm in a construction-A lattice");
    const long idx = nm.get_num().get_si();
    if (idx <= prec_norm) coeffs[static_cast<size_t>(idx)] += coeff_by_e[e];
  }
  return QSeries(0, std::move(coeffs));
}

QSeries theta_by_enumeration(const Lattice& l, const ThetaWeight& w, long prec_norm) {
  detail::Enumerator e(l);
  const long bound = prec_norm * e.scale();
  auto [lo, hi] = e.top_range(bound);
  RatVec gw;
  Rational ww = 0;
  std::vector<Rational> zc;
  if (w.kind == ThetaWeight::Kind::Zonal) {
    const size_t n = w.direction.size();
    gw.assign(n, Rational(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) gw[i] += l.gram[i][j] * w.direction[j];
    for (size_t i = 0; i < n; ++i) ww += gw[i] * w.direction[i];
    zc = zonal_coefficients(l.rank(), w.degree);
  }
  auto parts = parallel_chunks<std::vector<Rational>>(lo, hi + 1, [&](long a, long b) {
    std::vector<Rational> c(static_cast<size_t>(prec_norm) + 1, Rational(0));
    if (w.kind == ThetaWeight::Kind::One) {
      e.run(bound, a, b - 1, [&](const IntVec&, long sn) { c[static_cast<size_t>(sn / e.scale())] += 1; });
    } else if (w.kind == ThetaWeight::Kind::Zonal) {
      e.run(bound, a, b - 1, [&](const IntVec& v, long sn) {
        Rational xw = 0;
        for (size_t i = 0; i < v.size(); ++i)
          if (v[i]) xw += gw[i] * v[i];
        const Rational s = Rational(sn / e.scale()) * ww;
        Rational total = 0, sp = 1;
        for (size_t i = 0; i < zc.size(); ++i) {
          Rational t = zc[i] * sp;
          for (int k = 0; k < w.degree - 2 * static_cast<int>(i); ++k) t *= xw;
          total += t;
          sp *= s;
        }
        c[static_cast<size_t>(sn / e.scale())] += total;
      });
    } else {
      e.run(bound, a, b - 1, [&](const IntVec& v, long sn) {
        c[static_cast<size_t>(sn / e.scale())] += evaluate_weight(l, w, v);
      });
    }
    return c;
  });
  std::vector<Rational> coeffs(static_cast<size_t>(prec_norm) + 1, Rational(0));
  for (const auto& p : parts)
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += p[i];
  return QSeries(0, std::move(coeffs));
}

}  // namespace

bool codeword_route_available(const Lattice& l, const ThetaWeight& w) {
  if (!l.source || !l.frame) return false;
  if (w.kind == ThetaWeight::Kind::One) return true;
  int axis;
  Rational lambda;
  return zonal_axis(l, w, &axis, &lambda);
}

QSeries harmonic_theta(const Lattice& l, const ThetaWeight& w, long prec_norm, ThetaRoute route) {
  require(prec_norm >= 0, "prec_norm must be nonnegative");
  require(is_integral(l), "theta series need an integral lattice");
  if (w.kind == ThetaWeight::Kind::Zonal)
    require(static_cast<int>(w.direction.size()) == l.rank(), "zonal direction has the wrong dimension");
  const bool codeword = codeword_route_available(l, w);
  if (route == ThetaRoute::CodewordSum) require(codeword, "codeword-sum route does not apply to this lattice/weight");
  if (route == ThetaRoute::CodewordSum || (route == ThetaRoute::Auto && codeword))
    return theta_by_codewords(l, w, prec_norm);
  return theta_by_enumeration(l, w, prec_norm);
}

QSeries to_modular_q(const QSeries& s) {
  require(s.offset24() == 0, "lattice theta series have offset 0");
  const long p = s.prec() / 2;
  std::vector<Rational> c(static_cast<size_t>(p) + 1);
  for (long i = 0; i <= s.prec(); ++i) {
    if (i % 2) {
      ensure(s.coeffs()[static_cast<size_t>(i)] == 0, "odd norm " + std::to_string(i) + " on an even lattice");
      continue;
    }
    c[static_cast<size_t>(i / 2)] = s.coeffs()[static_cast<size_t>(i)];
  }
  return QSeries(0, std::move(c));
}

ThetaMembership theta_membership_check(const Lattice& l, const ThetaWeight& w, long prec) {
  require(is_even(l) && is_unimodular(l), "theta membership needs an even unimodular lattice");
  require(w.degree % 2 == 0, "theta membership needs a harmonic weight of even degree");
  ThetaMembership out;
  out.weight = l.rank() / 2 + w.degree;
  out.e6_factor = (w.degree / 2) % 2 == 1;
  const long dim = modforms::mf_dim(out.weight);
  if (prec < 0) prec = dim + modforms::kFitSafetyMargin + 2;
  auto theta = to_modular_q(harmonic_theta(l, w, 2 * prec));
  auto space = modforms::mf_basis(out.weight, prec);
  out.fit = modforms::fit_in_space(theta, space);
  out.generator_labels = space.generator_labels;
  return out;
}

}  // namespace designlab::lattices
