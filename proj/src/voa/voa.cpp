#include "designlab/voa.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace designlab::voa {

using namespace modforms;

namespace {

// q^{-c/24} (0 + sum_{i>=1} f_{i-1} q^i) from a series f with offset 0.
TraceSeries shifted_trace(int c, const QSeries& f, long prec, std::string source) {
  std::vector<Rational> coeffs(static_cast<size_t>(prec) + 1, Rational(0));
  for (long i = 1; i <= prec; ++i) coeffs[static_cast<size_t>(i)] = f[i - 1];
  return TraceSeries{c, QSeries(-c, std::move(coeffs)), std::move(source)};
}

QSeries euler_power(long e, long prec) { return qs_power_recurrence(euler_product(prec), e); }

}  // namespace

TraceSeries a_series(long prec) {
  require(prec >= 1, "prec must be at least 1");
  return shifted_trace(8, euler_power(16, prec - 1), prec, "eta^16");
}

TraceSeries b_series(long prec) {
  require(prec >= 1, "prec must be at least 1");
  return shifted_trace(16, euler_power(8, prec - 1), prec, "eta^8");
}

TraceSeries c_series(long prec) {
  require(prec >= 1, "prec must be at least 1");
  return shifted_trace(24, eisenstein(4, prec - 1), prec, "E4");
}

TraceSeries graded_trace(const lattices::Lattice& l, const lattices::ThetaWeight& w, long prec) {
  require(prec >= 0, "prec must be nonnegative");
  require(lattices::is_even(l) && lattices::is_unimodular(l), "graded traces need an even unimodular lattice");
  const int n = l.rank();
  ensure(n % 8 == 0, "even unimodular rank is a multiple of 8");
  auto theta = lattices::to_modular_q(lattices::harmonic_theta(l, w, 2 * prec));
  auto z = qs_div(theta, qs_power_recurrence(eta(prec), n));
  ensure(z.offset24() == -n, "graded trace offset");
  return TraceSeries{n, z, "theta[" + l.label + ", " + w.describe() + "] / eta^" + std::to_string(n)};
}

bool ord_criterion(long ell) {
  require(ell >= 1, "ell must be positive");
  for (const auto& [p, e] : factorize(3 * ell - 2))
    if (p % 3 == 2 && e % 2 == 1) return true;
  return false;
}

ObstructionResult modular_obstruction(int c, int s, long mu, long prec) {
  require(c > 0 && c % 8 == 0, "central charge must be a positive multiple of 8");
  require(s >= 1, "s must be positive");
  require(mu >= 0, "mu must be nonnegative");
  ObstructionResult r;
  r.central_charge = c;
  r.s = s;
  r.mu = mu;
  r.weight = c / 2 + s;
  if (r.weight % 2) {
    r.forced_vanishing = true;
    r.reason = "odd weight " + std::to_string(r.weight);
    return r;
  }
  r.dim = mf_dim(r.weight);
  auto space = mf_basis(r.weight, std::max(prec, mu + r.dim + 2));
  std::vector<size_t> free;
  for (size_t i = 0; i < space.leading.size(); ++i) {
    if (space.leading[i] < mu) ++r.constraints;
    else free.push_back(i);
  }
  const long residual = r.dim - r.constraints;
  r.forced_vanishing = residual <= 0;
  r.reason = "dim M_" + std::to_string(r.weight) + " = " + std::to_string(r.dim) + ", " +
             std::to_string(r.constraints) + " leading coefficient(s) below q^" + std::to_string(mu) + " must vanish";
  if (!r.forced_vanishing)
    for (size_t i : free) r.witness.push_back(space.basis[i]);
  return r;
}

bool ConformalTSet::derivation_agrees() const {
  return std::all_of(derivation.begin(), derivation.end(), [](const TDegree& d) { return d.hardcoded == d.derived; });
}

ConformalTSet conformal_T_set(int c, int max_even) {
  ConformalTSet t;
  t.central_charge = c;
  if (c == 8) t.finite_part = {1, 2, 3, 4, 5, 6, 7, 9, 10, 11};
  else if (c == 16) t.finite_part = {1, 2, 3, 5, 6, 7};
  else if (c == 24) t.finite_part = {1, 2, 3};
  else fail(ErrorCode::InvalidArgument, "conformal T-sets are known for c = 8, 16, 24");
  const std::set<int> known(t.finite_part.begin(), t.finite_part.end());
  // A Virasoro primary of positive weight s has trace eta^{-c} f with f a cusp form of weight c/2 + s.
  for (int s = 2; s <= max_even; s += 2) {
    TDegree d;
    d.degree = s;
    d.hardcoded = known.count(s) > 0;
    const auto ob = modular_obstruction(c, s, 1);
    d.derived = ob.forced_vanishing;
    d.reason = ob.reason;
    t.derivation.push_back(d);
  }
  return t;
}

namespace {

const TraceSeries& contested_series(int c, long prec, std::optional<TraceSeries>& cache) {
  if (!cache || cache->prec() < prec) {
    if (c == 8) cache = a_series(prec);
    else if (c == 16) cache = b_series(prec);
    else if (c == 24) cache = c_series(prec);
    else fail(ErrorCode::InvalidArgument, "strength reports support c = 8, 16, 24");
  }
  return *cache;
}

StrengthReport strength_from(int c, long ell, const TraceSeries& series) {
  StrengthReport r;
  r.central_charge = c;
  r.ell = ell;
  r.coefficient = series.coefficient(ell);
  r.contested_holds = r.coefficient == 0;
  const std::string idx = "(" + std::to_string(ell) + ")";
  if (c == 8) {
    r.base_T = {1, 2, 3, 4, 5, 6, 7};
    r.contested_degree = 8;
    r.coefficient_name = "a" + idx;
    if (r.contested_holds) {
      r.strength = 11;
      r.lower_bound = true;
      r.verdict = "conformal 11-design (degree 12 not decided)";
    } else {
      r.strength = 7;
      r.verdict = "strength 7";
    }
  } else if (c == 16) {
    r.base_T = {1, 2, 3};
    r.contested_degree = 4;
    r.coefficient_name = "b" + idx;
    r.criterion = ord_criterion(ell);
    if (r.criterion != r.contested_holds) r.note = "ord criterion disagrees with the b coefficient";
    r.reading_statement = r.criterion ? "strength 3" : "conformal 7-design";
    r.reading_proof = r.criterion ? "conformal 7-design" : "strength 3";
    if (r.contested_holds) {
      r.strength = 7;
      r.lower_bound = true;
      r.verdict = "conformal 7-design (degree 8 not decided)";
    } else {
      r.strength = 3;
      r.verdict = "strength 3";
    }
  } else {
    r.base_T = {1, 2, 3};
    r.contested_degree = 4;
    r.coefficient_name = "c" + idx;
    if (r.contested_holds) {
      r.strength = 4;
      r.lower_bound = true;
      r.verdict = "conformal 4-design";
    } else {
      r.strength = 3;
      r.verdict = "strength 3";
    }
  }
  return r;
}

}  // namespace

StrengthReport strength_at(int c, long ell, long prec) {
  require(ell >= 1, "ell must be positive");
  if (prec < 0) prec = ell;
  if (ell > prec) fail(ErrorCode::InsufficientPrecision, "ell exceeds the series precision");
  std::optional<TraceSeries> cache;
  return strength_from(c, ell, contested_series(c, prec, cache));
}

std::vector<StrengthReport> strength_scan(int c, long from, long to) {
  require(from >= 1 && to >= from, "scan range must satisfy 1 <= from <= to");
  std::optional<TraceSeries> cache;
  const auto& series = contested_series(c, to, cache);
  std::vector<StrengthReport> out;
  out.reserve(static_cast<size_t>(to - from + 1));
  for (long l = from; l <= to; ++l) out.push_back(strength_from(c, l, series));
  return out;
}

LehmerScan lehmer_scan(long bound, long shell_bound) {
  require(bound >= 1, "bound must be positive");
  LehmerScan out;
  out.bound = bound;
  shared_tau_table().reserve(bound);
  // Delta = eta^16 * eta^8, with eta^16 read off the a-series
  const auto a = a_series(bound);
  std::vector<Rational> a_inner(a.series.coeffs().begin() + 1, a.series.coeffs().end());
  const auto conv = qs_mul(QSeries(0, std::move(a_inner)), euler_power(8, bound - 1));
  const auto e8l = lattices::lattice_e8();
  for (long l = 1; l <= bound; ++l) {
    LehmerEntry e;
    e.ell = l;
    e.tau = ramanujan_tau(l);
    e.nonzero = e.tau != 0;
    e.convolution_check = conv[l - 1] == Rational(e.tau);
    if (l <= shell_bound) {
      auto shell = lattices::shell_enum(e8l, 2 * l);
      auto rep = lattices::moment_design_test(e8l, shell, 8);
      e.shell_checked = true;
      e.shell_fails_degree8 = rep.witness_k == 8;
    }
    if (!e.nonzero) out.zeros.push_back(l);
    out.entries.push_back(std::move(e));
  }
  return out;
}

SeriesScan remark4_series(long prec) {
  require(prec >= 1, "prec must be at least 1");
  auto f = eta_quotient(parse_eta_spec("2:15,1:-7"), prec - 1);
  SeriesScan s;
  s.series = QSeries(f.offset24() + 1, f.coeffs());
  ensure(s.series.offset24() == 24, "remark4 series starts at q^1");
  s.source = "q^(1/24) eta(2z)^15 / eta(z)^7";
  s.checked_from = 1;
  s.checked_to = prec;
  for (long i : vanishing_indices(s.series, prec - 1)) s.zeros.push_back(i + 1);
  return s;
}

SeriesScan d_series(long prec) {
  require(prec >= 1, "prec must be at least 1");
  auto f = qs_mul(eisenstein(4, prec - 1), euler_power(8, prec - 1));
  auto t = shifted_trace(16, f, prec, "E4 eta^8");
  SeriesScan s;
  s.series = t.series;
  s.source = t.source;
  s.checked_from = 1;
  s.checked_to = prec;
  for (long i : vanishing_indices(s.series, prec))
    if (i >= 1) s.zeros.push_back(i);
  return s;
}

}  // namespace designlab::voa
