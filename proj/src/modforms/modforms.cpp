#include "designlab/modforms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace designlab::modforms {

EtaQuotientSpec parse_eta_spec(const std::string& text) {
  EtaQuotientSpec spec;
  std::stringstream ss(text);
  std::string item;
  std::set<long> seen;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    auto colon = item.find(':');
    require(colon != std::string::npos, "eta factor '" + item + "' must look like scale:exponent");
    Rational scale = parse_rational(item.substr(0, colon));
    Rational exponent = parse_rational(item.substr(colon + 1));
    require(scale.get_den() == 1 && exponent.get_den() == 1, "eta factor '" + item + "' needs integers");
    require(scale > 0, "eta scale must be positive in '" + item + "'");
    long m = scale.get_num().get_si();
    require(seen.insert(m).second, "eta scale " + std::to_string(m) + " repeated");
    spec.factors.push_back({m, exponent.get_num().get_si()});
  }
  return spec;
}

QSeries euler_product(long prec) {
  require(prec >= 0, "prec must be nonnegative");
  std::vector<Rational> c(static_cast<size_t>(prec) + 1, Rational(0));
  // sum_k (-1)^k q^{k(3k-1)/2}, k over all integers
  c[0] = 1;
  for (long k = 1;; ++k) {
    const long e1 = k * (3 * k - 1) / 2;
    const long e2 = k * (3 * k + 1) / 2;
    if (e1 > prec) break;
    const int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<size_t>(e1)] = sign;
    if (e2 <= prec) c[static_cast<size_t>(e2)] = sign;
  }
  return QSeries(0, std::move(c));
}

QSeries eta(long prec) {
  QSeries p = euler_product(prec);
  return QSeries(1, p.coeffs());
}

QSeries eta_quotient(const EtaQuotientSpec& spec, long prec) {
  require(prec >= 0, "prec must be nonnegative");
  std::set<long> scales;
  for (const auto& f : spec.factors) {
    require(f.scale >= 1, "eta scale must be positive");
    require(scales.insert(f.scale).second, "eta scales must be distinct");
  }
  QSeries result = QSeries::constant(Rational(1), prec);
  long offset = 0;
  for (const auto& f : spec.factors) {
    offset += f.scale * f.exponent;
    if (f.exponent == 0) continue;
    const long inner_prec = prec / f.scale;
    QSeries power = qs_power_recurrence(euler_product(inner_prec), f.exponent);
    result = qs_mul(result, power.dilated(f.scale).truncated(prec));
  }
  return QSeries(offset, result.coeffs());
}

std::vector<Integer> sigma_table(long N, unsigned k) {
  require(N >= 0, "sigma table bound must be nonnegative");
  std::vector<Integer> s(static_cast<size_t>(N) + 1, Integer(0));
  Integer dk;
  for (long d = 1; d <= N; ++d) {
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
    for (long m = d; m <= N; m += d) s[static_cast<size_t>(m)] += dk;
  }
  return s;
}

QSeries eisenstein(int k, long prec) {
  require(k == 4 || k == 6, "eisenstein: only k = 4 and k = 6 are supported");
  require(prec >= 0, "prec must be nonnegative");
  const auto sig = sigma_table(prec, static_cast<unsigned>(k - 1));
  const long factor = (k == 4) ? 240 : -504;
  std::vector<Rational> c(static_cast<size_t>(prec) + 1);
  c[0] = 1;
  for (long n = 1; n <= prec; ++n) c[static_cast<size_t>(n)] = Rational(sig[static_cast<size_t>(n)] * factor);
  return QSeries(0, std::move(c));
}

QSeries delta(long prec) {
  QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  QSeries num = qs_sub(qs_mul(qs_mul(e4, e4), e4), qs_mul(e6, e6));
  return qs_scale(num, Rational(1, 1728));
}

long mf_dim(long k) {
  if (k < 0 || k % 2 != 0) return 0;
  long count = 0;
  for (long b = 0; 6 * b <= k; ++b)
    if ((k - 6 * b) % 4 == 0) ++count;
  return count;
}

ModFormSpace mf_space_from_generators(long weight, std::vector<QSeries> generators, std::vector<std::string> labels) {
  require(labels.size() == generators.size(), "one label per generator");
  ModFormSpace space;
  space.weight = weight;
  if (generators.empty()) return space;
  long prec = generators.front().prec();
  for (const auto& g : generators) {
    require(g.offset24() == 0, "modular form generators must have offset 0");
    prec = std::min(prec, g.prec());
  }
  space.prec = prec;
  const size_t ng = generators.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<std::vector<Rational>> tr;
  for (size_t g = 0; g < ng; ++g) {
    rows.emplace_back(generators[g].coeffs().begin(), generators[g].coeffs().begin() + prec + 1);
    std::vector<Rational> t(ng, Rational(0));
    t[g] = 1;
    tr.push_back(std::move(t));
  }
  // reduced row echelon form
  size_t r = 0;
  std::vector<long> leading;
  for (long col = 0; col <= prec && r < rows.size(); ++col) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][static_cast<size_t>(col)] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::swap(tr[piv], tr[r]);
    const Rational inv = 1 / rows[r][static_cast<size_t>(col)];
    for (auto& x : rows[r]) x *= inv;
    for (auto& x : tr[r]) x *= inv;
    for (size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][static_cast<size_t>(col)] == 0) continue;
      const Rational f = rows[o][static_cast<size_t>(col)];
      for (size_t j = 0; j < rows[o].size(); ++j) rows[o][j] -= f * rows[r][j];
      for (size_t j = 0; j < ng; ++j) tr[o][j] -= f * tr[r][j];
    }
    leading.push_back(col);
    ++r;
  }
  for (size_t i = 0; i < r; ++i) {
    space.basis.emplace_back(0, rows[i]);
    space.transform.push_back(tr[i]);
  }
  space.leading = std::move(leading);
  space.generators = std::move(generators);
  space.generator_labels = std::move(labels);
  return space;
}

ModFormSpace mf_basis(long k, long prec) {
  require(k >= 0 && k % 2 == 0, "mf_basis needs an even nonnegative weight");
  require(prec >= 0, "prec must be nonnegative");
  ModFormSpace space;
  space.weight = k;
  space.prec = prec;
  if (mf_dim(k) == 0) return space;
  const QSeries e4 = eisenstein(4, prec), e6 = eisenstein(6, prec);
  std::vector<QSeries> gens;
  std::vector<std::string> labels;
  for (long b = 0; 6 * b <= k; ++b) {
    if ((k - 6 * b) % 4 != 0) continue;
    const long a = (k - 6 * b) / 4;
    gens.push_back(qs_mul(qs_pow(e4, a), qs_pow(e6, b)));
    labels.push_back("E4^" + std::to_string(a) + "*E6^" + std::to_string(b));
  }
  ModFormSpace out = mf_space_from_generators(k, std::move(gens), std::move(labels));
  ensure(out.dim() == mf_dim(k), "E4/E6 monomials failed to span M_k");
  return out;
}

FitResult fit_in_space(const QSeries& f, const ModFormSpace& space) {
  require(f.offset24() == 0, "fit_in_space needs a series with offset 0");
  const long p = std::min(f.prec(), space.prec);
  if (p < space.dim() + kFitSafetyMargin)
    fail(ErrorCode::InsufficientPrecision, "fit_in_space needs prec >= dim + " + std::to_string(kFitSafetyMargin) +
                                               " = " + std::to_string(space.dim() + kFitSafetyMargin) + ", have " +
                                               std::to_string(p));
  FitResult out;
  out.checked_through = p;
  std::vector<Rational> residual(f.coeffs().begin(), f.coeffs().begin() + p + 1);
  for (long i = 0; i < space.dim(); ++i) {
    const long lead = space.leading[static_cast<size_t>(i)];
    if (lead > p) fail(ErrorCode::InsufficientPrecision, "basis leading exponent beyond the shared precision");
    const Rational c = residual[static_cast<size_t>(lead)];
    out.coords.push_back(c);
    if (c == 0) continue;
    const auto& b = space.basis[static_cast<size_t>(i)].coeffs();
    for (long j = 0; j <= p; ++j) residual[static_cast<size_t>(j)] -= c * b[static_cast<size_t>(j)];
  }
  out.member = true;
  for (long j = 0; j <= p; ++j) {
    if (residual[static_cast<size_t>(j)] != 0) {
      out.member = false;
      out.witness_index = j;
      out.residual = residual[static_cast<size_t>(j)];
      break;
    }
  }
  out.generator_coords.assign(space.generators.size(), Rational(0));
  for (size_t i = 0; i < out.coords.size(); ++i)
    for (size_t g = 0; g < space.generators.size(); ++g) out.generator_coords[g] += out.coords[i] * space.transform[i][g];
  return out;
}

Integer sigma(long n, unsigned k) {
  require(n >= 1, "sigma needs a positive integer");
  Integer total = 0, dk;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(d), k);
    total += dk;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(dk.get_mpz_t(), static_cast<unsigned long>(e), k);
      total += dk;
    }
  }
  return total;
}

std::vector<std::pair<long, int>> factorize(long n) {
  require(n >= 1, "factorize needs a positive integer");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int ord_p(long n, long p) {
  require(n != 0, "ord_p is undefined at 0");
  require(is_prime(p), "ord_p needs a prime p");
  n = std::labs(n);
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

void TauTable::reserve(long bound) {
  require(bound >= 0, "tau bound must be nonnegative");
  std::lock_guard lock(mutex_);
  const long have = values_.empty() ? 0 : static_cast<long>(values_.size()) - 1;
  if (bound <= have) return;
  const long target = std::max(bound, 2 * have);
  // Delta = q * prod(1-q^n)^24, so tau(n) is the coefficient of q^{n-1}.
  QSeries inner = qs_power_recurrence(euler_product(target - 1), 24);
  std::vector<Integer> v(static_cast<size_t>(target) + 1, Integer(0));
  for (long n = 1; n <= target; ++n) v[static_cast<size_t>(n)] = inner.coeffs()[static_cast<size_t>(n - 1)].get_num();
  values_ = std::move(v);
}

long TauTable::cached_bound() const {
  std::lock_guard lock(mutex_);
  return values_.empty() ? 0 : static_cast<long>(values_.size()) - 1;
}

Integer TauTable::tau(long n) {
  require(n >= 1, "tau needs a positive index");
  reserve(std::max(n, std::min(default_bound_, std::max(n, 64L))));
  std::lock_guard lock(mutex_);
  return values_[static_cast<size_t>(n)];
}

TauTable& shared_tau_table() {
  static TauTable table;
  return table;
}

Integer ramanujan_tau(long n) { return shared_tau_table().tau(n); }

}  // namespace designlab::modforms
