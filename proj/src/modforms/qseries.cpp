#include "designlab/qseries.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "json.hpp"

namespace designlab::modforms {

namespace {

using i128 = __int128;

bool fits_int64(const Integer& z) { return z.fits_slong_p(); }

Integer i128_to_integer(i128 v) {
  bool neg = v < 0;
  unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  Integer z = (Integer(static_cast<unsigned long>(mag >> 64)) << 64) +
              Integer(static_cast<unsigned long>(mag & 0xFFFFFFFFFFFFFFFFull));
  return neg ? Integer(-z) : z;
}

// Convolution of integer sequences, first `len` output terms. Uses 128-bit
// accumulation when the magnitude bound allows it.
std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b, size_t len) {
  std::vector<Integer> out(len);
  size_t max_a_bits = 0, max_b_bits = 0;
  bool small = true;
  for (size_t i = 0; i < std::min(len, a.size()); ++i) {
    max_a_bits = std::max(max_a_bits, mpz_sizeinbase(a[i].get_mpz_t(), 2));
    small = small && fits_int64(a[i]);
  }
  for (size_t i = 0; i < std::min(len, b.size()); ++i) {
    max_b_bits = std::max(max_b_bits, mpz_sizeinbase(b[i].get_mpz_t(), 2));
    small = small && fits_int64(b[i]);
  }
  size_t len_bits = 1;
  while ((size_t{1} << len_bits) < len + 1) ++len_bits;
  if (small && max_a_bits + max_b_bits + len_bits <= 125) {
    std::vector<long> sa(std::min(len, a.size())), sb(std::min(len, b.size()));
    for (size_t i = 0; i < sa.size(); ++i) sa[i] = a[i].get_si();
    for (size_t i = 0; i < sb.size(); ++i) sb[i] = b[i].get_si();
    std::vector<i128> acc(len, 0);
    for (size_t i = 0; i < sa.size(); ++i) {
      if (sa[i] == 0) continue;
      const i128 ai = sa[i];
      const size_t upto = std::min(sb.size(), len - i);
      for (size_t j = 0; j < upto; ++j) acc[i + j] += ai * sb[j];
    }
    for (size_t i = 0; i < len; ++i) out[i] = i128_to_integer(acc[i]);
    return out;
  }
  for (size_t i = 0; i < std::min(len, a.size()); ++i) {
    if (a[i] == 0) continue;
    const size_t upto = std::min(b.size(), len - i);
    for (size_t j = 0; j < upto; ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return out;
}

// Writes coeffs = ints / den.
std::vector<Integer> clear_denominators(const std::vector<Rational>& c, Integer& den) {
  den = 1;
  for (const auto& r : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  std::vector<Integer> out(c.size());
  for (size_t i = 0; i < c.size(); ++i) out[i] = c[i].get_num() * (den / c[i].get_den());
  return out;
}

// g = f^r for integral f with f_0 = 1, first prec+1 terms. Tries 128-bit
// arithmetic and falls back to GMP on overflow.
std::optional<std::vector<Integer>> power_recurrence_i128(const std::vector<std::pair<long, long>>& sparse, long r,
                                                          long prec) {
  std::vector<i128> g(static_cast<size_t>(prec) + 1, 0);
  g[0] = 1;
  for (long n = 1; n <= prec; ++n) {
    i128 acc = 0;
    for (const auto& [k, fk] : sparse) {
      if (k > n) break;
      i128 w = static_cast<i128>(r + 1) * k - n;
      i128 t;
      if (__builtin_mul_overflow(w, static_cast<i128>(fk), &t)) return std::nullopt;
      if (__builtin_mul_overflow(t, g[static_cast<size_t>(n - k)], &t)) return std::nullopt;
      if (__builtin_add_overflow(acc, t, &acc)) return std::nullopt;
    }
    ensure(acc % n == 0, "power recurrence produced a non-integral coefficient");
    g[static_cast<size_t>(n)] = acc / n;
  }
  std::vector<Integer> out(g.size());
  for (size_t i = 0; i < g.size(); ++i) out[i] = i128_to_integer(g[i]);
  return out;
}

std::vector<Integer> power_recurrence_mpz(const std::vector<std::pair<long, Integer>>& sparse, long r, long prec) {
  std::vector<Integer> g(static_cast<size_t>(prec) + 1);
  g[0] = 1;
  Integer acc, w;
  for (long n = 1; n <= prec; ++n) {
    acc = 0;
    for (const auto& [k, fk] : sparse) {
      if (k > n) break;
      w = Integer(r + 1) * k - n;
      w *= fk;
      mpz_addmul(acc.get_mpz_t(), w.get_mpz_t(), g[static_cast<size_t>(n - k)].get_mpz_t());
    }
    ensure(mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(n)),
           "power recurrence produced a non-integral coefficient");
    mpz_divexact_ui(g[static_cast<size_t>(n)].get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
  }
  return g;
}

}  // namespace

QSeries::QSeries(long offset24, std::vector<Rational> coeffs) : offset24_(offset24), coeffs_(std::move(coeffs)) {
  require(!coeffs_.empty(), "a q-series needs at least one known coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

QSeries QSeries::constant(const Rational& value, long prec) {
  require(prec >= 0, "prec must be nonnegative");
  std::vector<Rational> c(static_cast<size_t>(prec) + 1, Rational(0));
  c[0] = value;
  return QSeries(0, std::move(c));
}

QSeries QSeries::zero(long offset24, long prec) {
  require(prec >= 0, "prec must be nonnegative");
  return QSeries(offset24, std::vector<Rational>(static_cast<size_t>(prec) + 1, Rational(0)));
}

QSeries QSeries::monomial(long offset24, long index, const Rational& value, long prec) {
  QSeries s = zero(offset24, prec);
  require(index >= 0 && index <= prec, "monomial index outside [0, prec]");
  s.coeffs_[static_cast<size_t>(index)] = value;
  return s;
}

const Rational& QSeries::operator[](long i) const {
  if (i < 0 || i > prec())
    fail(ErrorCode::InsufficientPrecision,
         "coefficient index " + std::to_string(i) + " outside known range [0, " + std::to_string(prec()) + "]");
  return coeffs_[static_cast<size_t>(i)];
}

bool QSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.get_den() == 1; });
}

bool QSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r == 0; });
}

QSeries QSeries::truncated(long p) const {
  require(p >= 0, "prec must be nonnegative");
  if (p > prec())
    fail(ErrorCode::InsufficientPrecision,
         "cannot extend a series from prec " + std::to_string(prec()) + " to " + std::to_string(p));
  return QSeries(offset24_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + p + 1));
}

QSeries QSeries::normalized() const {
  size_t z = 0;
  while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
  if (z == 0 || z == coeffs_.size()) return *this;
  return QSeries(offset24_ + 24 * static_cast<long>(z), std::vector<Rational>(coeffs_.begin() + static_cast<long>(z), coeffs_.end()));
}

QSeries QSeries::shifted(long k) const {
  QSeries s = *this;
  s.offset24_ += 24 * k;
  return s;
}

QSeries QSeries::dilated(long m) const {
  require(m >= 1, "dilation factor must be positive");
  const long new_prec = m * prec() + m - 1;
  std::vector<Rational> c(static_cast<size_t>(new_prec) + 1, Rational(0));
  for (long i = 0; i <= prec(); ++i) c[static_cast<size_t>(i * m)] = coeffs_[static_cast<size_t>(i)];
  return QSeries(offset24_ * m, std::move(c));
}

QSeries QSeries::with_offset24(long new_offset24) const {
  const long diff = offset24_ - new_offset24;
  require(diff >= 0 && diff % 24 == 0,
          "cannot realign offset " + std::to_string(offset24_) + "/24 to " + std::to_string(new_offset24) + "/24");
  const long pad = diff / 24;
  std::vector<Rational> c(static_cast<size_t>(pad), Rational(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return QSeries(new_offset24, std::move(c));
}

namespace {

std::pair<QSeries, QSeries> aligned(const QSeries& a, const QSeries& b) {
  if ((a.offset24() - b.offset24()) % 24 != 0)
    fail(ErrorCode::InvalidArgument, "series offsets " + std::to_string(a.offset24()) + "/24 and " +
                                         std::to_string(b.offset24()) + "/24 differ by a non-integral power of q");
  const long off = std::min(a.offset24(), b.offset24());
  QSeries aa = a.with_offset24(off), bb = b.with_offset24(off);
  const long p = std::min(aa.prec(), bb.prec());
  return {aa.truncated(p), bb.truncated(p)};
}

}  // namespace

QSeries qs_add(const QSeries& a, const QSeries& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rational> c(x.coeffs());
  for (size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
  return QSeries(x.offset24(), std::move(c));
}

QSeries qs_sub(const QSeries& a, const QSeries& b) { return qs_add(a, qs_scale(b, Rational(-1))); }

QSeries qs_scale(const QSeries& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x *= s;
  return QSeries(a.offset24(), std::move(c));
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  const long p = std::min(a.prec(), b.prec());
  const size_t len = static_cast<size_t>(p) + 1;
  Integer da, db;
  std::vector<Integer> ia = clear_denominators(std::vector<Rational>(a.coeffs().begin(), a.coeffs().begin() + p + 1), da);
  std::vector<Integer> ib = clear_denominators(std::vector<Rational>(b.coeffs().begin(), b.coeffs().begin() + p + 1), db);
  std::vector<Integer> prod = convolve(ia, ib, len);
  const Integer den = da * db;
  std::vector<Rational> c(len);
  for (size_t i = 0; i < len; ++i) {
    c[i] = Rational(prod[i], den);
    c[i].canonicalize();
  }
  return QSeries(a.offset24() + b.offset24(), std::move(c));
}

QSeries qs_pow(const QSeries& a, long e) {
  require(e >= 0, "qs_pow needs a nonnegative exponent");
  QSeries result = QSeries::constant(Rational(1), a.prec());
  QSeries base = a;
  while (e > 0) {
    if (e & 1) result = qs_mul(result, base);
    e >>= 1;
    if (e > 0) base = qs_mul(base, base);
  }
  return result;
}

QSeries qs_power_recurrence(const QSeries& a, long r) {
  const Rational& lead = a.coeffs().front();
  require(lead != 0, "power recurrence needs a nonzero leading coefficient (normalize first)");
  const long prec = a.prec();
  QSeries f = (lead == 1) ? a : qs_scale(a, 1 / lead);
  Rational lead_power = 1;
  {
    Rational base = r >= 0 ? lead : Rational(1 / lead);
    for (long i = 0; i < std::labs(r); ++i) lead_power *= base;
  }
  const long offset = a.offset24() * r;
  std::vector<Rational> out;
  if (f.is_integral()) {
    std::vector<std::pair<long, long>> sparse_small;
    std::vector<std::pair<long, Integer>> sparse;
    bool small = true;
    for (long k = 1; k <= prec; ++k) {
      const Rational& c = f.coeffs()[static_cast<size_t>(k)];
      if (c == 0) continue;
      sparse.emplace_back(k, c.get_num());
      if (c.get_num().fits_slong_p())
        sparse_small.emplace_back(k, c.get_num().get_si());
      else
        small = false;
    }
    std::optional<std::vector<Integer>> g;
    if (small) g = power_recurrence_i128(sparse_small, r, prec);
    if (!g) g = power_recurrence_mpz(sparse, r, prec);
    out.reserve(g->size());
    for (auto& z : *g) out.emplace_back(z * lead_power);
  } else {
    std::vector<std::pair<long, Rational>> sparse;
    for (long k = 1; k <= prec; ++k)
      if (f.coeffs()[static_cast<size_t>(k)] != 0) sparse.emplace_back(k, f.coeffs()[static_cast<size_t>(k)]);
    std::vector<Rational> g(static_cast<size_t>(prec) + 1);
    g[0] = 1;
    for (long n = 1; n <= prec; ++n) {
      Rational acc = 0;
      for (const auto& [k, fk] : sparse) {
        if (k > n) break;
        acc += Rational((r + 1) * k - n) * fk * g[static_cast<size_t>(n - k)];
      }
      g[static_cast<size_t>(n)] = acc / n;
    }
    for (auto& x : g) out.emplace_back(x * lead_power);
  }
  return QSeries(offset, std::move(out));
}

QSeries qs_inverse(const QSeries& a) { return qs_power_recurrence(a, -1); }

QSeries qs_div(const QSeries& a, const QSeries& b) { return qs_mul(a, qs_inverse(b)); }

bool qs_agree(const QSeries& a, const QSeries& b) {
  auto [x, y] = aligned(a, b);
  return x.coeffs() == y.coeffs();
}

bool qs_proportional(const QSeries& a, const QSeries& b, Rational* lambda) {
  auto [x, y] = aligned(a, b);
  std::optional<Rational> ratio;
  for (long i = 0; i <= x.prec(); ++i) {
    const Rational& xa = x.coeffs()[static_cast<size_t>(i)];
    const Rational& yb = y.coeffs()[static_cast<size_t>(i)];
    if (!ratio) {
      if (xa != 0) {
        ratio = yb / xa;
      } else if (yb != 0) {
        return false;
      }
      continue;
    }
    if (yb != *ratio * xa) return false;
  }
  if (!ratio) return false;
  if (lambda) *lambda = *ratio;
  return true;
}

std::vector<long> vanishing_indices(const QSeries& f, long bound) {
  require(bound >= 0, "bound must be nonnegative");
  if (f.prec() < bound)
    fail(ErrorCode::InsufficientPrecision,
         "vanishing scan to " + std::to_string(bound) + " needs prec >= bound, have " + std::to_string(f.prec()));
  std::vector<long> out;
  for (long i = 0; i <= bound; ++i)
    if (f.coeffs()[static_cast<size_t>(i)] == 0) out.push_back(i);
  return out;
}

std::string to_json(const QSeries& s) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (long i = 0; i <= s.prec(); ++i) {
    const Rational& c = s.coeffs()[static_cast<size_t>(i)];
    if (c != 0) coeffs.push_back({i, to_fraction_string(c)});
  }
  nlohmann::json j = {{"offset24", s.offset24()}, {"prec", s.prec()}, {"coeffs", coeffs}};
  return j.dump();
}

QSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("series JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("offset24") || !j.contains("prec") || !j.contains("coeffs"))
    fail(ErrorCode::InvalidArgument, "series JSON needs offset24, prec and coeffs");
  const long prec = j.at("prec").get<long>();
  require(prec >= 0, "series JSON: prec must be nonnegative");
  std::vector<Rational> c(static_cast<size_t>(prec) + 1, Rational(0));
  for (const auto& entry : j.at("coeffs")) {
    require(entry.is_array() && entry.size() == 2, "series JSON: coefficient entries are [index, \"num/den\"]");
    const long idx = entry[0].get<long>();
    require(idx >= 0 && idx <= prec, "series JSON: coefficient index outside [0, prec]");
    c[static_cast<size_t>(idx)] = parse_rational(entry[1].get<std::string>());
  }
  return QSeries(j.at("offset24").get<long>(), std::move(c));
}

}  // namespace designlab::modforms
