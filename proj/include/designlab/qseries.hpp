#pragma once

#include <string>
#include <vector>

#include "designlab/common.hpp"

namespace designlab::modforms {

/// Truncated q-series  q^{offset24/24} * sum_{i=0}^{prec} c_i q^i  with exact
/// rational coefficients. Coefficients beyond prec are unknown, never zero.
class QSeries {
 public:
  QSeries() = default;
  /// prec = coeffs.size() - 1; coeffs must be non-empty.
  QSeries(long offset24, std::vector<Rational> coeffs);

  static QSeries constant(const Rational& value, long prec);
  static QSeries zero(long offset24, long prec);
  /// Series whose only nonzero coefficient is at exponent index `index`.
  static QSeries monomial(long offset24, long index, const Rational& value, long prec);

  long offset24() const { return offset24_; }
  long prec() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient at index i (exponent offset24/24 + i). Reading past prec
  /// throws InsufficientPrecision.
  const Rational& operator[](long i) const;

  bool is_integral() const;
  bool is_zero() const;
  QSeries truncated(long prec) const;
  /// Drops leading zero coefficients into the offset (prec shrinks accordingly).
  QSeries normalized() const;
  /// Multiply by q^k (k may be negative).
  QSeries shifted(long k) const;
  /// Substitute q -> q^m.
  QSeries dilated(long m) const;
  /// Re-express with a smaller offset, padding known zeros at the front.
  QSeries with_offset24(long new_offset24) const;

  friend bool operator==(const QSeries& a, const QSeries& b) = default;

 private:
  long offset24_ = 0;
  std::vector<Rational> coeffs_{Rational(0)};
};

QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const QSeries& a, const Rational& s);
QSeries qs_mul(const QSeries& a, const QSeries& b);
/// a^e by binary exponentiation, e >= 0.
QSeries qs_pow(const QSeries& a, long e);
/// Multiplicative inverse; requires a nonzero leading coefficient.
QSeries qs_inverse(const QSeries& a);
QSeries qs_div(const QSeries& a, const QSeries& b);
/// a^r for any integer r via the power recurrence
///   n f_0 g_n = sum_{k=1}^{n} ((r+1)k - n) f_k g_{n-k},
/// which costs O(prec * nnz(a)). Requires a nonzero leading coefficient.
QSeries qs_power_recurrence(const QSeries& a, long r);

/// True iff every coefficient on the shared exponent range agrees; offsets
/// must differ by a multiple of 24.
bool qs_agree(const QSeries& a, const QSeries& b);

/// Indices i in [0, bound] whose coefficient is exactly zero.
std::vector<long> vanishing_indices(const QSeries& f, long bound);

/// Returns lambda with b = lambda * a on the shared range, when one exists and
/// a is not identically zero there.
bool qs_proportional(const QSeries& a, const QSeries& b, Rational* lambda);

std::string to_json(const QSeries& s);
QSeries series_from_json(const std::string& text);

}  // namespace designlab::modforms
