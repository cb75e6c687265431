#pragma once

#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "designlab/qseries.hpp"

namespace designlab::modforms {

/// prod_i eta(scale_i z)^{exponent_i}; an empty list is the constant 1.
struct EtaFactor {
  long scale;
  long exponent;
  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

struct EtaQuotientSpec {
  std::vector<EtaFactor> factors;
};

/// Parses "3:8" or "2:15,1:-7"; the empty string is the empty product.
EtaQuotientSpec parse_eta_spec(const std::string& text);

/// eta(z) = q^{1/24} prod (1 - q^i), from the pentagonal number theorem.
QSeries eta(long prec);
/// prod_{i>=1} (1 - q^i), offset 0.
QSeries euler_product(long prec);
QSeries eta_quotient(const EtaQuotientSpec& spec, long prec);

/// E_4 = 1 + 240 sum sigma_3(n) q^n, E_6 = 1 - 504 sum sigma_5(n) q^n.
QSeries eisenstein(int k, long prec);
/// (E_4^3 - E_6^2) / 1728.
QSeries delta(long prec);

// -- level-one spaces --------------------------------------------------------

/// Dimension of M_k(SL_2(Z)): number of (a, b) >= 0 with 4a + 6b = k.
long mf_dim(long k);

struct ModFormSpace {
  long weight = 0;
  long prec = 0;
  /// Reduced echelon basis: basis[i] has coefficient 1 at leading[i] and 0 at
  /// every other leading exponent.
  std::vector<QSeries> basis;
  std::vector<long> leading;
  /// Spanning generators before echelonization, with labels like "E4^3".
  std::vector<QSeries> generators;
  std::vector<std::string> generator_labels;
  /// basis[i] = sum_g transform[i][g] * generators[g].
  std::vector<std::vector<Rational>> transform;

  long dim() const { return static_cast<long>(basis.size()); }
};

/// Echelon basis of M_k from the monomials E4^a E6^b with 4a + 6b = k.
ModFormSpace mf_basis(long k, long prec);

/// Echelonizes an arbitrary spanning set of weight-k forms (offset 0).
ModFormSpace mf_space_from_generators(long weight, std::vector<QSeries> generators, std::vector<std::string> labels);

constexpr long kFitSafetyMargin = 10;

struct FitResult {
  bool member = false;
  /// Coordinates against the echelon basis.
  std::vector<Rational> coords;
  /// Coordinates against the generators.
  std::vector<Rational> generator_coords;
  /// First exponent at which f differs from the best fit (non-members only).
  long witness_index = -1;
  Rational residual;
  long checked_through = 0;
};

/// Exact membership test. Throws InsufficientPrecision when the shared
/// precision is below dim + kFitSafetyMargin.
FitResult fit_in_space(const QSeries& f, const ModFormSpace& space);

// -- elementary number theory ------------------------------------------------

Integer sigma(long n, unsigned k);
/// sigma_k(n) for n = 0..N (entry 0 unused, set to 0).
std::vector<Integer> sigma_table(long N, unsigned k);
std::vector<std::pair<long, int>> factorize(long n);
int ord_p(long n, long p);
bool is_prime(long n);

/// Ramanujan tau from the Delta expansion, cached up to a growing bound.
class TauTable {
 public:
  explicit TauTable(long default_bound = 10000) : default_bound_(default_bound) {}
  Integer tau(long n);
  /// Ensures tau(1..bound) are cached.
  void reserve(long bound);
  long cached_bound() const;
  long default_bound() const { return default_bound_; }

 private:
  long default_bound_;
  mutable std::mutex mutex_;
  std::vector<Integer> values_;  // values_[n] = tau(n), values_[0] = 0
};

TauTable& shared_tau_table();
Integer ramanujan_tau(long n);

}  // namespace designlab::modforms
