#pragma once

#include <string>
#include <vector>

#include "designlab/lattices.hpp"
#include "designlab/modforms.hpp"

namespace designlab::voa {

using modforms::QSeries;

/// q^{-c/24} sum_i x(i) q^i. Index i of `series` is the coefficient x(i).
struct TraceSeries {
  int central_charge = 0;
  QSeries series;
  std::string source;

  const Rational& coefficient(long i) const { return series[i]; }
  long prec() const { return series.prec(); }
};

/// eta^16, eta^8 and E4 written as q^{-1/3}, q^{-2/3}, q^{-1} times sum_{i>=1}.
TraceSeries a_series(long prec);
TraceSeries b_series(long prec);
TraceSeries c_series(long prec);

/// theta_{L,P} / eta^rank in the modular variable; L even unimodular, rank a multiple of 8.
TraceSeries graded_trace(const lattices::Lattice& l, const lattices::ThetaWeight& w, long prec);

/// Some prime p = 2 (mod 3) divides 3l - 2 to an odd power.
bool ord_criterion(long ell);

struct ObstructionResult {
  int central_charge = 0;
  int s = 0;
  long mu = 0;
  long weight = 0;
  long dim = 0;
  /// Echelon leading exponents below mu; each is one vanishing condition.
  long constraints = 0;
  bool forced_vanishing = false;
  std::string reason;
  /// Basis of the forms with ord_q >= mu (empty when forced).
  std::vector<QSeries> witness;
};

/// Whether eta^{-c} * (weight c/2 + s form with ord_q >= mu) must be zero.
ObstructionResult modular_obstruction(int c, int s, long mu, long prec = 20);

struct TDegree {
  int degree = 0;
  bool hardcoded = false;
  bool derived = false;
  std::string reason;
};

/// T = finite_part together with every odd positive integer.
struct ConformalTSet {
  int central_charge = 0;
  std::vector<int> finite_part;
  bool includes_all_odd = true;
  /// Even degrees up to max_even with the hardcoded and derived verdicts.
  std::vector<TDegree> derivation;
  bool derivation_agrees() const;
};

ConformalTSet conformal_T_set(int c, int max_even = 12);

struct StrengthReport {
  int central_charge = 0;
  long ell = 0;
  std::vector<int> base_T;
  int contested_degree = 0;
  /// The coefficient deciding the contested degree and its series name.
  Rational coefficient;
  std::string coefficient_name;
  bool contested_holds = false;
  int strength = 0;
  /// True when strength is only a lower bound ("at least").
  bool lower_bound = false;
  std::string verdict;
  /// c = 16 only: the two readings of the ord_p(3l-2) statement.
  std::string reading_statement, reading_proof;
  bool criterion = false;
  std::string note;
};

StrengthReport strength_at(int c, long ell, long prec = -1);
/// strength_at for every ell in [from, to], sharing one series expansion.
std::vector<StrengthReport> strength_scan(int c, long from, long to);

struct LehmerEntry {
  long ell = 0;
  Integer tau;
  bool nonzero = false;
  /// tau(l) equals the convolution of the a-series with eta^8.
  bool convolution_check = false;
  /// For small l: E8 shell of norm 2l fails (true) or passes the degree-8 moment test.
  bool shell_checked = false;
  bool shell_fails_degree8 = false;
};

struct LehmerScan {
  long bound = 0;
  std::vector<LehmerEntry> entries;
  std::vector<long> zeros;
};

/// tau(l) != 0 for l <= bound; E8 shells are tested for l <= shell_bound.
LehmerScan lehmer_scan(long bound, long shell_bound = 3);

struct SeriesScan {
  QSeries series;
  std::string source;
  /// Exponents (remark4) or indices (d-series) with a zero coefficient.
  std::vector<long> zeros;
  long checked_from = 0, checked_to = 0;
};

/// q^{1/24} eta(2z)^15 / eta(z)^7, scanned at exponents 1..prec.
SeriesScan remark4_series(long prec);
/// E4 eta^8 = q^{-2/3} sum_{i>=1} d(i) q^i, scanned at i = 1..prec.
SeriesScan d_series(long prec);

}  // namespace designlab::voa
