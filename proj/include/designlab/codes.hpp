#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "designlab/common.hpp"

namespace designlab::codes {

/// Bit i of a word is coordinate i (0-based).
using Word = std::uint32_t;

constexpr int kMaxLength = 32;
/// Codeword enumeration visits 2^k words.
constexpr int kMaxEnumDim = 24;

struct BinaryCode {
  int n = 0;
  /// Reduced row echelon form, independent rows.
  std::vector<Word> rows;
  /// Set when code_from_generator had to drop dependent input rows.
  bool dropped_dependent = false;
  std::string label;

  int k() const { return static_cast<int>(rows.size()); }
};

BinaryCode code_from_generator(int n, const std::vector<Word>& rows, std::string label = "");
/// Rows as '0'/'1' strings, all of the same length.
BinaryCode code_from_strings(const std::vector<std::string>& rows, std::string label = "");
/// Plain-text generator matrix: one row per line, '#' comments and blank lines ignored.
BinaryCode load_code_file(const std::string& path, std::string label = "");

BinaryCode hamming_e8();
BinaryCode golay_g24();
BinaryCode d16_plus();
BinaryCode direct_sum(const BinaryCode& a, const BinaryCode& b);
/// "hamming8", "golay24", "d16plus", a '+'-joined direct sum of those, or a file path.
BinaryCode code_by_name(const std::string& name);

std::string word_string(Word w, int n);

/// Visits all 2^k codewords in Gray-code order.
void for_each_codeword(const BinaryCode& c, const std::function<void(Word)>& fn);
std::vector<Word> codewords(const BinaryCode& c);
/// A[i] = number of codewords of weight i, i = 0..n.
std::vector<long> weight_distribution(const BinaryCode& c);

bool is_doubly_even(const BinaryCode& c);
bool is_self_orthogonal(const BinaryCode& c);
bool is_self_dual(const BinaryCode& c);
/// Smallest nonzero weight; 0 for the zero code.
int min_weight(const BinaryCode& c);

// -- block designs -------------------------------------------------------------

struct BlockFamily {
  int n = 0;
  std::vector<Word> blocks;  // sorted, distinct
  std::set<int> sizes;
};

BlockFamily shell(const BinaryCode& c, int w);
/// Union of several shells (the 2-weight families).
BlockFamily shells(const BinaryCode& c, const std::vector<int>& weights);

struct DesignLambda {
  bool is_design = true;
  long lambda = 0;
  /// On failure: two t-subsets with different block counts.
  Word witness_a = 0, witness_b = 0;
  long count_a = 0, count_b = 0;
  long subsets_checked = 0;
};

/// Brute force over every t-subset. Mixed block sizes are refused unless
/// allow_mixed is set.
DesignLambda design_lambda(const BlockFamily& f, int t, bool allow_mixed = false);

// -- discrete harmonic functions ----------------------------------------------

/// Sparse function on k-subsets of {0..n-1}.
struct DiscreteHarmonic {
  int n = 0;
  int k = 0;
  std::vector<std::pair<Word, Rational>> values;
};

/// gamma(f)(y) = sum over k-sets z containing the (k-1)-set y of f(z); only nonzero entries.
std::vector<std::pair<Word, Rational>> apply_gamma(const DiscreteHarmonic& f);
bool in_harm_kernel(const DiscreteHarmonic& f);

/// C(n,k) - C(n,k-1), or 0 when k > n/2.
Integer harm_dim(int n, int k);

constexpr long kDefaultHarmCap = 200000;

/// Basis of Harm_k from standard polytabloids of shape (n-k, k):
/// f = (b_1 - a_1)...(b_k - a_k) for second rows b satisfying the ballot
/// condition. Each element is checked against gamma. Throws CapExceeded when
/// the dimension exceeds cap.
std::vector<DiscreteHarmonic> harm_basis(int n, int k, long cap = kDefaultHarmCap);

/// Random rational combinations of products of k disjoint point differences.
std::vector<DiscreteHarmonic> sampled_harmonics(int n, int k, int count, std::uint64_t seed);

/// N[w][rank(z)] = number of weight-w codewords whose support contains the
/// k-set z. Enough to evaluate every harmonic weight enumerator of degree k.
class IncidenceTable {
 public:
  IncidenceTable(const BinaryCode& c, int k);
  int n() const { return n_; }
  int k() const { return k_; }
  long count(int weight, Word z) const;
  /// c(i) for i = 0..n.
  std::vector<Rational> enumerator(const DiscreteHarmonic& f) const;

 private:
  int n_, k_;
  std::vector<std::vector<long>> counts_;  // indexed [weight][rank]
};

/// Rank of a k-subset in the combinatorial number system.
long subset_rank(Word z);

struct HarmonicWeightEnumerator {
  int n = 0;
  int k = 0;
  std::vector<Rational> coeffs;  // coefficient of x^{n-i} y^i
};

HarmonicWeightEnumerator harmonic_weight_enumerator(const BinaryCode& c, const DiscreteHarmonic& f);

struct AntisymmetryResult {
  bool pass = true;
  bool sampled = false;
  long functions_checked = 0;
  /// First failure: function index and weight i with c(i) + c(n-i) != 0.
  long witness_function = -1;
  int witness_weight = -1;
  Rational witness_value;
};

/// c(i) + c(n-i) = 0 for every basis element of Harm_k (k odd), or for
/// `samples` sampled harmonics when the basis exceeds cap.
AntisymmetryResult antisymmetry_check(const BinaryCode& c, int k, long cap = kDefaultHarmCap, int samples = 20,
                                      std::uint64_t seed = 1);

struct DegreeVerdict {
  int degree = 0;
  bool pass = true;
  bool sampled = false;
  long functions_checked = 0;
  long witness_function = -1;
  Rational witness_sum;
};

struct TwoWeightReport {
  int ell = 0;
  std::vector<int> weights;
  long blocks = 0;
  std::vector<DegreeVerdict> degrees;
  /// design_lambda at t = 1 over the union, the direct reading of a 1-design with 2-weight.
  DesignLambda one_design;
  bool pass() const;
};

/// Sum over F = C_ell u C_{n-ell} of f~ for f in a basis of Harm_j, j in T.
TwoWeightReport two_weight_design_check(const BinaryCode& c, int ell, const std::vector<int>& T,
                                        long cap = kDefaultHarmCap);

/// Harmonic-criterion verdicts for a union of shells at each degree 1..max_degree.
std::vector<DegreeVerdict> harmonic_design_degrees(const BinaryCode& c, const std::vector<int>& weights, int max_degree,
                                                   long cap = kDefaultHarmCap);

/// Largest t <= max_t with all Harm_j sums vanishing for j <= t.
int delsarte_strength(const BinaryCode& c, int w, int max_t, long cap = kDefaultHarmCap);

// -- bivariate invariants --------------------------------------------------------

/// Homogeneous polynomial sum c_i x^{deg-i} y^i.
struct BinaryForm {
  int degree = 0;
  std::vector<Rational> coeffs;
};

BinaryForm bf_mul(const BinaryForm& a, const BinaryForm& b);
/// Exact division; returns nullopt and fills remainder when b does not divide a.
std::optional<BinaryForm> bf_divide(const BinaryForm& a, const BinaryForm& b, BinaryForm* remainder = nullptr);
bool bf_is_zero(const BinaryForm& a);

BinaryForm P8();
BinaryForm P12();
BinaryForm P18();
BinaryForm P24();
BinaryForm P30();

struct DivisibilityResult {
  bool xy_power_divides = true;
  /// Smallest i violating c(i) = 0 for i < k or i > n - k.
  int xy_witness = -1;
  /// Which invariant is required for this k mod 4 ("1", "P12", "P18", "P30").
  std::string invariant;
  bool invariant_divides = true;
  bool enumerator_is_zero = false;
  BinaryForm remainder;
  bool pass() const { return xy_power_divides && invariant_divides; }
};

/// w = (xy)^k Z with Z divisible by P12, P18 or P30 as k is 2, 3 or 1 mod 4.
DivisibilityResult divisibility_structure_check(const BinaryCode& c, const DiscreteHarmonic& f);

}  // namespace designlab::codes
