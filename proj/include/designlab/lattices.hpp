#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "designlab/codes.hpp"
#include "designlab/common.hpp"
#include "designlab/modforms.hpp"

namespace designlab::lattices {

using Matrix = std::vector<std::vector<Rational>>;
using IntVec = std::vector<long>;
using RatVec = std::vector<Rational>;

/// Integer basis B with gram = scale * B B^T. Polynomials on a framed lattice
/// are evaluated at the unscaled ambient vector B^T v.
struct Frame {
  std::vector<IntVec> basis;
  Rational scale;
};

struct Lattice {
  Matrix gram;
  std::optional<Frame> frame;
  /// Set for construction-A lattices; enables the codeword-sum theta route.
  std::optional<codes::BinaryCode> source;
  std::string label;

  int rank() const { return static_cast<int>(gram.size()); }
};

/// Checks symmetry and positive definiteness (exact LDL^T).
Lattice lattice_from_gram(Matrix gram, std::string label);
Lattice lattice_zn(int n);
Lattice lattice_a2();
/// construction_a(hamming_e8()).
Lattice lattice_e8();
/// (1/sqrt 2){x in Z^n : x mod 2 in C}; C must be doubly even.
Lattice construction_a(const codes::BinaryCode& c);
Lattice direct_sum(const Lattice& a, const Lattice& b);
/// Rows of integers or num/den entries.
Lattice load_gram_file(const std::string& path, std::string label = "");
/// Z<n>, A2, E8, E8+E8, D16+, golay24-A, A:<code name>, e8_cartan, or a path.
Lattice lattice_by_name(const std::string& name);

/// Pivots of the exact LDL^T factorization.
std::vector<Rational> ldl_pivots(const Matrix& gram);
Rational determinant(const Lattice& l);
bool is_integral(const Lattice& l);
bool is_even(const Lattice& l);
bool is_unimodular(const Lattice& l);

Rational inner(const Lattice& l, const IntVec& u, const IntVec& v);
Rational inner(const Lattice& l, const IntVec& u, const RatVec& w);
Rational norm(const Lattice& l, const IntVec& v);
/// Lattice-coordinate vector w with B^T w = e (so inner(v, w) = scale * (B^T v) . e).
RatVec ambient_to_lattice(const Lattice& l, const RatVec& e);
IntVec ambient_vector(const Lattice& l, const IntVec& v);

// -- shells -------------------------------------------------------------------

constexpr long kDefaultShellCap = 1000000;

struct Shell {
  Rational norm;
  std::vector<IntVec> vectors;
  bool empty() const { return vectors.empty(); }
  long size() const { return static_cast<long>(vectors.size()); }
};

/// Fincke-Pohst search with float pruning widened by a 2^-20 relative slack;
/// every vector is accepted by an exact integer norm check.
Shell shell_enum(const Lattice& l, const Rational& norm, long cap = kDefaultShellCap);
/// All nonzero shells with norm <= max_norm, in increasing norm.
std::vector<Shell> shells_up_to(const Lattice& l, const Rational& max_norm, long cap = kDefaultShellCap);
/// Number of lattice vectors with norm exactly m for m = 0..max_norm (integral lattices).
std::vector<long> shell_sizes(const Lattice& l, long max_norm, long cap = 50 * kDefaultShellCap);
std::string shell_csv(const Shell& s);

// -- polynomials ----------------------------------------------------------------

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(int nvars) : n_(nvars) {}
  static Polynomial constant(int nvars, const Rational& c);
  static Polynomial variable(int nvars, int i);

  int nvars() const { return n_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
  void add_term(const std::vector<int>& exponents, const Rational& c);
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial, else the degree if homogeneous; throws otherwise.
  int homogeneous_degree() const;

  Rational evaluate(const RatVec& x) const;
  Rational evaluate(const IntVec& x) const;
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  int n_ = 0;
  std::map<std::vector<int>, Rational> terms_;
};

Polynomial pow(const Polynomial& p, int e);
Polynomial laplacian(const Polynomial& p);
bool is_harmonic(const Polynomial& p);

/// Homogeneous polynomial with vanishing Laplacian (checked on construction).
struct HarmonicPolynomial {
  Polynomial poly;
  int degree = 0;
  std::string label;
};

HarmonicPolynomial make_harmonic(Polynomial p, std::string label = "");

/// Coefficients a_i with sum_i a_i t^{k-2i} s^i harmonic in dimension n:
/// a_0 = 1, a_{i+1}/a_i = -(k-2i)(k-2i-1) / (2(i+1)(n+2k-2i-4)).
std::vector<Rational> zonal_coefficients(int n, int k);
/// sum_i a_i (x.u)^{k-2i} (|x|^2 |u|^2)^i expanded in the ambient variables.
HarmonicPolynomial zonal_harmonic(int n, int k, const RatVec& u);

/// Weight function for theta series and design sums.
struct ThetaWeight {
  enum class Kind { One, Zonal, Poly } kind = Kind::One;
  int degree = 0;
  /// Zonal: direction in lattice coordinates; the value at v is
  /// sum_i a_i (v.w)^{k-2i} ((v.v)(w.w))^i with Gram inner products.
  RatVec direction;
  /// Poly: evaluated on the unscaled ambient vector (framed lattices only).
  HarmonicPolynomial poly;

  static ThetaWeight one();
  static ThetaWeight zonal(int degree, RatVec direction);
  static ThetaWeight polynomial(HarmonicPolynomial p);
  std::string describe() const;
};

Rational evaluate_weight(const Lattice& l, const ThetaWeight& w, const IntVec& v);

// -- spherical designs ----------------------------------------------------------

/// Average of (x.u)^k over the unit sphere in R^n.
Rational sphere_moment(int n, int k);

/// M_p = sum_{x,y in X} (x.y)^p for p = 0..t, by pairwise inner products or,
/// on framed lattices when cheaper, by squared power sums over monomials.
std::vector<Rational> shell_moments(const Lattice& l, const Shell& x, int t);
bool is_antipodal(const Shell& x);

struct MomentVerdict {
  int k = 0;
  bool pass = false;
  Rational lhs, rhs;
};

struct MomentReport {
  std::vector<MomentVerdict> per_k;
  /// Largest s <= t with every k <= s passing.
  int strength = 0;
  /// First failing k, or -1.
  int witness_k = -1;
  bool antipodal = false;
};

/// sum_{x,y} (x.y)^k == |X|^2 r^{2k} sphere_moment(n, k) for k = 1..t.
MomentReport moment_design_test(const Lattice& l, const Shell& x, int t);

/// S_j = sum_{x,y} G_j(x, y), with G_j the zonal kernel of degree j; zero iff
/// every degree-j harmonic sum over X vanishes.
Rational gegenbauer_sum(int n, const Rational& norm, const std::vector<Rational>& moments, int j);

/// sum_{x in X} Z_w(x) for the degree-k zonal function with direction w.
Rational zonal_sum(const Lattice& l, const Shell& x, int k, const RatVec& w);

struct DegreeResult {
  int degree = 0;
  bool pass = false;
  /// The per-degree Gegenbauer kernel sum (the criterion).
  Rational kernel_sum;
  /// Raw moment identity at k = degree, reported alongside.
  bool raw_moment_pass = false;
  bool in_expected = false;
};

struct TDesignReport {
  Rational norm;
  long shell_size = 0;
  bool antipodal = false;
  std::vector<DegreeResult> per_degree;
  bool pass() const;
};

/// Per-degree verdicts for j in T. Odd j are checked (they vanish by antipodality).
TDesignReport spherical_T_design_report(const Lattice& l, const Shell& x, const std::vector<int>& T);
/// The expected T-set for even unimodular ranks 8, 16, 24 (degrees <= max_degree, odd ones included).
std::vector<int> expected_T_set(int rank, int max_degree);

// -- theta series ------------------------------------------------------------------

enum class ThetaRoute { Auto, Enumerate, CodewordSum };

/// sum_{(x,x) <= prec_norm} P(x) q^{(x,x)} with q = e^{pi i z}; integral lattices only.
modforms::QSeries harmonic_theta(const Lattice& l, const ThetaWeight& w, long prec_norm,
                                 ThetaRoute route = ThetaRoute::Auto);
/// True when the codeword-sum route applies (construction A with P = 1 or zonal along an ambient axis).
bool codeword_route_available(const Lattice& l, const ThetaWeight& w);
/// Reindexes q^{(x,x)} -> q^{(x,x)/2}; odd exponents with nonzero coefficient abort.
modforms::QSeries to_modular_q(const modforms::QSeries& lattice_theta);

struct ThetaMembership {
  long weight = 0;
  bool e6_factor = false;
  modforms::FitResult fit;
  std::vector<std::string> generator_labels;
};

/// Fits to_modular_q(theta_{L,P}) into M_{n/2 + deg P}; the E6 factor is
/// reported when deg P / 2 is odd (every form of that weight carries it).
ThetaMembership theta_membership_check(const Lattice& l, const ThetaWeight& w, long prec = -1);

}  // namespace designlab::lattices
