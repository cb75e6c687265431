// Acceptance run: one PASS/FAIL line per criterion, with wall time against its limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "designlab/codes.hpp"
#include "designlab/lattices.hpp"
#include "designlab/modforms.hpp"
#include "designlab/voa.hpp"

using namespace designlab;
namespace mf = designlab::modforms;
namespace lt = designlab::lattices;
namespace cd = designlab::codes;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates checks; the first failure is kept as the detail line.
class Checker {
 public:
  void check(bool cond, const std::string& what) {
    if (cond) return;
    if (out_.pass) out_.detail = what;
    out_.pass = false;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

std::string str(const Rational& r) {
  std::string s = to_fraction_string(r);
  return r.get_den() == 1 ? s.substr(0, s.find('/')) : s;
}

lt::RatVec axis(const lt::Lattice& l, int a) {
  lt::RatVec e(static_cast<size_t>(l.rank()), Rational(0));
  e[static_cast<size_t>(a)] = 1;
  return lt::ambient_to_lattice(l, e);
}

bool proportional_first(const mf::QSeries& a, const mf::QSeries& b, long n, Rational* lambda) {
  if (a.offset24() != b.offset24() || a.prec() < n || b.prec() < n) return false;
  return mf::qs_proportional(a.truncated(n), b.truncated(n), lambda) && *lambda != 0;
}

// Zonal-kernel verdict at degree j: sum over y in X of sum_{x in X} Z_y(x).
// It is a sum of squares of harmonic sums, so it vanishes iff X is a degree-j design.
bool zonal_pass(const lt::Lattice& l, const lt::Shell& x, int j) {
  Rational total = 0;
  for (const auto& y : x.vectors) {
    lt::RatVec w(y.begin(), y.end());
    total += lt::zonal_sum(l, x, j, w);
  }
  return total == 0;
}

// Moment strength against the zonal and kernel verdicts for degrees 1..t.
void compare_shell(Checker& ck, const lt::Lattice& l, const lt::Shell& x, int t, const std::string& name) {
  auto m = lt::moment_design_test(l, x, t);
  std::vector<int> degrees;
  for (int j = 1; j <= t; ++j) degrees.push_back(j);
  auto rep = lt::spherical_T_design_report(l, x, degrees);
  int zonal_strength = 0;
  bool prefix = true;
  for (int j = 1; j <= t; ++j) {
    const bool z = zonal_pass(l, x, j);
    ck.check(z == rep.per_degree[static_cast<size_t>(j - 1)].pass,
             name + ": zonal and kernel verdicts differ at degree " + std::to_string(j));
    if (prefix && z) zonal_strength = j;
    else prefix = false;
  }
  ck.check(zonal_strength == m.strength, name + ": moment strength " + std::to_string(m.strength) +
                                             " vs zonal strength " + std::to_string(zonal_strength));
}

struct Shells {
  std::vector<std::pair<std::string, std::pair<lt::Lattice, lt::Shell>>> items;
  std::vector<int> t;
};

// Shells from criteria 8-10, reused by 13.
Shells& tested_shells() {
  static Shells s;
  return s;
}

void remember(const std::string& name, const lt::Lattice& l, const lt::Shell& x, int t) {
  tested_shells().items.push_back({name, {l, x}});
  tested_shells().t.push_back(t);
}

Outcome c1() {
  Checker ck;
  auto e = mf::eta_quotient(mf::parse_eta_spec("1:8"), 8);
  const std::vector<long> want{1, -8, 20, 0, -70, 64, 56, 0, -125};
  std::ostringstream os;
  for (long i = 0; i <= 8; ++i) {
    ck.check(e[i] == want[static_cast<size_t>(i)], "coefficient " + std::to_string(i) + " = " + str(e[i]));
    os << (i ? " " : "") << str(e[i]);
  }
  ck.check(e.offset24() == 8, "offset");
  ck.note(os.str());
  return ck.result();
}

Outcome c2() {
  Checker ck;
  auto e = mf::eta_quotient(mf::parse_eta_spec("3:8"), 3000);
  ck.check(e.offset24() == 24, "leading exponent is not q^1");
  // q - 8q^4 + 20q^7 - 70q^13 at exponents 1, 4, 7, 10, 13
  ck.check(e[0] == 1 && e[3] == -8 && e[6] == 20 && e[9] == 0 && e[12] == -70, "displayed coefficients");
  long nonzero = 0;
  for (long i = 0; i <= 3000; ++i) {
    if (e[i] == 0) continue;
    ++nonzero;
    ck.check(i % 3 == 0, "nonzero coefficient at exponent " + std::to_string(i + 1));
  }
  ck.note("exponents 1..3001, " + std::to_string(nonzero) + " nonzero, all = 1 mod 3");
  return ck.result();
}

Outcome c3() {
  Checker ck;
  const long n = 500;
  auto e4 = mf::eisenstein(4, n), e6 = mf::eisenstein(6, n);
  auto d = mf::qs_scale(mf::qs_sub(mf::qs_pow(e4, 3), mf::qs_pow(e6, 2)), Rational(1, 1728));
  auto eta24 = mf::eta_quotient(mf::parse_eta_spec("1:24"), n - 1);
  ck.check(d[0] == 0, "constant term");
  // d starts at q^0 with d[0] = 0; eta^24 starts at q^1.
  for (long i = 1; i <= n; ++i) ck.check(d[i] == eta24[i - 1], "mismatch at q^" + std::to_string(i));
  ck.check(d[1] == 1 && d[2] == -24, "tau(1), tau(2)");
  ck.check(mf::ramanujan_tau(1) == 1 && mf::ramanujan_tau(2) == -24, "tau table");
  ck.note("500 coefficients agree; tau(1) = 1, tau(2) = -24");
  return ck.result();
}

Outcome c4() {
  Checker ck;
  const long bound = 10000;
  auto b = voa::b_series(bound);
  long zeros = 0;
  for (long l = 1; l <= bound; ++l) {
    const bool z = b.coefficient(l) == 0;
    zeros += z;
    ck.check(z == voa::ord_criterion(l), "disagreement at l = " + std::to_string(l));
  }
  ck.note("l <= 10000: " + std::to_string(zeros) + " zeros, all matching the criterion");
  return ck.result();
}

Outcome c5() {
  Checker ck;
  auto c = voa::c_series(1000);
  for (long l = 1; l <= 1000; ++l) ck.check(c.coefficient(l) > 0, "c(" + std::to_string(l) + ") <= 0");
  auto scan = voa::strength_scan(24, 1, 1000);
  for (const auto& r : scan) ck.check(r.strength == 3 && !r.lower_bound, "strength at l = " + std::to_string(r.ell));
  ck.note("c(l) > 0 and strength 3 for l <= 1000");
  return ck.result();
}

Outcome c6() {
  Checker ck;
  auto golay = cd::golay_g24();
  auto d8 = cd::design_lambda(cd::shell(golay, 8), 5);
  ck.check(d8.is_design && d8.lambda == 1, "Golay C8 is not a 5-(24,8,1) design");
  ck.check(d8.subsets_checked == 42504, "checked " + std::to_string(d8.subsets_checked) + " 5-subsets");
  ck.check(!cd::design_lambda(cd::shell(golay, 8), 6).is_design, "Golay C8 passes t = 6");
  auto h = cd::design_lambda(cd::shell(cd::hamming_e8(), 4), 3);
  ck.check(h.is_design && h.lambda == 1, "Hamming C4 is not a 3-(8,4,1) design");
  auto r = cd::two_weight_design_check(golay, 12, {1, 3, 5}, 1L << 40);
  ck.check(r.one_design.is_design, "Golay C12 is not a 1-design");
  for (const auto& v : r.degrees) {
    ck.check(v.pass, "Golay C12 fails degree " + std::to_string(v.degree));
    ck.check(!v.sampled, "degree " + std::to_string(v.degree) + " was sampled");
  }
  ck.note("C8: 42504 5-subsets, lambda 1; C4: lambda 1; C12: 1-design, degrees 1,3,5 pass");
  return ck.result();
}

Outcome c7() {
  Checker ck;
  long functions = 0;
  for (auto code : {cd::golay_g24(), cd::hamming_e8()})
    for (int k : {1, 3}) {
      auto r = cd::antisymmetry_check(code, k, 1L << 40);
      const std::string tag = code.label + " Harm_" + std::to_string(k);
      ck.check(r.pass, tag + " fails at weight " + std::to_string(r.witness_weight));
      ck.check(!r.sampled, tag + " was sampled");
      ck.check(Integer(r.functions_checked) == cd::harm_dim(code.n, k), tag + " basis incomplete");
      functions += r.functions_checked;
    }
  ck.note(std::to_string(functions) + " basis functions, all antisymmetric");
  return ck.result();
}

Outcome c8() {
  Checker ck;
  long shells = 0;
  auto z2 = lt::lattice_zn(2);
  for (long n = 1; n <= 50; ++n) {
    auto x = lt::shell_enum(z2, Rational(n));
    if (x.empty()) continue;
    ++shells;
    auto m = lt::moment_design_test(z2, x, 4);
    ck.check(m.strength == 3, "Z2 norm " + std::to_string(n) + ": strength " + std::to_string(m.strength));
    remember("Z2 norm " + std::to_string(n), z2, x, 4);
  }
  auto a2 = lt::lattice_a2();
  for (long n = 2; n <= 50; ++n) {
    auto x = lt::shell_enum(a2, Rational(n));
    if (x.empty()) continue;
    ++shells;
    auto m = lt::moment_design_test(a2, x, 6);
    ck.check(m.strength == 5, "A2 norm " + std::to_string(n) + ": strength " + std::to_string(m.strength));
    remember("A2 norm " + std::to_string(n), a2, x, 6);
  }
  ck.note(std::to_string(shells) + " nonempty shells with the expected strength");
  return ck.result();
}

Outcome c9() {
  Checker ck;
  auto e8 = lt::lattice_e8();
  auto x = lt::shell_enum(e8, Rational(2));
  ck.check(x.size() == 240, "E8 norm-2 shell size");
  auto m = lt::moment_design_test(e8, x, 8);
  ck.check(m.strength == 7 && m.witness_k == 8, "E8 strength " + std::to_string(m.strength));
  ck.check(mf::ramanujan_tau(1) != 0, "tau(1) = 0");
  remember("E8 norm 2", e8, x, 8);
  const long n = 55;
  auto tr = voa::graded_trace(e8, lt::ThetaWeight::zonal(8, axis(e8, 0)), n);
  Rational lambda;
  ck.check(proportional_first(tr.series, voa::a_series(n).series, n, &lambda), "graded trace not proportional to eta^16");
  ck.note("strength 7, fails k = 8; theta/eta^8 = " + str(lambda) + " eta^16 over " + std::to_string(n) + " coefficients");
  return ck.result();
}

Outcome c10() {
  Checker ck;
  const std::vector<int> T{1, 2, 3, 5, 6, 7};
  auto b = voa::b_series(60);
  std::ostringstream os;
  for (const char* name : {"E8+E8", "D16+"}) {
    auto l = lt::lattice_by_name(name);
    auto x = lt::shell_enum(l, Rational(2));
    ck.check(x.size() == 480, std::string(name) + " norm-2 shell size");
    auto rep = lt::spherical_T_design_report(l, x, T);
    ck.check(rep.pass(), std::string(name) + " fails a degree in {1,2,3,5,6,7}");
    auto d4 = lt::spherical_T_design_report(l, x, {4});
    // Degree 4 fails exactly when the matching b coefficient is nonzero.
    ck.check(d4.per_degree[0].pass == (b.coefficient(1) == 0), std::string(name) + " degree-4 verdict vs b(1)");
    remember(std::string(name) + " norm 2", l, x, 8);
    const long n = 55;
    auto tr = voa::graded_trace(l, lt::ThetaWeight::zonal(4, axis(l, 0)), n);
    Rational lambda;
    ck.check(proportional_first(tr.series, b.series.truncated(n), n, &lambda),
             std::string(name) + " graded trace not proportional to eta^8");
    os << name << ": degree 4 " << (d4.per_degree[0].pass ? "passes" : "fails") << ", trace = " << str(lambda)
       << " eta^8; ";
  }
  os << "b(1) = " << str(b.coefficient(1));
  ck.note(os.str());
  return ck.result();
}

Outcome c11() {
  Checker ck;
  auto r = voa::remark4_series(1000);
  ck.check(r.checked_to >= 1000, "scan stopped at " + std::to_string(r.checked_to));
  ck.check(r.zeros.empty(), "vanishing coefficient at exponent " + (r.zeros.empty() ? "" : std::to_string(r.zeros[0])));
  ck.note("exponents " + std::to_string(r.checked_from) + ".." + std::to_string(r.checked_to) +
          ": no vanishing coefficients");
  return ck.result();
}

Outcome c12() {
  Checker ck;
  for (int c : {8, 16, 24}) {
    auto t = voa::conformal_T_set(c, 12);
    ck.check(t.derivation_agrees(), "c = " + std::to_string(c) + ": derivation disagrees");
    ck.check(t.derivation.size() == 6, "c = " + std::to_string(c) + ": even degrees missing");
  }
  for (int m = 1; m <= 3; ++m)
    for (int s = 1; s <= 3; ++s)
      ck.check(voa::modular_obstruction(24 * m, s, m).forced_vanishing,
               "no forced vanishing at c = " + std::to_string(24 * m) + ", s = " + std::to_string(s));
  ck.note("T-sets match at even degrees <= 12; forced vanishing for m = 1..3, s <= 3");
  return ck.result();
}

Outcome c13() {
  Checker ck;
  const auto& sh = tested_shells();
  ck.check(!sh.items.empty(), "no shells recorded (criteria 8-10 did not run)");
  for (size_t i = 0; i < sh.items.size(); ++i)
    compare_shell(ck, sh.items[i].second.first, sh.items[i].second.second, sh.t[i], sh.items[i].first);
  long code_shells = 0;
  for (auto code : {cd::hamming_e8(), cd::golay_g24(), cd::d16_plus()}) {
    auto dist = cd::weight_distribution(code);
    for (int w = 1; w < code.n; ++w) {
      if (dist[static_cast<size_t>(w)] == 0) continue;
      ++code_shells;
      auto fam = cd::shell(code, w);
      int brute = 0;
      for (int t = 1; t <= 5 && cd::design_lambda(fam, t).is_design; ++t) brute = t;
      const int harm = cd::delsarte_strength(code, w, 5, 1L << 40);
      ck.check(brute == harm, code.label + " weight " + std::to_string(w) + ": lambda strength " +
                                  std::to_string(brute) + " vs harmonic " + std::to_string(harm));
    }
  }
  ck.note(std::to_string(sh.items.size()) + " lattice shells and " + std::to_string(code_shells) +
          " code shells agree");
  return ck.result();
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "eta^8 coefficients", 1, c1},
      {2, "eta(3z)^8 support", 1, c2},
      {3, "Delta = eta^24, tau(1), tau(2)", 5, c3},
      {4, "b(l) = 0 iff ord criterion, l <= 10^4", 30, c4},
      {5, "c = 24 strength scan", 1, c5},
      {6, "Golay and Hamming designs", 60, c6},
      {7, "harmonic enumerator antisymmetry", 120, c7},
      {8, "Z2 and A2 shell strengths", 60, c8},
      {9, "E8 norm-2 shell and eta^16 trace", 120, c9},
      {10, "rank-16 norm-2 shells and eta^8 trace", 300, c10},
      {11, "remark4 series nonvanishing", 5, c11},
      {12, "conformal T-sets and obstruction", 1, c12},
      {13, "moment vs zonal, lambda vs harmonic", 300, c13},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit) {
      o.pass = false;
      o.detail = "over time limit; " + o.detail;
    }
    failed += !o.pass;
    std::printf("%s  %2d  %-40s %8.3f s / %3.0f s  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, c.limit,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed ? 1 : 0;
}
