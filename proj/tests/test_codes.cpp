#include "doctest.h"

#include <bit>
#include <map>

#include "designlab/codes.hpp"

using namespace designlab;
using namespace designlab::codes;

namespace {

// Rank over Q of a family of sparse functions (small cases only).
long rational_rank(const std::vector<DiscreteHarmonic>& fs) {
  std::map<Word, size_t> col;
  for (const auto& f : fs)
    for (const auto& [z, v] : f.values) col.emplace(z, col.size());
  std::vector<std::vector<Rational>> m;
  for (const auto& f : fs) {
    std::vector<Rational> row(col.size(), Rational(0));
    for (const auto& [z, v] : f.values) row[col[z]] = v;
    m.push_back(row);
  }
  long rank = 0;
  for (size_t c = 0; c < col.size() && rank < static_cast<long>(m.size()); ++c) {
    size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (size_t j = 0; j < col.size(); ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Direct definition: sum over codewords c of weight i of f~(supp c).
std::vector<Rational> hwe_by_definition(const BinaryCode& c, const DiscreteHarmonic& f) {
  std::vector<Rational> out(c.n + 1, Rational(0));
  for (Word w : codewords(c)) {
    Rational s = 0;
    for (const auto& [z, v] : f.values)
      if ((z & w) == z) s += v;
    out[std::popcount(w)] += s;
  }
  return out;
}

}  // namespace

TEST_CASE("fixtures") {
  auto h = hamming_e8();
  CHECK(h.n == 8);
  CHECK(h.k() == 4);
  CHECK(is_doubly_even(h));
  CHECK(is_self_dual(h));
  CHECK(min_weight(h) == 4);
  CHECK(weight_distribution(h) == std::vector<long>{1, 0, 0, 0, 14, 0, 0, 0, 1});

  auto g = golay_g24();
  CHECK(g.k() == 12);
  CHECK(is_doubly_even(g));
  CHECK(min_weight(g) == 8);
  auto a = weight_distribution(g);
  CHECK(a[0] == 1);
  CHECK(a[8] == 759);
  CHECK(a[12] == 2576);
  CHECK(a[16] == 759);
  CHECK(a[24] == 1);

  auto hh = direct_sum(h, h);
  CHECK(hh.n == 16);
  CHECK(hh.k() == 8);
  CHECK(is_self_dual(hh));
  auto d = d16_plus();
  CHECK(is_self_dual(d));
  CHECK(weight_distribution(d)[4] == 28);
  CHECK(weight_distribution(hh)[4] == 28);

  CHECK_FALSE(is_self_dual(code_from_generator(8, {})));
  CHECK(code_by_name("hamming8+hamming8").n == 16);
  CHECK_THROWS(code_by_name("nope"));
}

TEST_CASE("dependent rows are dropped with a flag") {
  auto c = code_from_strings({"1100", "0011", "1111"});
  CHECK(c.k() == 2);
  CHECK(c.dropped_dependent);
  CHECK_FALSE(code_from_strings({"1100", "0011"}).dropped_dependent);
}

TEST_CASE("shells and design_lambda") {
  auto g = golay_g24();
  CHECK(shell(g, 8).blocks.size() == 759);
  CHECK(shell(g, 10).blocks.empty());
  auto d8 = design_lambda(shell(g, 8), 5);
  CHECK(d8.is_design);
  CHECK(d8.lambda == 1);
  CHECK(d8.subsets_checked == 42504);
  // lambda_t = 759 C(8,t)/C(24,t)
  const long lam[] = {759, 253, 77, 21, 5, 1};
  for (int t = 0; t <= 5; ++t) CHECK(design_lambda(shell(g, 8), t).lambda == lam[t]);

  auto h = hamming_e8();
  auto h4 = design_lambda(shell(h, 4), 3);
  CHECK(h4.is_design);
  CHECK(h4.lambda == 1);
  auto h44 = design_lambda(shell(h, 4), 4);
  CHECK_FALSE(h44.is_design);
  CHECK(h44.count_a != h44.count_b);
  CHECK(std::popcount(h44.witness_a) == 4);

  BlockFamily empty{8, {}, {}};
  CHECK(design_lambda(empty, 3).lambda == 0);
  CHECK_THROWS(design_lambda(shells(g, {8, 16}), 1));
  CHECK(design_lambda(shells(g, {8, 16}), 1, true).is_design);
}

TEST_CASE("Harm_k bases") {
  CHECK(harm_basis(4, 1).size() == 3);
  CHECK(harm_basis(7, 0).size() == 1);
  CHECK(harm_dim(24, 5) == 31878);
  CHECK(harm_basis(5, 3).empty());
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto b = harm_basis(n, k);
      CHECK(Integer(static_cast<long>(b.size())) == harm_dim(n, k));
      CHECK(rational_rank(b) == static_cast<long>(b.size()));
    }
  CHECK_THROWS_AS(harm_basis(24, 5, 1000), Error);
  for (const auto& f : sampled_harmonics(24, 5, 3, 42)) CHECK(in_harm_kernel(f));
  DiscreteHarmonic bad{4, 1, {{1, Rational(1)}}};
  CHECK_FALSE(in_harm_kernel(bad));
}

TEST_CASE("harmonic weight enumerators") {
  auto h = hamming_e8();
  DiscreteHarmonic one{8, 0, {{0, Rational(1)}}};
  auto w = harmonic_weight_enumerator(h, one);
  std::vector<Rational> want(9, Rational(0));
  want[0] = 1, want[4] = 14, want[8] = 1;
  CHECK(w.coeffs == want);

  for (int k = 1; k <= 3; ++k)
    for (const auto& f : harm_basis(8, k)) CHECK(harmonic_weight_enumerator(h, f).coeffs == hwe_by_definition(h, f));

  auto g = golay_g24();
  auto samples = sampled_harmonics(24, 3, 2, 5);
  for (const auto& f : samples) CHECK(harmonic_weight_enumerator(g, f).coeffs == hwe_by_definition(g, f));
  IncidenceTable t1(g, 1);
  for (const auto& f : harm_basis(24, 1)) CHECK(t1.enumerator(f)[12] == 0);
  IncidenceTable t3(g, 3);
  for (const auto& f : harm_basis(24, 3)) {
    auto c = t3.enumerator(f);
    CHECK(c[8] + c[16] == 0);
  }
}

TEST_CASE("antisymmetry") {
  auto h = hamming_e8();
  CHECK(antisymmetry_check(h, 1).pass);
  CHECK(antisymmetry_check(h, 3).pass);
  auto g = golay_g24();
  auto r = antisymmetry_check(g, 5, 1000, 20, 3);
  CHECK(r.sampled);
  CHECK(r.functions_checked == 20);
  CHECK(r.pass);
  CHECK_THROWS(antisymmetry_check(h, 2));
}

TEST_CASE("two-weight designs") {
  auto g = golay_g24();
  auto r = two_weight_design_check(g, 8, {1, 3, 5});
  CHECK(r.pass());
  CHECK(r.blocks == 759 * 2);
  CHECK(r.one_design.is_design);
  auto r12 = two_weight_design_check(g, 12, {1});
  CHECK(r12.pass());
  CHECK(design_lambda(shell(g, 12), 1).is_design);
  CHECK(two_weight_design_check(d16_plus(), 4, {1, 3}).pass());
  // even degrees are not forced: hamming8+hamming8 weight 4 fails at degree 2
  auto hh = direct_sum(hamming_e8(), hamming_e8());
  CHECK_FALSE(two_weight_design_check(hh, 4, {2}).pass());
}

TEST_CASE("Delsarte criterion agrees with brute force") {
  for (const auto& name : {"hamming8", "d16plus", "hamming8+hamming8"}) {
    auto c = code_by_name(name);
    auto a = weight_distribution(c);
    for (int w = 1; w <= c.n; ++w) {
      if (!a[w]) continue;
      auto fam = shell(c, w);
      auto harm = harmonic_design_degrees(c, {w}, std::min(5, w));
      for (int t = 1; t <= std::min(5, w); ++t) {
        bool harmonic = true;
        for (int j = 0; j < t; ++j) harmonic = harmonic && harm[j].pass;
        CHECK_MESSAGE(design_lambda(fam, t).is_design == harmonic, name << " w=" << w << " t=" << t);
      }
    }
  }
}

TEST_CASE("invariant divisibility") {
  auto g = golay_g24();
  for (const auto& f : sampled_harmonics(24, 3, 3, 11)) {
    auto r = divisibility_structure_check(g, f);
    CHECK(r.xy_power_divides);
    CHECK(r.invariant == "P18");
    CHECK(r.invariant_divides);
  }
  auto h = hamming_e8();
  for (const auto& f : harm_basis(8, 1)) {
    auto r = divisibility_structure_check(h, f);
    CHECK(r.enumerator_is_zero);
    CHECK(r.pass());
  }
  DiscreteHarmonic one{8, 0, {{0, Rational(1)}}};
  CHECK(divisibility_structure_check(h, one).pass());

  BinaryForm rem;
  CHECK(bf_divide(bf_mul(P8(), P18()), P18()).has_value());
  CHECK_FALSE(bf_divide(P8(), P18(), &rem).has_value());
  CHECK(bf_divide(P30(), P12())->coeffs == P18().coeffs);
  CHECK(P8().coeffs[4] == 14);
}
