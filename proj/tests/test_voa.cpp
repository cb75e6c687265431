#include "doctest.h"

#include "designlab/voa.hpp"

using namespace designlab;
using namespace designlab::voa;
using designlab::lattices::ThetaWeight;

namespace {

lattices::RatVec axis(const lattices::Lattice& l, int a) {
  lattices::RatVec e(static_cast<size_t>(l.rank()), Rational(0));
  e[static_cast<size_t>(a)] = 1;
  return lattices::ambient_to_lattice(l, e);
}

// Nonzero proportionality over indices 1..n.
bool proportional_over(const TraceSeries& a, const TraceSeries& b, long n) {
  REQUIRE(a.series.offset24() == b.series.offset24());
  REQUIRE(a.prec() >= n);
  REQUIRE(b.prec() >= n);
  Rational lambda;
  return modforms::qs_proportional(a.series.truncated(n), b.series.truncated(n), &lambda) && lambda != 0;
}

}  // namespace

TEST_CASE("a, b, c series") {
  auto a = a_series(10), b = b_series(10), c = c_series(10);
  CHECK(a.series.offset24() == -8);
  CHECK(b.series.offset24() == -16);
  CHECK(c.series.offset24() == -24);
  CHECK(a.coefficient(0) == 0);
  CHECK(a.coefficient(1) == 1);
  CHECK(a.coefficient(2) == -16);
  std::vector<long> bs;
  for (long i = 1; i <= 5; ++i) bs.push_back(b.coefficient(i).get_num().get_si());
  CHECK(bs == std::vector<long>{1, -8, 20, 0, -70});
  CHECK(c.coefficient(1) == 1);
  CHECK(c.coefficient(2) == 240);
  // eta^16 = Delta / eta^8
  auto q = modforms::qs_div(modforms::delta(40), modforms::qs_power_recurrence(modforms::eta(40), 8));
  CHECK(modforms::qs_agree(q, a_series(40).series));
}

TEST_CASE("ord criterion") {
  CHECK(ord_criterion(4));
  CHECK_FALSE(ord_criterion(2));
  CHECK_FALSE(ord_criterion(1));
  auto b = b_series(2000);
  for (long l = 1; l <= 2000; ++l) CHECK((b.coefficient(l) == 0) == ord_criterion(l));
}

TEST_CASE("modular obstruction") {
  auto r = modular_obstruction(24, 2, 1);
  CHECK(r.forced_vanishing);
  CHECK(r.dim == 1);
  CHECK(modular_obstruction(16, 3, 1).forced_vanishing);
  auto u = modular_obstruction(16, 4, 1);
  CHECK_FALSE(u.forced_vanishing);
  REQUIRE(u.witness.size() == 1);
  CHECK(modforms::qs_agree(u.witness[0], modforms::delta(20)));
  for (int m = 1; m <= 3; ++m)
    for (int s = 1; s <= 3; ++s) CHECK(modular_obstruction(24 * m, s, m).forced_vanishing);
  CHECK_FALSE(modular_obstruction(24, 4, 1).forced_vanishing);
}

TEST_CASE("conformal T-sets") {
  for (int c : {8, 16, 24}) {
    auto t = conformal_T_set(c);
    CHECK(t.derivation_agrees());
    CHECK(t.derivation.size() == 6);
  }
  CHECK(conformal_T_set(16).finite_part == std::vector<int>{1, 2, 3, 5, 6, 7});
  CHECK_THROWS(conformal_T_set(32));
}

TEST_CASE("strength at a weight") {
  auto s8 = strength_at(8, 1);
  CHECK(s8.strength == 7);
  CHECK(s8.coefficient == 1);
  auto s16 = strength_at(16, 4);
  CHECK(s16.contested_holds);
  CHECK(s16.strength == 7);
  CHECK(s16.criterion);
  CHECK(s16.note.empty());
  CHECK(strength_at(16, 2).strength == 3);
  for (long l = 1; l <= 50; ++l) CHECK(strength_at(24, l, 50).strength == 3);
  CHECK_THROWS_AS(strength_at(24, 60, 50), Error);
}

TEST_CASE("graded traces") {
  auto e8 = lattices::lattice_e8();
  auto z = graded_trace(e8, ThetaWeight::one(), 10);
  CHECK(z.series.offset24() == -8);
  CHECK(z.coefficient(0) == 1);
  CHECK(z.coefficient(1) == 248);

  auto za = graded_trace(e8, ThetaWeight::zonal(8, axis(e8, 0)), 55);
  CHECK(proportional_over(za, a_series(55), 55));

  for (const char* name : {"E8+E8", "D16+"}) {
    auto l = lattices::lattice_by_name(name);
    auto zb = graded_trace(l, ThetaWeight::zonal(4, axis(l, 0)), 55);
    CHECK_MESSAGE(proportional_over(zb, b_series(55), 55), name);
  }

  auto g = lattices::lattice_by_name("golay24-A");
  auto zc = graded_trace(g, ThetaWeight::zonal(4, axis(g, 0)), 55);
  CHECK(proportional_over(zc, c_series(55), 55));
}

TEST_CASE("lehmer scan") {
  auto s = lehmer_scan(100, 2);
  CHECK(s.zeros.empty());
  CHECK(s.entries[0].tau == 1);
  CHECK(s.entries[1].tau == -24);
  for (const auto& e : s.entries) CHECK(e.convolution_check);
  CHECK(s.entries[0].shell_checked);
  CHECK(s.entries[0].shell_fails_degree8);
  CHECK(s.entries[1].shell_fails_degree8);
  CHECK_FALSE(s.entries[2].shell_checked);
}

TEST_CASE("remark4 and d series") {
  auto r = remark4_series(20);
  CHECK(r.series.offset24() == 24);
  CHECK(r.zeros.empty());
  // eta(2z)^15 / eta(z)^7 = q^{23/24}(1 + 7q + ...)
  CHECK(r.series[0] == 1);
  CHECK(r.series[1] == 7);

  auto d = d_series(30);
  CHECK(d.series[1] == 1);
  CHECK(d.series[2] == 232);
  CHECK(d.zeros.empty());
}
