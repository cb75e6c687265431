#include "doctest.h"

#include "designlab/modforms.hpp"

using namespace designlab;
using namespace designlab::modforms;

namespace {

std::vector<long> ints(const QSeries& s) {
  std::vector<long> out;
  for (const auto& c : s.coeffs()) out.push_back(c.get_num().get_si());
  return out;
}

// Naive product prod_{i=1}^{prec} (1 - q^i), the oracle for the pentagonal route.
std::vector<long> brute_euler(long prec) {
  std::vector<long> c(prec + 1, 0);
  c[0] = 1;
  for (long i = 1; i <= prec; ++i)
    for (long j = prec; j >= i; --j) c[j] -= c[j - i];
  return c;
}

}  // namespace

TEST_CASE("eta matches the naive product") {
  CHECK(eta(0).offset24() == 1);
  CHECK(ints(eta(0)) == std::vector<long>{1});
  CHECK(ints(eta(7)) == std::vector<long>{1, -1, -1, 0, 0, 1, 0, 1});
  CHECK(ints(euler_product(300)) == brute_euler(300));
}

TEST_CASE("eta quotients") {
  auto e8 = eta_quotient(parse_eta_spec("1:8"), 8);
  CHECK(e8.offset24() == 8);
  CHECK(ints(e8) == std::vector<long>{1, -8, 20, 0, -70, 64, 56, 0, -125});

  auto e38 = eta_quotient(parse_eta_spec("3:8"), 12);
  CHECK(e38.offset24() == 24);
  std::vector<long> want(13, 0);
  want[0] = 1, want[3] = -8, want[6] = 20, want[12] = -70;
  CHECK(ints(e38) == want);

  auto one = eta_quotient(parse_eta_spec(""), 5);
  CHECK(one == QSeries::constant(1, 5));
  CHECK_THROWS_AS(eta_quotient({}, -1), Error);
  CHECK_THROWS(parse_eta_spec("2:1,2:3"));

  auto r4 = eta_quotient(parse_eta_spec("2:15,1:-7"), 10);
  CHECK(r4.offset24() == 23);
}

TEST_CASE("eta^8 * eta^16 = eta^24") {
  auto a = eta_quotient({{{1, 8}}}, 200), b = eta_quotient({{{1, 16}}}, 200), c = eta_quotient({{{1, 24}}}, 200);
  CHECK(qs_mul(a, b) == c);
  CHECK(qs_pow(eta(200), 24) == c);
}

TEST_CASE("Eisenstein series and Delta") {
  auto e4 = eisenstein(4, 10), e6 = eisenstein(6, 10);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);
  CHECK(e6[0] == 1);
  CHECK(e6[1] == -504);
  CHECK_THROWS(eisenstein(8, 3));
  auto d = delta(500);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  auto e24 = eta_quotient({{{1, 24}}}, 499);
  CHECK(qs_agree(d, e24));
  CHECK(ramanujan_tau(1) == 1);
  CHECK(ramanujan_tau(2) == -24);
  CHECK(ramanujan_tau(12) == -370944);
}

TEST_CASE("number theory") {
  CHECK(sigma(6, 3) == 252);
  CHECK(sigma(1, 0) == 1);
  CHECK_THROWS(sigma(0, 1));
  CHECK(ord_p(10, 2) == 1);
  CHECK(ord_p(48, 2) == 4);
  CHECK(factorize(360) == std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {5, 1}});
  auto table = sigma_table(50, 3);
  for (long n = 1; n <= 50; ++n) CHECK(table[n] == sigma(n, 3));
}

TEST_CASE("level-one spaces") {
  CHECK(mf_dim(13) == 0);
  CHECK(mf_dim(12) == 2);
  CHECK(mf_dim(14) == 1);
  CHECK(mf_dim(2) == 0);
  CHECK(mf_dim(-4) == 0);
  for (long k = 0; k <= 60; k += 2) {
    auto sp = mf_basis(k, 40);
    REQUIRE(sp.dim() == mf_dim(k));
    for (long i = 0; i < sp.dim(); ++i) CHECK(sp.leading[i] == i);
  }
  auto m0 = mf_basis(0, 5);
  CHECK(m0.basis.front() == QSeries::constant(1, 5));

  auto m16 = mf_basis(16, 30);
  auto cusp = qs_mul(eisenstein(4, 30), delta(30));
  Rational lambda;
  CHECK(qs_proportional(m16.basis[1], cusp, &lambda));
  CHECK(lambda == 1);
}

TEST_CASE("fit_in_space") {
  auto m12 = mf_basis(12, 60);
  auto d = delta(60);
  auto fit = fit_in_space(d, m12);
  CHECK(fit.member);
  CHECK(fit.coords == std::vector<Rational>{0, 1});
  CHECK(fit.generator_coords[0] * 1728 == 1);

  std::vector<Rational> c = d.coeffs();
  c[57] += 1;
  auto bad = fit_in_space(QSeries(0, c), m12);
  CHECK_FALSE(bad.member);
  CHECK(bad.witness_index == 57);

  try {
    fit_in_space(d.truncated(5), m12);
    FAIL("expected InsufficientPrecision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientPrecision);
  }
}

TEST_CASE("products E4^a E6^b Delta^c always fit") {
  const long prec = 50;
  auto e4 = eisenstein(4, prec), e6 = eisenstein(6, prec), d = delta(prec);
  for (long a = 0; a <= 3; ++a)
    for (long b = 0; b <= 2; ++b)
      for (long c = 0; c <= 2; ++c) {
        long k = 4 * a + 6 * b + 12 * c;
        auto f = qs_mul(qs_mul(qs_pow(e4, a), qs_pow(e6, b)), qs_pow(d, c));
        CHECK(fit_in_space(f, mf_basis(k, prec)).member);
      }
}

TEST_CASE("vanishing indices") {
  auto e8 = eta_quotient({{{1, 8}}}, 9);
  CHECK(vanishing_indices(e8, 9) == std::vector<long>{3, 7});
  CHECK(vanishing_indices(eisenstein(4, 50), 50).empty());
  CHECK(vanishing_indices(QSeries::constant(1, 5), 5) == std::vector<long>{1, 2, 3, 4, 5});
  CHECK_THROWS(vanishing_indices(e8, 10));
}

TEST_CASE("series JSON round trip") {
  auto s = eta_quotient({{{2, 15}, {1, -7}}}, 30);
  CHECK(series_from_json(to_json(s)) == s);
  auto h = qs_scale(s, Rational(3, 7));
  CHECK(series_from_json(to_json(h)) == h);
}

TEST_CASE("offset alignment rules") {
  auto a = eta(10), b = QSeries::constant(1, 10);
  CHECK_THROWS(qs_add(a, b));
  auto sum = qs_add(eta_quotient({{{1, 24}}}, 10), QSeries::constant(1, 10));
  CHECK(sum.offset24() == 0);
  CHECK(sum.prec() <= 10);
}
