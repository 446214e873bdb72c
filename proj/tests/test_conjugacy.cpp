#include <doctest.h>

#include <set>

#include "qcollatz/conjugacy.hpp"
#include "qcollatz/error.hpp"
#include "qcollatz/verify.hpp"

using namespace qcollatz;

namespace {

Gf2RatFun R(const char* text) { return parse_ratfun(text); }
EpWord W(const char* text) { return EpWord::parse(text); }

const Gf2RatFun P1 = parse_ratfun("(1+q)/(1+q^3)");

// Parities read off by stepping an exact value directly.
Bits direct_parities(const MapSpec& spec, Gf2RatFun x, std::size_t n) {
  Bits out;
  for (std::size_t k = 0; k < n; ++k, x = step_TAB(spec, x)) out.push_back(x.parity());
  return out;
}

}  // namespace

TEST_CASE("truncated parity vectors") {
  CHECK(to_string(pv_trunc(MapSpec::classic_t(), OddRational(1), 6)) == "101010");
  CHECK(to_string(pv_trunc(MapSpec::tq(), Gf2RatFun::one(), 4)) == "1111");
  CHECK(to_string(pv_trunc(MapSpec::tq(), Gf2RatFun(), 5)) == "00000");
  CHECK(to_string(pv_trunc(MapSpec::classic_t(), OddRational(0), 3)) == "000");
  CHECK(pv_trunc(MapSpec::shift(), W("1|01"), 5) == bits_from_string("10101"));

  const TruncatedSeries x = series_prefix(P1, 10);
  CHECK(pv_trunc(MapSpec::tq(), x, 10) == pv_trunc(MapSpec::tq(), P1, 10));
  CHECK_THROWS_AS(pv_trunc(MapSpec::tq(), x, 11), MathError);
  CHECK_THROWS_AS(pv_trunc(MapSpec::classic_t(), P1, 3), std::invalid_argument);
}

TEST_CASE("exact parity vectors") {
  CHECK(*pv_exact(MapSpec::classic_t(), OddRational(1)) == W("|10"));
  CHECK(*pv_exact(MapSpec::classic_t(), OddRational(3)) ==
        EpWord::normalize(bits_from_string("11000"), bits_from_string("10")));
  CHECK(*pv_exact(MapSpec::tq(), P1) == W("|10"));
  CHECK(*pv_exact(MapSpec::tq(), Gf2RatFun()) == W("|0"));
  CHECK_FALSE(pv_exact(MapSpec::classic_t(), OddRational(27), 10).has_value());

  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const Gf2RatFun x = random_ratfun(rng, 8, 4);
    const auto v = pv_exact(MapSpec::tq(), x);
    REQUIRE(v.has_value());
    CHECK(v->prefix(64) == direct_parities(MapSpec::tq(), x, 64));
  }
}

TEST_CASE("truncated inverse") {
  const Bits ones(7, true);
  CHECK(pv_inverse_trunc(MapSpec::tq(), ones) == series_prefix(Gf2RatFun::one(), 7));
  CHECK(pv_inverse_trunc(MapSpec::tq(), Bits(9, false)) == TruncatedSeries::zero(9));
  const MapSpec h = t_one_one_plus_q2();
  const Bits pv3 = pv_trunc(MapSpec::classic_t(), OddRational(3), 12);
  CHECK(pv_inverse_trunc(h, pv3) == series_prefix(R("q^5+q^3+q^2+q+1"), 12));

  Rng rng(53);
  for (std::size_t n = 1; n <= 8; ++n) {
    const MapSpec spec = random_poly_map(rng, 5);
    std::set<Bits> residues;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
      Bits v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = ((code >> i) & 1U) != 0;
      const TruncatedSeries x = pv_inverse_trunc(spec, v);
      CHECK(pv_trunc(spec, x, n) == v);
      residues.insert(x.bits());
    }
    CHECK(residues.size() == (std::size_t{1} << n));
  }
}

TEST_CASE("affine composites and periodic points") {
  const MapSpec h = t_one_one_plus_q2();
  const AffineComposite c = compose_affine(h, bits_from_string("10"));
  CHECK(c.alpha == Gf2RatFun::one());
  CHECK(c.gamma == R("1+q^2"));
  CHECK(c.length == 2);
  const AffineComposite z = compose_affine(MapSpec::tq(), bits_from_string("0"));
  CHECK(z.alpha == Gf2RatFun::one());
  CHECK(z.gamma.is_zero());
  const AffineComposite t = compose_affine(MapSpec::tq(), bits_from_string("10"));
  CHECK(t.alpha == R("1+q"));
  CHECK(t.gamma == Gf2RatFun::one());
  CHECK_THROWS_AS(compose_affine(h, {}), std::invalid_argument);

  CHECK(periodic_point(MapSpec::tq(), bits_from_string("10")) == P1);
  CHECK(periodic_point(h, bits_from_string("10")) == Gf2RatFun::one());
  CHECK(periodic_point(MapSpec::tq(), bits_from_string("0")).is_zero());

  // The composite agrees with stepping along the pattern.
  Rng rng(57);
  for (int i = 0; i < 100; ++i) {
    const MapSpec spec = random_poly_map(rng, 4);
    const EpWord w = random_word(rng, 0, 6);
    const Gf2RatFun x = periodic_point(spec, w.period());
    Gf2RatFun y = x;
    for (std::size_t k = 0; k < w.period().size(); ++k) y = step_TAB(spec, y);
    CHECK(y == x);
  }
}

TEST_CASE("exact inverse") {
  const MapSpec h = t_one_one_plus_q2();
  const Gf2RatFun p = pv_inverse_exact(MapSpec::tq(), W("|10"));
  CHECK(p == P1);
  CHECK(xi(p) == OddRational::make(-3, 7));
  const EpWord pv3 = EpWord::normalize(bits_from_string("11000"), bits_from_string("10"));
  CHECK(pv_inverse_exact(h, pv3) == R("1+q+q^2+q^3+q^5"));
  CHECK(pv_inverse_exact(h, W("|0")).is_zero());

  Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    const MapSpec spec = random_poly_map(rng, 4);
    const EpWord w = random_word(rng, 8, 6);
    const Gf2RatFun x = pv_inverse_exact(spec, w);
    CHECK(*pv_exact(spec, x) == w);
  }
}

TEST_CASE("phi inverts the T parity vector") {
  CHECK(phi(W("|10")) == 1);
  CHECK(phi(W("|0")) == 0);
  CHECK(phi(W("|1")) == -1);
  CHECK(phi(W("|110")) == -5);
  for (long long n = -50; n <= 300; ++n) {
    const auto v = pv_exact(MapSpec::classic_t(), OddRational(n));
    REQUIRE(v.has_value());
    CHECK(phi(*v) == n);
  }
}

TEST_CASE("h maps integers into q-series") {
  const auto h7 = h_map(MapSpec::tq(), 7);
  REQUIRE(h7.has_value());
  CHECK(xi(*h7) == OddRational::make(-175, 9));
  const auto h9 = h_map(t_one_one_plus_q2(), 9);
  REQUIRE(h9.has_value());
  CHECK(h9->is_polynomial());
  CHECK(xi(*h9) == 11049);
  const auto h2 = h_map(MapSpec::tq(), 2);
  CHECK(*h2 == Gf2RatFun::q() * P1);
  CHECK(xi(*h2) == OddRational::make(-6, 7));
  CHECK_THROWS_AS(h_map(MapSpec::tq(), 0), std::invalid_argument);
  CHECK_THROWS_AS(h_map(MapSpec::classic_t(), 3), std::invalid_argument);
  CHECK_FALSE(h_map(MapSpec::tq(), 27, 20).has_value());

  for (long long n = 1; n <= 20; ++n) {
    const Gf2RatFun v = *h_map(MapSpec::tq(), n);
    CHECK(pv_inverse_exact(MapSpec::tq(), *pv_exact(MapSpec::tq(), v)) == v);
  }

  for (long long n = 1; n <= 200; ++n) {
    const auto v = h_map(MapSpec::tq(), n);
    REQUIRE(v.has_value());
    CHECK(v->parity() == (n % 2 == 1));
    // h conjugates T to T_q: h(T(n)) = T_q(h(n)).
    CHECK(*h_map(MapSpec::tq(), static_cast<long long>(step_T(n).num())) ==
          step_TAB(MapSpec::tq(), *v));
  }
}

TEST_CASE("conjugacy equation") {
  Rng rng(61);
  for (int i = 0; i < 100; ++i) CHECK(conjugacy_check(MapSpec::tq(), random_ratfun(rng, 12, 6), 32));
  CHECK(conjugacy_check(t_one_one_plus_q2(), R("1+q"), 16));
  CHECK(*pv_exact(t_one_one_plus_q2(), R("1+q")) == W("|1"));
  CHECK(conjugacy_check(MapSpec::tq(), Gf2RatFun(), 8));
  CHECK(conjugacy_check(MapSpec::classic_t(), OddRational::make(5, 13), 32));
  CHECK_THROWS_AS(conjugacy_check(MapSpec::tq(), Gf2RatFun(), 0), std::invalid_argument);
}

TEST_CASE("tables") {
  const auto one = make_table(MapSpec::tq(), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].value->parity());
  const auto rows = make_table(t_one_one_plus_q2(), 20);
  const std::vector<long long> expected{1,    2,    47,  4,   21,   94,   2763, 8,     11049, 42,
                                        1383, 188,  173, 5526, 5427, 16, 689,  22098, 22143, 84};
  REQUIRE(rows.size() == 20);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].n == i + 1);
    CHECK(rows[i].value->is_polynomial());
    CHECK(*rows[i].xi == expected[i]);
  }
  CHECK_THROWS_AS(make_table(MapSpec::tq(), 0), std::invalid_argument);
}
