#include <doctest.h>

#include "qcollatz/binword.hpp"
#include "qcollatz/error.hpp"
#include "qcollatz/verify.hpp"

using namespace qcollatz;

namespace {

EpWord W(const char* text) { return EpWord::parse(text); }

BigInt binary_value(const Bits& bits) {
  BigInt v = 0;
  for (std::size_t i = bits.size(); i-- > 0;) v = 2 * v + (bits[i] ? 1 : 0);
  return v;
}

// pre + 2^p·per/(1 - 2^l), summed as a geometric series.
OddRational geometric_value(const EpWord& w) {
  const std::size_t p = w.preperiod().size();
  const std::size_t l = w.period().size();
  const BigInt den = BigInt(1) - (BigInt(1) << l);
  const BigInt num = binary_value(w.preperiod()) * den + (binary_value(w.period()) << p);
  return OddRational::make(-num, -den);
}

}  // namespace

TEST_CASE("normalize gives the minimal form") {
  CHECK(EpWord::normalize({}, bits_from_string("110110")) == W("|110"));
  const EpWord w = EpWord::normalize(bits_from_string("1"), bits_from_string("01"));
  CHECK(w.preperiod().empty());
  CHECK(to_string(w.period()) == "10");
  CHECK(EpWord::normalize({}, bits_from_string("0")).to_string() == "|0");
  CHECK(EpWord::normalize(bits_from_string("11000"), bits_from_string("10")).to_string() ==
        "1100|01");
  CHECK(EpWord::normalize(bits_from_string("1000"), bits_from_string("00")).to_string() == "1|0");
  CHECK_THROWS_AS(EpWord::normalize({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(EpWord::parse("110"), ParseError);
  CHECK_THROWS_AS(EpWord::parse("1|"), ParseError);
  CHECK_THROWS_AS(EpWord::parse("1|2"), ParseError);
}

TEST_CASE("digit access and shift") {
  const EpWord p1 = W("|110");
  CHECK(p1.bit_at(0));
  CHECK_FALSE(p1.bit_at(2));
  CHECK_FALSE(W("|0").bit_at(1000000));
  CHECK(to_string(p1.prefix(9)) == "110110110");
  CHECK(W("|10").shifted() == W("|01"));
  CHECK(W("|1").shifted() == W("|1"));
  CHECK(W("1|0").shifted() == W("|0"));
  CHECK(W("1|0").is_terminating());
}

TEST_CASE("words as 2-adic rationals") {
  CHECK(word_to_rational(W("|110")) == OddRational::make(-3, 7));
  CHECK(word_to_rational(W("|0")) == 0);
  CHECK(word_to_rational(W("|10")) == OddRational::make(-1, 3));
  CHECK(word_to_rational(W("|1")) == -1);
  CHECK(word_to_rational(W("111101|0")) == 47);
  CHECK(rational_to_word(OddRational::make(-3, 7)) == W("|110"));
  CHECK(rational_to_word(1) == W("1|0"));
  const OddRational x = OddRational::make(-175, 9);
  CHECK(word_to_rational(rational_to_word(x)) == x);
  CHECK(rational_to_word(-1) == W("|1"));

  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const EpWord w = random_word(rng, 16, 16);
    const OddRational v = word_to_rational(w);
    CHECK(v == geometric_value(w));
    CHECK(v.parity() == w.parity());
    // v agrees with the word's digits modulo 2^40.
    const BigInt residue = binary_value(w.prefix(40));
    CHECK((v.num() - v.den() * residue) % (BigInt(1) << 40) == 0);
  }
}

TEST_CASE("words as q-series") {
  const Gf2RatFun p1 = parse_ratfun("(1+q)/(1+q^3)");
  CHECK(word_to_ratfun(W("|110")) == p1);
  CHECK(word_to_ratfun(W("|0")).is_zero());
  CHECK(word_to_ratfun(W("11010|0")) == parse_ratfun("1+q+q^3"));
  CHECK(ratfun_to_word(p1) == W("|110"));
  CHECK(ratfun_to_word(parse_ratfun("q^2")) == W("001|0"));
  CHECK(ratfun_to_word(parse_ratfun("1/(1+q+q^2)")) == W("|110"));

  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const EpWord w = random_word(rng, 16, 16);
    const Gf2RatFun f = word_to_ratfun(w);
    CHECK(ratfun_to_word(f) == w);
    CHECK(series_prefix(f, 48).bits() == w.prefix(48));
    CHECK(f.parity() == w.parity());
  }
}

TEST_CASE("xi substitutes q = 2") {
  const Gf2RatFun p1 = parse_ratfun("(1+q)/(1+q^3)");
  CHECK(xi(p1) == OddRational::make(-3, 7));
  CHECK(xi(parse_ratfun("q^5+q^3+q^2+q+1")) == 47);
  CHECK(xi_inverse(OddRational::make(-3, 7)) == p1);
  CHECK(xi(Gf2RatFun::q() * p1) == OddRational::make(-6, 7));
}

TEST_CASE("odd rationals") {
  const OddRational a = OddRational::parse("-3/7");
  CHECK(a.num() == -3);
  CHECK(a.den() == 7);
  CHECK(OddRational::parse("-6/14") == a);
  CHECK(OddRational::parse("−3/7") == a);
  CHECK(OddRational::parse("+5") == 5);
  CHECK(a.parity());
  CHECK_FALSE(OddRational(-6).parity());
  CHECK(OddRational(-6).halved() == -3);
  CHECK_THROWS_AS(a.halved(), MathError);
  CHECK_THROWS_AS(OddRational::make(1, 2), MathError);
  CHECK_THROWS_AS(OddRational::make(1, 0), MathError);
  CHECK_THROWS_AS(OddRational::parse("1/2"), ParseError);
  CHECK_THROWS_AS(OddRational::parse("abc"), ParseError);
  CHECK_THROWS_AS(a / OddRational(2), MathError);
  CHECK(a + a == OddRational::make(-6, 7));
  CHECK(a * OddRational(7) == -3);
  CHECK(a.to_string() == "-3/7");
  CHECK(OddRational(12).to_string() == "12");
}

TEST_CASE("mixed form mirrors the tables") {
  CHECK(format_mixed(W("|110")) == "(1+q)·1/(1+q^3)");
  CHECK(format_mixed(W("1|010")) == "1+q·q/(1+q^3)");
  CHECK(format_mixed(W("111101|0")) == "1+q+q^2+q^3+q^5");
  CHECK(parse_ratfun(format_mixed(W("1011|100101"))) == word_to_ratfun(W("1011|100101")));
}
