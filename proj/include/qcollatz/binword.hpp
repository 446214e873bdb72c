#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qcollatz/bits.hpp"
#include "qcollatz/qfield.hpp"

namespace qcollatz {

/// Eventually periodic infinite binary word pre·per·per·per… held in its
/// unique minimal form: `per` is primitive and `pre` cannot be shortened by
/// rotating the period. Structural equality is word equality.
class EpWord {
 public:
  /// The all-zero word.
  EpWord() : per_{false} {}

  /// Minimal form of pre·per^∞. Throws std::invalid_argument on empty period.
  static EpWord normalize(Bits pre, Bits per);
  /// "pre|per", e.g. "|110" or "11000|10".
  static EpWord parse(std::string_view text);
  /// A terminating word: `digits` followed by zeros.
  static EpWord terminating(Bits digits) { return normalize(std::move(digits), Bits{false}); }

  const Bits& preperiod() const { return pre_; }
  const Bits& period() const { return per_; }

  bool bit_at(std::size_t k) const;
  bool parity() const { return bit_at(0); }
  /// Ends in repeated zeros, i.e. a nonnegative integer / polynomial.
  bool is_terminating() const { return per_.size() == 1 && !per_[0]; }
  /// First n digits.
  Bits prefix(std::size_t n) const;
  /// The shift: delete digit 0.
  EpWord shifted() const;

  std::string to_string() const;

  friend bool operator==(const EpWord&, const EpWord&) = default;

 private:
  Bits pre_;
  Bits per_;
};

struct EpWordHash {
  std::size_t operator()(const EpWord& w) const noexcept;
};

/// Rational number with odd positive denominator, stored reduced; an
/// eventually periodic 2-adic integer.
class OddRational {
 public:
  OddRational() : num_(0), den_(1) {}
  OddRational(long long n) : num_(n), den_(1) {}  // NOLINT: integers embed implicitly
  OddRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT

  /// Throws MathError if den is zero or, after reduction, even.
  static OddRational make(BigInt num, BigInt den);
  /// "-3/7", "5".
  static OddRational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  /// Parity of the reduced numerator (the first 2-adic digit).
  bool parity() const { return bit_test(num_, 0); }
  bool is_integer() const { return den_ == 1; }

  /// Exact division by 2; throws MathError for odd values.
  OddRational halved() const;

  friend OddRational operator+(const OddRational& a, const OddRational& b);
  friend OddRational operator-(const OddRational& a, const OddRational& b);
  friend OddRational operator*(const OddRational& a, const OddRational& b);
  /// Throws MathError unless b is odd (so the quotient keeps an odd denominator).
  friend OddRational operator/(const OddRational& a, const OddRational& b);

  friend bool operator==(const OddRational&, const OddRational&) = default;

  std::string to_string() const;

 private:
  OddRational(BigInt num, BigInt den, int) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

struct OddRationalHash {
  std::size_t operator()(const OddRational& x) const noexcept;
};

/// Geometric-series value Pre(2) + 2^p·Per(2)/(1 − 2^l).
OddRational word_to_rational(const EpWord& w);
/// 2-adic digits of x, periodicity detected on repeated numerators.
EpWord rational_to_word(const OddRational& x);
/// Pre(q) + q^p·Per(q)/(1 + q^l).
Gf2RatFun word_to_ratfun(const EpWord& w);
/// q-series digits of f, periodicity detected on repeated numerators.
EpWord ratfun_to_word(const Gf2RatFun& f);

/// Substitute q = 2 in the q-series f, read as a 2-adic integer.
OddRational xi(const Gf2RatFun& f);
/// The q-series with the same binary digits as x.
Gf2RatFun xi_inverse(const OddRational& x);

/// Pre(q) + Per(q)·q^p/(1+q^l) with ascending exponents, or just the
/// polynomial for a terminating word.
std::string format_mixed(const EpWord& w);

}  // namespace qcollatz
