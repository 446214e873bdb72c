#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcollatz/bits.hpp"

namespace qcollatz {

/// Degree of a polynomial. The zero polynomial has degree `neg_inf()`, which
/// orders below every finite degree and has no integer value.
class Degree {
 public:
  constexpr explicit Degree(std::int64_t value) : value_(value) {}

  static constexpr Degree neg_inf() { return Degree(kNegInf); }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }

  /// Throws MathError for the zero-polynomial sentinel.
  std::int64_t value() const;

  constexpr auto operator<=>(const Degree&) const = default;

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  std::int64_t value_;
};

std::string to_string(Degree d);

/// Polynomial over GF(2). Bit i of the packed words is the coefficient of q^i.
/// The word vector never carries a zero top word, so equality is structural.
class Gf2Poly {
 public:
  Gf2Poly() = default;

  static Gf2Poly one() { return from_word(1); }
  static Gf2Poly q() { return from_word(2); }
  static Gf2Poly monomial(std::size_t exponent);
  /// Low 64 coefficients taken from the binary digits of `word`.
  static Gf2Poly from_word(std::uint64_t word);
  /// bits[i] is the coefficient of q^i.
  static Gf2Poly from_bits(const Bits& bits);
  /// Inverse of eval_at_two: the binary digits of a nonnegative integer.
  static Gf2Poly from_integer(const BigInt& n);
  /// Packed little-endian words; trailing zero words are dropped.
  static Gf2Poly from_words(std::vector<std::uint64_t> words);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  /// Constant term; "odd" in the parity sense.
  bool is_odd() const { return !words_.empty() && (words_[0] & 1U); }
  bool coeff(std::size_t exponent) const;
  Degree degree() const;
  /// Number of coefficients up to and including the leading one (0 for zero).
  std::size_t bit_length() const;
  /// Exponent of the lowest nonzero term (0 for the zero polynomial).
  std::size_t valuation() const;
  std::size_t popcount() const;

  Bits to_bits() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// Multiplication by q^k.
  Gf2Poly shifted_up(std::size_t k) const;
  /// Floor division by q^k (low terms are discarded).
  Gf2Poly shifted_down(std::size_t k) const;
  /// Residue mod q^n.
  Gf2Poly truncated(std::size_t n) const;
  /// Flip the coefficient of q^exponent.
  Gf2Poly toggled(std::size_t exponent) const;

  Gf2Poly& operator+=(const Gf2Poly& other);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  Gf2Poly& operator*=(const Gf2Poly& other) { return *this = *this * other; }

  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

 private:
  explicit Gf2Poly(std::vector<std::uint64_t> words);
  void trim();

  std::vector<std::uint64_t> words_;
};

struct Gf2DivMod {
  Gf2Poly quot;
  Gf2Poly rem;
};

/// a = quot*b + rem with degree(rem) < degree(b). Throws MathError if b = 0.
Gf2DivMod divmod(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b);
/// Exact quotient; throws MathError when b does not divide a.
Gf2Poly exact_div(const Gf2Poly& a, const Gf2Poly& b);

/// Greatest common divisor (monic by construction). Throws MathError when
/// both arguments are zero.
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

Gf2Poly pow(const Gf2Poly& base, std::size_t exponent);

/// Substitute q = 2: the nonnegative integer with the same binary digits.
BigInt eval_at_two(const Gf2Poly& p);

/// Terms "0", "1", "q", "q^k" joined by '+', in any order, duplicates
/// cancelling; or "0b" followed by coefficients of q^0, q^1, ... in order.
Gf2Poly parse_poly(std::string_view text);

/// Descending exponents: "q^5+q^3+q^2+q+1"; zero prints as "0".
std::string format_poly(const Gf2Poly& p);
/// Ascending exponents: "1+q+q^3".
std::string format_poly_ascending(const Gf2Poly& p);

struct Gf2PolyHash {
  std::size_t operator()(const Gf2Poly& p) const noexcept;
};

}  // namespace qcollatz
