#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qcollatz/gf2poly.hpp"

namespace qcollatz {

/// An element of GF(2)(q) with odd denominator, i.e. a q-series whose
/// coefficients are eventually periodic. Always stored reduced:
/// gcd(num, den) = 1 and den has constant term 1.
class Gf2RatFun {
 public:
  /// Zero.
  Gf2RatFun() : den_(Gf2Poly::one()) {}
  /// The polynomial p over denominator 1.
  explicit Gf2RatFun(Gf2Poly p) : num_(std::move(p)), den_(Gf2Poly::one()) {}

  /// Reduces num/den. Throws MathError when den is zero or even.
  static Gf2RatFun reduce(const Gf2Poly& num, const Gf2Poly& den);

  static Gf2RatFun one() { return Gf2RatFun(Gf2Poly::one()); }
  static Gf2RatFun q() { return Gf2RatFun(Gf2Poly::q()); }

  const Gf2Poly& num() const { return num_; }
  const Gf2Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// Constant term of the series expansion.
  bool parity() const { return num_.is_odd(); }
  bool is_odd() const { return parity(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Multiplication by q^k.
  Gf2RatFun shifted_up(std::size_t k) const;
  /// Exact division by q; throws MathError when the series is odd.
  Gf2RatFun divided_by_q() const;

  friend Gf2RatFun operator+(const Gf2RatFun& a, const Gf2RatFun& b);
  friend Gf2RatFun operator*(const Gf2RatFun& a, const Gf2RatFun& b);
  /// Throws MathError when b is zero or even (the quotient would not be a
  /// q-series).
  friend Gf2RatFun operator/(const Gf2RatFun& a, const Gf2RatFun& b);

  friend bool operator==(const Gf2RatFun&, const Gf2RatFun&) = default;

 private:
  Gf2RatFun(Gf2Poly num, Gf2Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  Gf2Poly num_;
  Gf2Poly den_;
};

bool is_polynomial(const Gf2RatFun& a);

struct Gf2RatFunHash {
  std::size_t operator()(const Gf2RatFun& a) const noexcept;
};

/// Residue class of a q-series modulo q^precision. Every binary operation
/// requires matching precisions.
class TruncatedSeries {
 public:
  TruncatedSeries(Gf2Poly residue, std::size_t precision)
      : residue_(residue.truncated(precision)), precision_(precision) {}
  static TruncatedSeries from_bits(const Bits& bits) {
    return TruncatedSeries(Gf2Poly::from_bits(bits), bits.size());
  }
  static TruncatedSeries zero(std::size_t precision) { return TruncatedSeries({}, precision); }

  const Gf2Poly& residue() const { return residue_; }
  std::size_t precision() const { return precision_; }
  bool bit(std::size_t i) const { return residue_.coeff(i); }
  /// Throws MathError at precision 0, where no digit is known.
  bool parity() const;
  Bits bits() const;

  /// Drops to a lower precision; throws MathError if n > precision().
  TruncatedSeries truncated(std::size_t n) const;
  /// Division by q of an even residue: precision drops by one.
  TruncatedSeries divided_by_q() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Gf2Poly residue_;
  std::size_t precision_;
};

/// First n coefficients of the expansion of a.
TruncatedSeries series_prefix(const Gf2RatFun& a, std::size_t n);

TruncatedSeries trunc_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries trunc_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// a / b mod q^n for odd b, via Newton iteration on the inverse of b.
TruncatedSeries trunc_div_odd(const TruncatedSeries& a, const TruncatedSeries& b);
/// Inverse of an odd polynomial modulo q^n.
Gf2Poly inverse_mod_qn(const Gf2Poly& b, std::size_t n);

/// "num/den" in the polynomial grammar, or just the polynomial when den = 1.
std::string format_ratfun(const Gf2RatFun& a);

/// Arithmetic expressions in q: constants 0 and 1, q, 0b-bitstrings,
/// parentheses, '^' with a nonnegative integer (or superscript digits), '+',
/// '*', '·' or juxtaposition for products, and '/'. The value must have an odd
/// reduced denominator.
Gf2RatFun parse_ratfun(std::string_view text);

}  // namespace qcollatz
