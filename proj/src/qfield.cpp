#include "qcollatz/qfield.hpp"

#include <utility>

#include "qcollatz/error.hpp"

namespace qcollatz {

Gf2RatFun Gf2RatFun::reduce(const Gf2Poly& num, const Gf2Poly& den) {
  if (den.is_zero()) throw MathError("rational function with zero denominator");
  if (!den.is_odd())
    throw MathError("denominator " + format_poly(den) + " is even; no power-series expansion");
  if (num.is_zero()) return Gf2RatFun();
  if (den.is_one()) return Gf2RatFun(num);
  Gf2Poly g = gcd(num, den);
  if (g.is_one()) return Gf2RatFun(num, den, 0);
  return Gf2RatFun(exact_div(num, g), exact_div(den, g), 0);
}

Gf2RatFun Gf2RatFun::shifted_up(std::size_t k) const {
  return Gf2RatFun(num_.shifted_up(k), den_, 0);
}

Gf2RatFun Gf2RatFun::divided_by_q() const {
  if (parity()) throw MathError("cannot divide an odd series by q");
  return Gf2RatFun(num_.shifted_down(1), den_, 0);
}

Gf2RatFun operator+(const Gf2RatFun& a, const Gf2RatFun& b) {
  if (a.den_ == b.den_) return Gf2RatFun::reduce(a.num_ + b.num_, a.den_);
  return Gf2RatFun::reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Gf2RatFun operator*(const Gf2RatFun& a, const Gf2RatFun& b) {
  if (a.is_zero() || b.is_zero()) return Gf2RatFun();
  // Cross-cancel first so the products stay small.
  const Gf2Poly g1 = gcd(a.num_, b.den_);
  const Gf2Poly g2 = gcd(b.num_, a.den_);
  return Gf2RatFun(exact_div(a.num_, g1) * exact_div(b.num_, g2),
                   exact_div(a.den_, g2) * exact_div(b.den_, g1), 0);
}

Gf2RatFun operator/(const Gf2RatFun& a, const Gf2RatFun& b) {
  if (b.is_zero()) throw MathError("division by zero");
  if (!b.is_odd()) throw MathError("division by an even series leaves the q-series ring");
  return a * Gf2RatFun(b.den_, b.num_, 0);
}

bool is_polynomial(const Gf2RatFun& a) { return a.is_polynomial(); }

std::size_t Gf2RatFunHash::operator()(const Gf2RatFun& a) const noexcept {
  const Gf2PolyHash h;
  return h(a.num()) * 31 + h(a.den());
}

bool TruncatedSeries::parity() const {
  if (precision_ == 0) throw MathError("parity of a series known to precision 0");
  return residue_.is_odd();
}

Bits TruncatedSeries::bits() const {
  Bits out(precision_);
  for (std::size_t i = 0; i < precision_; ++i) out[i] = residue_.coeff(i);
  return out;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t n) const {
  if (n > precision_)
    throw MathError("cannot raise precision from " + std::to_string(precision_) + " to " +
                    std::to_string(n));
  return TruncatedSeries(residue_, n);
}

TruncatedSeries TruncatedSeries::divided_by_q() const {
  if (parity()) throw MathError("cannot divide an odd series by q");
  return TruncatedSeries(residue_.shifted_down(1), precision_ - 1);
}

namespace {

void require_same_precision(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.precision() != b.precision())
    throw MathError("precision mismatch: " + std::to_string(a.precision()) + " vs " +
                    std::to_string(b.precision()));
}

}  // namespace

Gf2Poly inverse_mod_qn(const Gf2Poly& b, std::size_t n) {
  if (!b.is_odd()) throw MathError("only odd series are invertible");
  if (n == 0) return {};
  // If b*y = 1 mod q^m then b*(b*y^2) = (b*y)^2 = 1 mod q^(2m).
  Gf2Poly y = Gf2Poly::one();
  for (std::size_t m = 1; m < n;) {
    m = std::min(2 * m, n);
    y = (b.truncated(m) * (y * y)).truncated(m);
  }
  return y;
}

TruncatedSeries series_prefix(const Gf2RatFun& a, std::size_t n) {
  if (a.is_polynomial()) return TruncatedSeries(a.num(), n);
  return TruncatedSeries(a.num().truncated(n) * inverse_mod_qn(a.den(), n), n);
}

TruncatedSeries trunc_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_precision(a, b);
  return TruncatedSeries(a.residue() + b.residue(), a.precision());
}

TruncatedSeries trunc_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_precision(a, b);
  return TruncatedSeries(a.residue() * b.residue(), a.precision());
}

TruncatedSeries trunc_div_odd(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_precision(a, b);
  if (b.precision() == 0) return a;
  if (!b.parity()) throw MathError("division by an even series");
  return TruncatedSeries(a.residue() * inverse_mod_qn(b.residue(), b.precision()), a.precision());
}

std::string format_ratfun(const Gf2RatFun& a) {
  if (a.is_polynomial()) return format_poly(a.num());
  std::string num = format_poly(a.num());
  if (a.num().popcount() > 1) num = "(" + num + ")";
  return num + "/(" + format_poly(a.den()) + ")";
}

}  // namespace qcollatz
