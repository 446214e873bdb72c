#include "qcollatz/binword.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "qcollatz/error.hpp"

namespace qcollatz {

Bits bits_from_string(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw ParseError("expected '0' or '1'", i);
    out.push_back(text[i] == '1');
  }
  return out;
}

std::string to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out += b ? '1' : '0';
  return out;
}

namespace {

std::size_t primitive_root_length(const Bits& per) {
  const std::size_t n = per.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < n && repeats; ++i) repeats = per[i] == per[i - d];
    if (repeats) return d;
  }
  return n;
}

struct BigIntHash {
  std::size_t operator()(const BigInt& v) const noexcept { return hash_value(v); }
};

BigInt eval_bits_at_two(const Bits& bits) {
  return eval_at_two(Gf2Poly::from_bits(bits));
}

}  // namespace

EpWord EpWord::normalize(Bits pre, Bits per) {
  if (per.empty()) throw std::invalid_argument("eventually periodic word needs a nonempty period");
  per.resize(primitive_root_length(per));
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    // Rotate the period right by one: the dropped preperiod digit joins it.
    const bool last = per.back();
    per.pop_back();
    per.insert(per.begin(), last);
  }
  EpWord w;
  w.pre_ = std::move(pre);
  w.per_ = std::move(per);
  return w;
}

EpWord EpWord::parse(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("expected 'pre|per'", text.size());
  Bits pre;
  Bits per;
  try {
    pre = bits_from_string(text.substr(0, bar));
  } catch (const ParseError& e) {
    throw ParseError("expected '0' or '1'", e.position());
  }
  try {
    per = bits_from_string(text.substr(bar + 1));
  } catch (const ParseError& e) {
    throw ParseError("expected '0' or '1'", bar + 1 + e.position());
  }
  if (per.empty()) throw ParseError("empty period", bar + 1);
  return normalize(std::move(pre), std::move(per));
}

bool EpWord::bit_at(std::size_t k) const {
  if (k < pre_.size()) return pre_[k];
  return per_[(k - pre_.size()) % per_.size()];
}

Bits EpWord::prefix(std::size_t n) const {
  Bits out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = bit_at(i);
  return out;
}

EpWord EpWord::shifted() const {
  if (!pre_.empty()) {
    EpWord w = *this;
    w.pre_.erase(w.pre_.begin());
    return w;
  }
  EpWord w = *this;
  const bool first = w.per_.front();
  w.per_.erase(w.per_.begin());
  w.per_.push_back(first);
  return w;
}

std::string EpWord::to_string() const {
  return qcollatz::to_string(pre_) + "|" + qcollatz::to_string(per_);
}

std::size_t EpWordHash::operator()(const EpWord& w) const noexcept {
  const std::hash<Bits> h;
  return h(w.preperiod()) * 1000003U ^ h(w.period());
}

OddRational OddRational::make(BigInt num, BigInt den) {
  if (den == 0) throw MathError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return OddRational();
  BigInt g = boost::multiprecision::gcd(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
  if ((den % 2) == 0) throw MathError("rational " + num.str() + "/" + den.str() + " has an even denominator");
  return OddRational(std::move(num), std::move(den), 0);
}

OddRational OddRational::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto integer = [&](bool allow_sign) {
    skip();
    std::string digits;
    if (allow_sign) {
      if (text.substr(pos, 1) == "-") {
        digits += '-';
        pos += 1;
      } else if (text.substr(pos, 3) == "−") {
        digits += '-';
        pos += 3;
      } else if (text.substr(pos, 1) == "+") {
        pos += 1;
      }
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) digits += text[pos++];
    if (pos == start) throw ParseError("expected digits", pos);
    return BigInt(digits);
  };
  BigInt num = integer(true);
  BigInt den = 1;
  skip();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t at = pos;
    den = integer(false);
    if (den == 0) throw ParseError("zero denominator", at);
  }
  skip();
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  try {
    return make(std::move(num), std::move(den));
  } catch (const MathError& e) {
    throw ParseError(e.what(), 0);
  }
}

OddRational OddRational::halved() const {
  if (parity()) throw MathError("cannot halve an odd 2-adic integer");
  return make(num_ / 2, den_);
}

OddRational operator+(const OddRational& a, const OddRational& b) {
  if (a.den_ == b.den_) return OddRational::make(a.num_ + b.num_, a.den_);
  return OddRational::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

OddRational operator-(const OddRational& a, const OddRational& b) {
  return a + OddRational(-b.num_, b.den_, 0);
}

OddRational operator*(const OddRational& a, const OddRational& b) {
  return OddRational::make(a.num_ * b.num_, a.den_ * b.den_);
}

OddRational operator/(const OddRational& a, const OddRational& b) {
  if (!b.parity()) throw MathError("division by an even 2-adic integer");
  return OddRational::make(a.num_ * b.den_, a.den_ * b.num_);
}

std::string OddRational::to_string() const {
  return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
}

std::size_t OddRationalHash::operator()(const OddRational& x) const noexcept {
  return hash_value(x.num()) * 1000003U ^ hash_value(x.den());
}

OddRational word_to_rational(const EpWord& w) {
  const std::size_t p = w.preperiod().size();
  const std::size_t l = w.period().size();
  const BigInt one_minus = BigInt(1) - (BigInt(1) << l);
  const BigInt pre = eval_bits_at_two(w.preperiod());
  const BigInt per = eval_bits_at_two(w.period());
  return OddRational::make(pre * one_minus + (per << p), one_minus);
}

EpWord rational_to_word(const OddRational& x) {
  const BigInt& den = x.den();
  BigInt num = x.num();
  std::unordered_map<BigInt, std::size_t, BigIntHash> seen;
  Bits digits;
  while (true) {
    auto [it, fresh] = seen.try_emplace(num, digits.size());
    if (!fresh) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      Bits pre(digits.begin(), digits.begin() + start);
      Bits per(digits.begin() + start, digits.end());
      return EpWord::normalize(std::move(pre), std::move(per));
    }
    const bool d = (num % 2) != 0;
    digits.push_back(d);
    if (d) num -= den;
    num /= 2;
  }
}

Gf2RatFun word_to_ratfun(const EpWord& w) {
  const std::size_t p = w.preperiod().size();
  const Gf2Poly den = Gf2Poly::one() + Gf2Poly::monomial(w.period().size());
  const Gf2Poly pre = Gf2Poly::from_bits(w.preperiod());
  const Gf2Poly per = Gf2Poly::from_bits(w.period());
  return Gf2RatFun::reduce(pre * den + per.shifted_up(p), den);
}

EpWord ratfun_to_word(const Gf2RatFun& f) {
  const Gf2Poly& den = f.den();
  Gf2Poly num = f.num();
  std::unordered_map<Gf2Poly, std::size_t, Gf2PolyHash> seen;
  Bits digits;
  while (true) {
    auto [it, fresh] = seen.try_emplace(num, digits.size());
    if (!fresh) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      Bits pre(digits.begin(), digits.begin() + start);
      Bits per(digits.begin() + start, digits.end());
      return EpWord::normalize(std::move(pre), std::move(per));
    }
    const bool d = num.is_odd();
    digits.push_back(d);
    if (d) num += den;
    num = num.shifted_down(1);
  }
}

OddRational xi(const Gf2RatFun& f) { return word_to_rational(ratfun_to_word(f)); }

Gf2RatFun xi_inverse(const OddRational& x) { return word_to_ratfun(rational_to_word(x)); }

std::string format_mixed(const EpWord& w) {
  const Gf2Poly pre = Gf2Poly::from_bits(w.preperiod());
  if (w.is_terminating()) return format_poly_ascending(pre);
  const Gf2Poly per = Gf2Poly::from_bits(w.period());
  std::string out;
  if (!pre.is_zero()) out = format_poly_ascending(pre) + "+";
  const std::string per_text = format_poly_ascending(per);
  out += per.popcount() > 1 ? "(" + per_text + ")" : per_text;
  out += "·" + format_poly_ascending(Gf2Poly::monomial(w.preperiod().size()));
  out += "/(" + format_poly_ascending(Gf2Poly::one() + Gf2Poly::monomial(w.period().size())) + ")";
  return out;
}

}  // namespace qcollatz
