// Expression parser for q-series written as rational expressions, e.g.
// "1+(1+q^2)*q^2/(1+q^3)", "q⁵+q³+1" or "1+q^{3}+(q^{3})\cdot\frac{q^{5}}{(1+q^{6})}".

#include <cctype>
#include <string>
#include <utility>

#include "qcollatz/error.hpp"
#include "qcollatz/qfield.hpp"

namespace qcollatz {

namespace {

// num/den with den nonzero, gcd-reduced; den may be even until the end.
struct Fraction {
  Gf2Poly num;
  Gf2Poly den = Gf2Poly::one();
};

Fraction make_fraction(const Gf2Poly& num, const Gf2Poly& den) {
  if (num.is_zero()) return {};
  Gf2Poly g = gcd(num, den);
  return {exact_div(num, g), exact_div(den, g)};
}

Fraction add(const Fraction& a, const Fraction& b) {
  return make_fraction(a.num * b.den + b.num * a.den, a.den * b.den);
}

Fraction mul(const Fraction& a, const Fraction& b) {
  return make_fraction(a.num * b.num, a.den * b.den);
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Gf2RatFun parse() {
    Fraction f = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    if (!f.den.is_odd())
      throw ParseError("expression has an even denominator and is not a q-series", 0);
    return Gf2RatFun::reduce(f.num, f.den);
  }

 private:
  Fraction expr() {
    Fraction acc = term();
    while (true) {
      skip_space();
      if (!consume("+")) return acc;
      acc = add(acc, term());
    }
  }

  Fraction term() {
    Fraction acc = factor();
    while (true) {
      skip_space();
      if (consume("*") || consume("·") || consume("\\cdot")) {
        acc = mul(acc, factor());
      } else if (consume("/")) {
        const std::size_t at = pos_;
        Fraction d = factor();
        if (d.num.is_zero()) throw ParseError("division by zero", at);
        acc = mul(acc, Fraction{d.den, d.num});
      } else if (starts_atom()) {
        acc = mul(acc, factor());
      } else {
        return acc;
      }
    }
  }

  Fraction factor() {
    Fraction base = atom();
    while (true) {
      skip_space();
      std::size_t e = 0;
      if (consume("^")) {
        skip_space();
        e = braced_integer();
      } else if (!superscript(e)) {
        return base;
      }
      base = {pow(base.num, e), pow(base.den, e)};
    }
  }

  Fraction atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    if (consume("0b")) {
      Bits bits;
      while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
        bits.push_back(text_[pos_++] == '1');
      if (bits.empty()) throw ParseError("expected binary digits after 0b", pos_);
      return {Gf2Poly::from_bits(bits)};
    }
    if (consume("\\frac")) {
      Fraction n = group('{', '}');
      const std::size_t at = pos_;
      Fraction d = group('{', '}');
      if (d.num.is_zero()) throw ParseError("division by zero", at);
      return mul(n, Fraction{d.den, d.num});
    }
    const char c = text_[pos_];
    if (c == '(') return group('(', ')');
    if (c == '{') return group('{', '}');
    if (c == 'q') {
      ++pos_;
      return {Gf2Poly::q()};
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("only the constants 0 and 1 are allowed", pos_);
      return c == '1' ? Fraction{Gf2Poly::one()} : Fraction{};
    }
    throw ParseError("expected '0', '1', 'q', '0b...' or '('", pos_);
  }

  Fraction group(char open, char close) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != open)
      throw ParseError(std::string("expected '") + open + "'", pos_);
    ++pos_;
    Fraction inner = expr();
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != close)
      throw ParseError(std::string("expected '") + close + "'", pos_);
    ++pos_;
    return inner;
  }

  std::size_t braced_integer() {
    const bool braced = consume("{");
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
      if (value > 100000) throw ParseError("exponent too large", start);
    }
    if (pos_ == start) throw ParseError("expected an exponent", pos_);
    if (braced) {
      skip_space();
      if (!consume("}")) throw ParseError("expected '}'", pos_);
    }
    return value;
  }

  // A run of Unicode superscript digits.
  bool superscript(std::size_t& value) {
    static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴",
                                          "⁵", "⁶", "⁷", "⁸", "⁹"};
    bool any = false;
    value = 0;
    for (bool matched = true; matched;) {
      matched = false;
      for (std::size_t d = 0; d < 10; ++d) {
        if (consume(kDigits[d])) {
          value = value * 10 + d;
          any = matched = true;
          break;
        }
      }
    }
    return any;
  }

  bool starts_atom() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || c == '{' || c == 'q' || text_.substr(pos_, 5) == "\\frac";
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Gf2RatFun parse_ratfun(std::string_view text) { return ExprParser(text).parse(); }

}  // namespace qcollatz
