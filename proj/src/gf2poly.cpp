#include "qcollatz/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <utility>

#include "qcollatz/error.hpp"

namespace qcollatz {

namespace {

constexpr std::size_t kWordBits = 64;

// 64x64 -> 128 carry-less product, (low, high).
std::pair<std::uint64_t, std::uint64_t> clmul64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  while (a != 0) {
    const int i = std::countr_zero(a);
    lo ^= b << i;
    if (i != 0) hi ^= b >> (kWordBits - i);
    a &= a - 1;
  }
  return {lo, hi};
}

// dst ^= src * q^shift, growing dst as needed.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 std::size_t shift) {
  const std::size_t word_shift = shift / kWordBits;
  const std::size_t bit_shift = shift % kWordBits;
  const std::size_t needed = src.size() + word_shift + (bit_shift != 0 ? 1 : 0);
  if (dst.size() < needed) dst.resize(needed, 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    dst[i + word_shift] ^= src[i] << bit_shift;
    if (bit_shift != 0) dst[i + word_shift + 1] ^= src[i] >> (kWordBits - bit_shift);
  }
}

std::size_t top_bit_length(std::span<const std::uint64_t> words) {
  if (words.empty()) return 0;
  return (words.size() - 1) * kWordBits + (kWordBits - std::countl_zero(words.back()));
}

}  // namespace

std::int64_t Degree::value() const {
  if (is_neg_inf()) throw MathError("degree of the zero polynomial has no integer value");
  return value_;
}

std::string to_string(Degree d) {
  return d.is_neg_inf() ? std::string("-inf") : std::to_string(d.value());
}

Gf2Poly::Gf2Poly(std::vector<std::uint64_t> words) : words_(std::move(words)) { trim(); }

void Gf2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(std::size_t exponent) {
  std::vector<std::uint64_t> w(exponent / kWordBits + 1, 0);
  w.back() = std::uint64_t{1} << (exponent % kWordBits);
  return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_word(std::uint64_t word) { return Gf2Poly(std::vector<std::uint64_t>{word}); }

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words) {
  return Gf2Poly(std::move(words));
}

Gf2Poly Gf2Poly::from_bits(const Bits& bits) {
  std::vector<std::uint64_t> w((bits.size() + kWordBits - 1) / kWordBits, 0);
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) w[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_integer(const BigInt& n) {
  if (n < 0) throw MathError("only nonnegative integers have polynomial binary digits");
  std::vector<std::uint64_t> w;
  export_bits(n, std::back_inserter(w), 64, false);
  return Gf2Poly(std::move(w));
}

bool Gf2Poly::coeff(std::size_t exponent) const {
  const std::size_t wi = exponent / kWordBits;
  return wi < words_.size() && ((words_[wi] >> (exponent % kWordBits)) & 1U);
}

Degree Gf2Poly::degree() const {
  if (words_.empty()) return Degree::neg_inf();
  return Degree(static_cast<std::int64_t>(bit_length()) - 1);
}

std::size_t Gf2Poly::bit_length() const { return top_bit_length(words_); }

std::size_t Gf2Poly::valuation() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * kWordBits + std::countr_zero(words_[i]);
  return 0;
}

std::size_t Gf2Poly::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

Bits Gf2Poly::to_bits() const {
  Bits out(bit_length());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i);
  return out;
}

Gf2Poly Gf2Poly::shifted_up(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<std::uint64_t> w;
  xor_shifted(w, words_, k);
  return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::shifted_down(std::size_t k) const {
  const std::size_t word_shift = k / kWordBits;
  const std::size_t bit_shift = k % kWordBits;
  if (word_shift >= words_.size()) return {};
  std::vector<std::uint64_t> w(words_.size() - word_shift, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = words_[i + word_shift] >> bit_shift;
    if (bit_shift != 0 && i + word_shift + 1 < words_.size())
      w[i] |= words_[i + word_shift + 1] << (kWordBits - bit_shift);
  }
  return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::truncated(std::size_t n) const {
  if (n >= bit_length()) return *this;
  std::vector<std::uint64_t> w(words_.begin(), words_.begin() + (n + kWordBits - 1) / kWordBits);
  if (n % kWordBits != 0) w.back() &= (std::uint64_t{1} << (n % kWordBits)) - 1;
  return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::toggled(std::size_t exponent) const {
  std::vector<std::uint64_t> w = words_;
  const std::size_t wi = exponent / kWordBits;
  if (w.size() <= wi) w.resize(wi + 1, 0);
  w[wi] ^= std::uint64_t{1} << (exponent % kWordBits);
  return Gf2Poly(std::move(w));
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::uint64_t> w(a.words_.size() + b.words_.size(), 0);
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    if (a.words_[i] == 0) continue;
    for (std::size_t j = 0; j < b.words_.size(); ++j) {
      auto [lo, hi] = clmul64(a.words_[i], b.words_[j]);
      w[i + j] ^= lo;
      w[i + j + 1] ^= hi;
    }
  }
  return Gf2Poly(std::move(w));
}

Gf2DivMod divmod(const Gf2Poly& a, const Gf2Poly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  const std::size_t db = b.bit_length();
  std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
  std::vector<std::uint64_t> quot;
  for (std::size_t dr = top_bit_length(rem); dr >= db; dr = top_bit_length(rem)) {
    const std::size_t shift = dr - db;
    xor_shifted(rem, b.words(), shift);
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    const std::size_t wi = shift / kWordBits;
    if (quot.size() <= wi) quot.resize(wi + 1, 0);
    quot[wi] ^= std::uint64_t{1} << (shift % kWordBits);
  }
  return {Gf2Poly::from_words(std::move(quot)), Gf2Poly::from_words(std::move(rem))};
}

Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& b) { return divmod(a, b).rem; }

Gf2Poly exact_div(const Gf2Poly& a, const Gf2Poly& b) {
  auto [quot, rem] = divmod(a, b);
  if (!rem.is_zero()) throw MathError("polynomial division is not exact");
  return quot;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  if (a.is_zero() && b.is_zero()) throw MathError("gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Gf2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Poly pow(const Gf2Poly& base, std::size_t exponent) {
  Gf2Poly result = Gf2Poly::one();
  Gf2Poly sq = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= sq;
    exponent >>= 1;
    if (exponent != 0) sq = sq * sq;
  }
  return result;
}

BigInt eval_at_two(const Gf2Poly& p) {
  BigInt n;
  if (!p.is_zero()) import_bits(n, p.words().begin(), p.words().end(), 64, false);
  return n;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Gf2Poly parse() {
    skip_space();
    if (text_.substr(pos_, 2) == "0b") return parse_binary();
    Gf2Poly result = parse_term();
    skip_space();
    while (pos_ < text_.size()) {
      expect('+');
      result += parse_term();
      skip_space();
    }
    return result;
  }

 private:
  Gf2Poly parse_binary() {
    pos_ += 2;
    Bits bits;
    while (pos_ < text_.size() && (text_[pos_] == '0' || text_[pos_] == '1'))
      bits.push_back(text_[pos_++] == '1');
    if (bits.empty()) throw ParseError("expected binary digits after 0b", pos_);
    skip_space();
    if (pos_ != text_.size()) throw ParseError("unexpected character", pos_);
    return Gf2Poly::from_bits(bits);
  }

  Gf2Poly parse_term() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected a term", pos_);
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("only the constants 0 and 1 are allowed", pos_);
      return c == '1' ? Gf2Poly::one() : Gf2Poly();
    }
    if (c != 'q') throw ParseError("expected '1', 'q' or 'q^k'", pos_);
    ++pos_;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      return Gf2Poly::monomial(parse_exponent());
    }
    return Gf2Poly::q();
  }

  std::size_t parse_exponent() {
    const bool braced = pos_ < text_.size() && text_[pos_] == '{';
    if (braced) ++pos_;
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::size_t{1} << 24)) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected an exponent", pos_);
    if (braced) expect('}');
    return value;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_term(std::size_t e) {
  if (e == 0) return "1";
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

Gf2Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string format_poly(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e = p.bit_length(); e-- > 0;) {
    if (!p.coeff(e)) continue;
    if (!out.empty()) out += '+';
    out += format_term(e);
  }
  return out;
}

std::string format_poly_ascending(const Gf2Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < p.bit_length(); ++e) {
    if (!p.coeff(e)) continue;
    if (!out.empty()) out += '+';
    out += format_term(e);
  }
  return out;
}

std::size_t Gf2PolyHash::operator()(const Gf2Poly& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : p.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace qcollatz
