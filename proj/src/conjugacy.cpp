#include "qcollatz/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

#include "qcollatz/error.hpp"

namespace qcollatz {

namespace {

template <class State>
EpWord word_from_orbit(const OrbitRecord<State>& rec) {
  const std::size_t entry = *rec.cycle_entry;
  const std::size_t length = *rec.cycle_length;
  Bits pre(rec.parities.begin(), rec.parities.begin() + static_cast<std::ptrdiff_t>(entry));
  Bits per(rec.parities.begin() + static_cast<std::ptrdiff_t>(entry),
           rec.parities.begin() + static_cast<std::ptrdiff_t>(entry + length));
  // The orbit's cycle may be a multiple of the parity period; normalize
  // collapses it.
  return EpWord::normalize(std::move(pre), std::move(per));
}

template <class State>
std::optional<EpWord> word_if_cycled(const OrbitRecord<State>& rec) {
  if (!rec.cycle_entry) return std::nullopt;
  return word_from_orbit(rec);
}

void require_kind(const MapSpec& spec, MapKind kind, const char* what) {
  if (spec.kind() != kind) throw std::invalid_argument(std::string(what) + " do not match map " + spec.name());
}

}  // namespace

Bits pv_trunc(const MapSpec& spec, const OddRational& x, std::size_t n) {
  require_kind(spec, MapKind::ClassicT, "2-adic states");
  Bits out;
  out.reserve(n);
  OddRational y = x;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(y.parity());
    if (k + 1 < n) y = step_T(y);
  }
  return out;
}

Bits pv_trunc(const MapSpec& spec, const Gf2RatFun& x, std::size_t n) {
  require_kind(spec, MapKind::QAnalog, "q-series states");
  Bits out;
  out.reserve(n);
  Gf2RatFun y = x;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(y.parity());
    if (k + 1 < n) y = step_TAB(spec, y);
  }
  return out;
}

Bits pv_trunc(const MapSpec& spec, const EpWord& x, std::size_t n) {
  require_kind(spec, MapKind::Shift, "word states");
  return x.prefix(n);
}

Bits pv_trunc(const MapSpec& spec, const TruncatedSeries& x, std::size_t n) {
  require_kind(spec, MapKind::QAnalog, "q-series states");
  if (x.precision() < n)
    throw MathError("need precision " + std::to_string(n) + " for " + std::to_string(n) +
                    " parity bits, have " + std::to_string(x.precision()));
  Bits out;
  out.reserve(n);
  TruncatedSeries y = x.truncated(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(y.parity());
    if (k + 1 < n) y = step_TAB_trunc(spec, y);
  }
  return out;
}

std::optional<EpWord> pv_exact(const MapSpec& spec, const OddRational& x, std::size_t budget) {
  return word_if_cycled(orbit(spec, x, budget));
}

std::optional<EpWord> pv_exact(const MapSpec& spec, const Gf2RatFun& x, std::size_t budget) {
  return word_if_cycled(orbit(spec, x, budget));
}

std::optional<EpWord> pv_exact(const MapSpec& spec, const EpWord& x, std::size_t budget) {
  return word_if_cycled(orbit(spec, x, budget));
}

TruncatedSeries pv_inverse_trunc(const MapSpec& spec, const Bits& v) {
  require_kind(spec, MapKind::QAnalog, "truncated series");
  const std::size_t n = v.size();
  Gf2Poly residue;
  for (std::size_t k = 0; k < n; ++k) {
    // Parity of the k-th iterate depends only on the residue mod q^(k+1).
    TruncatedSeries y(residue, k + 1);
    for (std::size_t step = 0; step < k; ++step) y = step_TAB_trunc(spec, y);
    if (y.parity() != v[k]) residue = residue.toggled(k);
  }
  return TruncatedSeries(residue, n);
}

AffineComposite compose_affine(const MapSpec& spec, const Bits& pattern) {
  require_kind(spec, MapKind::QAnalog, "parity patterns");
  if (pattern.empty()) throw std::invalid_argument("empty parity pattern");
  AffineComposite c{Gf2RatFun::one(), Gf2RatFun(), pattern.size()};
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (!pattern[i]) continue;
    c.alpha = spec.a() * c.alpha;
    c.gamma = spec.a() * c.gamma + spec.b().shifted_up(i);
  }
  return c;
}

Gf2RatFun periodic_point(const MapSpec& spec, const Bits& pattern) {
  const AffineComposite c = compose_affine(spec, pattern);
  const Gf2RatFun x = c.gamma / (Gf2RatFun(Gf2Poly::monomial(c.length)) + c.alpha);
  if (pv_trunc(spec, x, pattern.size()) != pattern)
    throw std::logic_error("periodic point does not realize its parity pattern");
  return x;
}

Gf2RatFun pv_inverse_exact(const MapSpec& spec, const EpWord& v) {
  Gf2RatFun x = periodic_point(spec, v.period());
  const Bits& pre = v.preperiod();
  for (std::size_t i = pre.size(); i-- > 0;) {
    // Undo one step: x/q for even, (A·x + B)/q for odd.
    const Gf2RatFun qt = x.shifted_up(1);
    x = pre[i] ? (qt + spec.b()) / spec.a() : qt;
  }
  return x;
}

OddRational phi(const EpWord& v) {
  const Bits& per = v.period();
  OddRational alpha(1);
  OddRational gamma(0);
  for (std::size_t i = 0; i < per.size(); ++i) {
    if (!per[i]) continue;
    alpha = OddRational(3) * alpha;
    gamma = OddRational(3) * gamma + OddRational(BigInt(1) << i);
  }
  OddRational x = gamma / (OddRational(BigInt(1) << per.size()) - alpha);
  const Bits& pre = v.preperiod();
  for (std::size_t i = pre.size(); i-- > 0;) {
    const OddRational twice = OddRational(2) * x;
    x = pre[i] ? (twice - OddRational(1)) / OddRational(3) : twice;
  }
  return x;
}

std::optional<Gf2RatFun> h_map(const MapSpec& spec, const BigInt& n, std::size_t budget) {
  require_kind(spec, MapKind::QAnalog, "conjugate values");
  if (n < 1) throw std::invalid_argument("h_map is tabulated for positive integers");
  const auto v = pv_exact(MapSpec::classic_t(), OddRational(n), budget);
  if (!v) return std::nullopt;
  return pv_inverse_exact(spec, *v);
}

namespace {

template <class State, class Step>
bool shifts_parity_vector(const MapSpec& spec, const State& x, std::size_t n, Step step) {
  if (n == 0) throw std::invalid_argument("conjugacy check needs n >= 1");
  const Bits before = pv_trunc(spec, x, n);
  const Bits after = pv_trunc(spec, step(x), n - 1);
  return std::equal(after.begin(), after.end(), before.begin() + 1);
}

}  // namespace

bool conjugacy_check(const MapSpec& spec, const OddRational& x, std::size_t n) {
  return shifts_parity_vector(spec, x, n, [](const OddRational& y) { return step_T(y); });
}

bool conjugacy_check(const MapSpec& spec, const Gf2RatFun& x, std::size_t n) {
  return shifts_parity_vector(spec, x, n, [&spec](const Gf2RatFun& y) { return step_TAB(spec, y); });
}

std::vector<TableRow> make_table(const MapSpec& spec, std::uint64_t n_max, std::size_t budget) {
  if (n_max < 1) throw std::invalid_argument("table needs n_max >= 1");
  std::vector<TableRow> rows;
  rows.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    TableRow row;
    row.n = n;
    row.value = h_map(spec, BigInt(n), budget);
    if (row.value) {
      row.word = ratfun_to_word(*row.value);
      row.xi = word_to_rational(*row.word);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qcollatz
