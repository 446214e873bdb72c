#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qcollatz/binword.hpp"
#include "qcollatz/dynamics.hpp"

namespace qcollatz {

/// Parity vectors. Bit k of PV(x) is the parity of the k-th iterate of x;
/// PV is a conjugacy from every map here onto the shift.

/// First n parity bits.
Bits pv_trunc(const MapSpec& spec, const OddRational& x, std::size_t n);
Bits pv_trunc(const MapSpec& spec, const Gf2RatFun& x, std::size_t n);
Bits pv_trunc(const MapSpec& spec, const EpWord& x, std::size_t n);
/// Each step consumes one digit of precision, so x must be known to at least
/// n digits; throws MathError otherwise.
Bits pv_trunc(const MapSpec& spec, const TruncatedSeries& x, std::size_t n);

/// The whole parity vector, read off the orbit's cycle. std::nullopt when no
/// cycle appears within `budget` steps: the vector is then undetermined.
std::optional<EpWord> pv_exact(const MapSpec& spec, const OddRational& x,
                               std::size_t budget = kDefaultBudget);
std::optional<EpWord> pv_exact(const MapSpec& spec, const Gf2RatFun& x,
                               std::size_t budget = kDefaultBudget);
std::optional<EpWord> pv_exact(const MapSpec& spec, const EpWord& x,
                               std::size_t budget = kDefaultBudget);

/// The unique residue x mod q^n whose first n parity bits are `v`. Built one
/// digit at a time: flipping the coefficient of q^k flips the parity of the
/// k-th iterate and leaves the earlier ones alone.
TruncatedSeries pv_inverse_trunc(const MapSpec& spec, const Bits& v);

/// T_{A,B}^l along a fixed parity pattern, as x -> (alpha·x + gamma)/q^l.
struct AffineComposite {
  Gf2RatFun alpha;
  Gf2RatFun gamma;
  std::size_t length = 0;
};

/// Throws std::invalid_argument on an empty pattern.
AffineComposite compose_affine(const MapSpec& spec, const Bits& pattern);

/// The point whose parity vector is pattern repeated forever:
/// gamma/(q^l + alpha).
Gf2RatFun periodic_point(const MapSpec& spec, const Bits& pattern);

/// The unique q-series with parity vector v.
Gf2RatFun pv_inverse_exact(const MapSpec& spec, const EpWord& v);

/// The 2-adic integer whose T-parity vector is v (the shift-to-T conjugacy).
OddRational phi(const EpWord& v);

/// The parity-preserving conjugacy from T to T_{A,B} evaluated at n:
/// PV_{A,B}^-1(PV_T(n)). std::nullopt when the T-orbit of n shows no cycle
/// within the budget.
std::optional<Gf2RatFun> h_map(const MapSpec& spec, const BigInt& n,
                               std::size_t budget = kDefaultBudget);

/// PV(step(x)) agrees with shift(PV(x)) on the first n-1 digits.
bool conjugacy_check(const MapSpec& spec, const OddRational& x, std::size_t n);
bool conjugacy_check(const MapSpec& spec, const Gf2RatFun& x, std::size_t n);

struct TableRow {
  std::uint64_t n = 0;
  // All three are empty when the row is undetermined.
  std::optional<Gf2RatFun> value;
  std::optional<EpWord> word;
  std::optional<OddRational> xi;
};

/// Rows n = 1..n_max of h_map, with the 2-adic reading of each value.
std::vector<TableRow> make_table(const MapSpec& spec, std::uint64_t n_max,
                                 std::size_t budget = kDefaultBudget);

}  // namespace qcollatz
