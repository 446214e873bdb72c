#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qcollatz/binword.hpp"
#include "qcollatz/qfield.hpp"

namespace qcollatz {

enum class MapKind { ClassicT, Shift, QAnalog };

/// One of the three dynamical systems: T on 2-adic integers, the shift on
/// binary words, or T_{A,B} on q-series with odd parameters A and B.
class MapSpec {
 public:
  static MapSpec classic_t() { return MapSpec(MapKind::ClassicT); }
  static MapSpec shift() { return MapSpec(MapKind::Shift); }
  /// Throws std::invalid_argument unless A and B are both odd.
  static MapSpec q_analog(Gf2RatFun a, Gf2RatFun b);
  /// T_q = T_{1+q, 1}.
  static MapSpec tq();

  MapKind kind() const { return kind_; }
  bool is_q_analog() const { return kind_ == MapKind::QAnalog; }
  /// Only meaningful for QAnalog.
  const Gf2RatFun& a() const { return a_; }
  const Gf2RatFun& b() const { return b_; }

  /// "T", "shift", "Tq" or "A=<poly>,B=<poly>".
  std::string name() const;

 private:
  explicit MapSpec(MapKind kind) : kind_(kind) {}

  MapKind kind_;
  Gf2RatFun a_;
  Gf2RatFun b_;
};

constexpr std::size_t kDefaultBudget = 1'000'000;

OddRational step_T(const OddRational& x);
EpWord step_shift(const EpWord& w);
/// x/q for even x, (A·x + B)/q for odd x.
Gf2RatFun step_TAB(const MapSpec& spec, const Gf2RatFun& x);
/// The same rule on a residue mod q^n, giving a residue mod q^(n-1).
/// Throws MathError at precision 0.
TruncatedSeries step_TAB_trunc(const MapSpec& spec, const TruncatedSeries& x);

/// Iterates of x0 up to and including the first repeated state, or until
/// the step budget runs out.
template <class State>
struct OrbitRecord {
  std::vector<State> states;
  Bits parities;  // parities[k] is the parity of states[k]
  std::optional<std::size_t> cycle_entry;
  std::optional<std::size_t> cycle_length;
  bool budget_exhausted = false;
};

template <class State, class Hash, class Step, class Parity>
OrbitRecord<State> iterate_orbit(State x0, std::size_t budget, Step step, Parity parity) {
  OrbitRecord<State> rec;
  std::unordered_map<State, std::size_t, Hash> seen;
  rec.states.push_back(std::move(x0));
  for (std::size_t k = 0;; ++k) {
    const State& current = rec.states.back();
    rec.parities.push_back(parity(current));
    auto [it, fresh] = seen.try_emplace(current, k);
    if (!fresh) {
      rec.cycle_entry = it->second;
      rec.cycle_length = k - it->second;
      return rec;
    }
    if (k == budget) {
      rec.budget_exhausted = true;
      return rec;
    }
    rec.states.push_back(step(current));
  }
}

/// Throws std::invalid_argument when the state type does not match the map.
OrbitRecord<OddRational> orbit(const MapSpec& spec, const OddRational& x0,
                               std::size_t budget = kDefaultBudget);
OrbitRecord<Gf2RatFun> orbit(const MapSpec& spec, const Gf2RatFun& x0,
                             std::size_t budget = kDefaultBudget);
OrbitRecord<EpWord> orbit(const MapSpec& spec, const EpWord& x0,
                          std::size_t budget = kDefaultBudget);

/// The unique 2-cycle {B/(A+q^2), q·B/(A+q^2)}, odd element first.
std::pair<Gf2RatFun, Gf2RatFun> two_cycle_of(const MapSpec& spec);
/// The fixed points 0 and B/(A+q).
std::pair<Gf2RatFun, Gf2RatFun> fixed_points_of(const MapSpec& spec);

/// The map T_{1,1+q^2}.
MapSpec t_one_one_plus_q2();

/// For a polynomial of degree > 1: T_{1,1+q^2}(x) is a polynomial of smaller
/// degree. Throws std::invalid_argument when degree(x) <= 1.
bool check_poly_descent(const Gf2Poly& x);

}  // namespace qcollatz
