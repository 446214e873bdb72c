#include "qcollatz/dynamics.hpp"

#include <stdexcept>

#include "qcollatz/error.hpp"

namespace qcollatz {

MapSpec MapSpec::q_analog(Gf2RatFun a, Gf2RatFun b) {
  if (!a.is_odd()) throw std::invalid_argument("A = " + format_ratfun(a) + " is not odd");
  if (!b.is_odd()) throw std::invalid_argument("B = " + format_ratfun(b) + " is not odd");
  MapSpec spec(MapKind::QAnalog);
  spec.a_ = std::move(a);
  spec.b_ = std::move(b);
  return spec;
}

MapSpec MapSpec::tq() {
  return q_analog(Gf2RatFun(Gf2Poly::from_word(0b11)), Gf2RatFun::one());
}

MapSpec t_one_one_plus_q2() {
  return MapSpec::q_analog(Gf2RatFun::one(), Gf2RatFun(Gf2Poly::from_word(0b101)));
}

std::string MapSpec::name() const {
  switch (kind_) {
    case MapKind::ClassicT:
      return "T";
    case MapKind::Shift:
      return "shift";
    case MapKind::QAnalog:
      break;
  }
  if (a_ == Gf2RatFun(Gf2Poly::from_word(0b11)) && b_.num().is_one() && b_.is_polynomial())
    return "Tq";
  return "A=" + format_ratfun(a_) + ",B=" + format_ratfun(b_);
}

OddRational step_T(const OddRational& x) {
  if (!x.parity()) return x.halved();
  return (OddRational(3) * x + OddRational(1)).halved();
}

EpWord step_shift(const EpWord& w) { return w.shifted(); }

namespace {

void require_q_analog(const MapSpec& spec) {
  if (!spec.is_q_analog()) throw std::invalid_argument("map " + spec.name() + " does not act on q-series");
}

}  // namespace

Gf2RatFun step_TAB(const MapSpec& spec, const Gf2RatFun& x) {
  require_q_analog(spec);
  if (!x.parity()) return x.divided_by_q();
  return (spec.a() * x + spec.b()).divided_by_q();
}

TruncatedSeries step_TAB_trunc(const MapSpec& spec, const TruncatedSeries& x) {
  require_q_analog(spec);
  if (x.precision() == 0) throw MathError("cannot step a series known to precision 0");
  if (!x.parity()) return x.divided_by_q();
  const std::size_t n = x.precision();
  const TruncatedSeries ax = trunc_mul(series_prefix(spec.a(), n), x);
  return trunc_add(ax, series_prefix(spec.b(), n)).divided_by_q();
}

OrbitRecord<OddRational> orbit(const MapSpec& spec, const OddRational& x0, std::size_t budget) {
  if (spec.kind() != MapKind::ClassicT)
    throw std::invalid_argument("2-adic states need the map T, not " + spec.name());
  return iterate_orbit<OddRational, OddRationalHash>(
      x0, budget, [](const OddRational& x) { return step_T(x); },
      [](const OddRational& x) { return x.parity(); });
}

OrbitRecord<Gf2RatFun> orbit(const MapSpec& spec, const Gf2RatFun& x0, std::size_t budget) {
  require_q_analog(spec);
  return iterate_orbit<Gf2RatFun, Gf2RatFunHash>(
      x0, budget, [&spec](const Gf2RatFun& x) { return step_TAB(spec, x); },
      [](const Gf2RatFun& x) { return x.parity(); });
}

OrbitRecord<EpWord> orbit(const MapSpec& spec, const EpWord& x0, std::size_t budget) {
  if (spec.kind() != MapKind::Shift)
    throw std::invalid_argument("word states need the shift map, not " + spec.name());
  return iterate_orbit<EpWord, EpWordHash>(
      x0, budget, [](const EpWord& w) { return step_shift(w); },
      [](const EpWord& w) { return w.parity(); });
}

std::pair<Gf2RatFun, Gf2RatFun> two_cycle_of(const MapSpec& spec) {
  require_q_analog(spec);
  const Gf2RatFun odd = spec.b() / (spec.a() + Gf2RatFun(Gf2Poly::monomial(2)));
  return {odd, odd.shifted_up(1)};
}

std::pair<Gf2RatFun, Gf2RatFun> fixed_points_of(const MapSpec& spec) {
  require_q_analog(spec);
  return {Gf2RatFun(), spec.b() / (spec.a() + Gf2RatFun::q())};
}

bool check_poly_descent(const Gf2Poly& x) {
  if (x.degree() <= Degree(1))
    throw std::invalid_argument("descent needs degree > 1, got " + to_string(x.degree()));
  const Gf2RatFun next = step_TAB(t_one_one_plus_q2(), Gf2RatFun(x));
  return next.is_polynomial() && next.num().degree() < x.degree();
}

}  // namespace qcollatz
