#include "qcollatz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

namespace qcollatz {

namespace {

class Checker {
 public:
  explicit Checker(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  // Runs one case; a thrown exception counts as a failure of that case.
  template <class Case, class Describe>
  void run(Case&& body, Describe&& describe) {
    ++result_.cases;
    bool ok = false;
    std::string error;
    try {
      ok = body();
    } catch (const std::exception& e) {
      error = std::string(" (threw: ") + e.what() + ")";
    }
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe() + error;
    }
  }

  CheckResult finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    result_.seconds = std::chrono::duration<double>(elapsed).count();
    return result_;
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string show(const Gf2Poly& p) { return format_poly(p); }
std::string show(const Gf2RatFun& f) { return format_ratfun(f); }
std::string show(const MapSpec& m) { return m.name(); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Gf2RatFun iterate(const MapSpec& spec, Gf2RatFun x, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) x = step_TAB(spec, x);
  return x;
}

// Exponent of the lowest nonzero coefficient of a nonzero series.
std::size_t series_valuation(const Gf2RatFun& f) { return f.num().valuation(); }

Gf2RatFun poly(std::uint64_t bits) { return Gf2RatFun(Gf2Poly::from_word(bits)); }

}  // namespace

Gf2Poly random_poly(Rng& rng, std::size_t max_degree) {
  const std::size_t length = uniform(rng, 0, max_degree + 1);
  Bits bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = (rng() & 1U) != 0;
  return Gf2Poly::from_bits(bits);
}

Gf2Poly random_odd_poly(Rng& rng, std::size_t max_degree) {
  Gf2Poly p = random_poly(rng, max_degree);
  return p.is_odd() ? p : p.toggled(0);
}

Gf2RatFun random_ratfun(Rng& rng, std::size_t num_degree, std::size_t den_degree) {
  return Gf2RatFun::reduce(random_poly(rng, num_degree), random_odd_poly(rng, den_degree));
}

Gf2RatFun random_odd_ratfun(Rng& rng, std::size_t num_degree, std::size_t den_degree) {
  return Gf2RatFun::reduce(random_odd_poly(rng, num_degree), random_odd_poly(rng, den_degree));
}

Gf2RatFun random_non_polynomial(Rng& rng, std::size_t num_degree, std::size_t den_degree) {
  while (true) {
    Gf2RatFun f = random_ratfun(rng, num_degree, std::max<std::size_t>(den_degree, 1));
    if (!f.is_polynomial()) return f;
  }
}

MapSpec random_poly_map(Rng& rng, std::size_t max_degree) {
  return MapSpec::q_analog(Gf2RatFun(random_odd_poly(rng, max_degree)),
                           Gf2RatFun(random_odd_poly(rng, max_degree)));
}

EpWord random_word(Rng& rng, std::size_t max_pre, std::size_t max_per) {
  Bits pre(uniform(rng, 0, max_pre));
  Bits per(uniform(rng, 1, max_per));
  for (std::size_t i = 0; i < pre.size(); ++i) pre[i] = (rng() & 1U) != 0;
  for (std::size_t i = 0; i < per.size(); ++i) per[i] = (rng() & 1U) != 0;
  return EpWord::normalize(std::move(pre), std::move(per));
}

CheckResult check_ring_axioms(Rng& rng, std::size_t triples) {
  Checker c("GF(2)[q] ring axioms");
  for (std::size_t i = 0; i < triples; ++i) {
    const Gf2Poly a = random_poly(rng, 64);
    const Gf2Poly b = random_poly(rng, 64);
    const Gf2Poly d = random_poly(rng, 64);
    c.run(
        [&] {
          return (a + b) + d == a + (b + d) && a + b == b + a && (a * b) * d == a * (b * d) &&
                 a * b == b * a && a * (b + d) == a * b + a * d && (a + a).is_zero() &&
                 a + Gf2Poly() == a && a * Gf2Poly::one() == a;
        },
        [&] { return "a=" + show(a) + " b=" + show(b) + " c=" + show(d); });
  }
  return c.finish();
}

CheckResult check_divmod(Rng& rng, std::size_t pairs) {
  Checker c("divmod reconstruction");
  for (std::size_t i = 0; i < pairs; ++i) {
    const Gf2Poly a = random_poly(rng, 128);
    Gf2Poly b = random_poly(rng, 64);
    if (b.is_zero()) b = Gf2Poly::one();
    c.run(
        [&] {
          const auto [quot, rem] = divmod(a, b);
          return quot * b + rem == a && rem.degree() < b.degree();
        },
        [&] { return "a=" + show(a) + " b=" + show(b); });
  }
  return c.finish();
}

CheckResult check_eval_bijection(std::uint64_t limit) {
  Checker c("eval_at_two inverts binary reading");
  for (std::uint64_t n = 0; n < limit; ++n) {
    c.run(
        [&] {
          std::string text = "0b";
          if (n == 0) text += '0';
          for (std::uint64_t m = n; m != 0; m >>= 1) text += (m & 1U) ? '1' : '0';
          const Gf2Poly p = parse_poly(text);
          return eval_at_two(p) == n && Gf2Poly::from_integer(BigInt(n)) == p;
        },
        [&] { return "n=" + std::to_string(n); });
  }
  return c.finish();
}

CheckResult check_word_round_trips(Rng& rng, std::size_t words) {
  Checker c("word <-> rational <-> rational function round trips");
  for (std::size_t i = 0; i < words; ++i) {
    const EpWord w = random_word(rng, 16, 16);
    c.run(
        [&] {
          const OddRational r = word_to_rational(w);
          const Gf2RatFun f = word_to_ratfun(w);
          return rational_to_word(r) == w && ratfun_to_word(f) == w &&
                 w.bit_at(0) == r.parity() && w.bit_at(0) == f.num().is_odd();
        },
        [&] { return "w=" + w.to_string(); });
  }
  return c.finish();
}

CheckResult check_series_homomorphism(Rng& rng, std::size_t pairs) {
  Checker c("series_prefix is a ring homomorphism");
  for (std::size_t i = 0; i < pairs; ++i) {
    const Gf2RatFun a = random_ratfun(rng, 24, 12);
    const Gf2RatFun b = random_ratfun(rng, 24, 12);
    const std::size_t n = uniform(rng, 0, 64);
    c.run(
        [&] {
          const TruncatedSeries sa = series_prefix(a, n);
          const TruncatedSeries sb = series_prefix(b, n);
          bool ok = series_prefix(a + b, n) == trunc_add(sa, sb) &&
                    series_prefix(a * b, n) == trunc_mul(sa, sb);
          if (b.is_odd()) ok = ok && series_prefix(a / b, n) == trunc_div_odd(sa, sb);
          return ok;
        },
        [&] { return "a=" + show(a) + " b=" + show(b) + " n=" + std::to_string(n); });
  }
  return c.finish();
}

CheckResult check_shift_cycles(Rng& rng, std::size_t words) {
  Checker c("shift orbit cycle = word period");
  for (std::size_t i = 0; i < words; ++i) {
    const EpWord w = random_word(rng, 16, 16);
    c.run(
        [&] {
          const auto rec = orbit(MapSpec::shift(), w, 1000);
          return rec.cycle_length == w.period().size() && rec.cycle_entry == w.preperiod().size();
        },
        [&] { return "w=" + w.to_string(); });
  }
  return c.finish();
}

CheckResult check_tail_lemma(Rng& rng, std::size_t draws) {
  Checker c("tail lemma: T(U+q^(n+1)V) = T(U) + q^n W, W odd");
  for (std::size_t i = 0; i < draws; ++i) {
    const MapSpec spec = random_poly_map(rng, 8);
    const Gf2RatFun u = random_ratfun(rng, 12, 6);
    const Gf2RatFun v = random_odd_ratfun(rng, 12, 6);
    const std::size_t n = uniform(rng, 0, 12);
    c.run(
        [&] {
          const Gf2RatFun diff = step_TAB(spec, u + v.shifted_up(n + 1)) + step_TAB(spec, u);
          return !diff.is_zero() && series_valuation(diff) == n;
        },
        [&] {
          return show(spec) + " U=" + show(u) + " V=" + show(v) + " n=" + std::to_string(n);
        });
  }
  return c.finish();
}

CheckResult check_tail_iterates(Rng& rng, std::size_t draws) {
  Checker c("tail iterates: T^k(U+q^(n+1)V) = T^k(U) + q^(n+1-k) W_k");
  for (std::size_t i = 0; i < draws; ++i) {
    const MapSpec spec = random_poly_map(rng, 8);
    const Gf2RatFun u = random_ratfun(rng, 12, 6);
    const Gf2RatFun v = random_odd_ratfun(rng, 12, 6);
    const std::size_t n = uniform(rng, 0, 12);
    c.run(
        [&] {
          Gf2RatFun x0 = u;
          Gf2RatFun x1 = u + v.shifted_up(n + 1);
          for (std::size_t k = 0; k <= n + 1; ++k) {
            const Gf2RatFun diff = x0 + x1;
            if (diff.is_zero() || series_valuation(diff) != n + 1 - k) return false;
            if (k <= n) {
              x0 = step_TAB(spec, x0);
              x1 = step_TAB(spec, x1);
            }
          }
          return true;
        },
        [&] {
          return show(spec) + " U=" + show(u) + " V=" + show(v) + " n=" + std::to_string(n);
        });
  }
  return c.finish();
}

CheckResult check_opposite_parity(Rng& rng, std::size_t draws) {
  Checker c("T^n(U+q^n V) and T^n(U) have opposite parity");
  for (std::size_t i = 0; i < draws; ++i) {
    const MapSpec spec = random_poly_map(rng, 8);
    const Gf2RatFun u = random_ratfun(rng, 12, 6);
    const Gf2RatFun v = random_odd_ratfun(rng, 12, 6);
    const std::size_t n = uniform(rng, 0, 12);
    c.run(
        [&] {
          return iterate(spec, u + v.shifted_up(n), n).parity() != iterate(spec, u, n).parity();
        },
        [&] {
          return show(spec) + " U=" + show(u) + " V=" + show(v) + " n=" + std::to_string(n);
        });
  }
  return c.finish();
}

CheckResult check_solenoidal(Rng& rng, std::size_t draws) {
  Checker c("a = b mod q^(n+1) <=> PV(a) = PV(b) mod 2^(n+1)");
  for (std::size_t i = 0; i < draws; ++i) {
    const MapSpec spec = random_poly_map(rng, 8);
    const Gf2RatFun a = random_ratfun(rng, 12, 6);
    // b agrees with a exactly up to q^m, so both sides of the biconditional
    // come up.
    const std::size_t m = uniform(rng, 0, 18);
    const Gf2RatFun b = a + random_odd_ratfun(rng, 12, 6).shifted_up(m);
    const std::size_t n = uniform(rng, 0, 16);
    c.run(
        [&] {
          const bool congruent = series_prefix(a, n + 1) == series_prefix(b, n + 1);
          const bool same_pv = pv_trunc(spec, a, n + 1) == pv_trunc(spec, b, n + 1);
          return congruent == same_pv;
        },
        [&] {
          return show(spec) + " a=" + show(a) + " b=" + show(b) + " n=" + std::to_string(n);
        });
  }
  return c.finish();
}

CheckResult check_pv_bijection(Rng& rng, std::size_t max_n, std::size_t maps) {
  Checker c("truncated parity vector is a bijection mod q^n");
  for (std::size_t m = 0; m < maps; ++m) {
    const MapSpec spec = random_poly_map(rng, 8);
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::set<std::vector<std::uint64_t>> residues;
      bool inverts = true;
      std::string failure;
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        Bits v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = ((code >> k) & 1U) != 0;
        const TruncatedSeries x = pv_inverse_trunc(spec, v);
        if (pv_trunc(spec, x, n) != v && inverts) {
          inverts = false;
          failure = " v=" + to_string(v);
        }
        const auto w = x.residue().words();
        residues.emplace(w.begin(), w.end());
      }
      c.run([&] { return inverts && residues.size() == (std::size_t{1} << n); },
            [&] {
              return show(spec) + " n=" + std::to_string(n) + failure +
                     " distinct=" + std::to_string(residues.size());
            });
    }
  }
  return c.finish();
}

CheckResult check_conjugacy_equation(Rng& rng, std::size_t draws, std::size_t bits) {
  Checker c("PV(T_{A,B}(x)) = shift(PV(x))");
  for (std::size_t i = 0; i < draws; ++i) {
    const MapSpec spec = random_poly_map(rng, 8);
    const Gf2RatFun x = random_ratfun(rng, 16, 8);
    c.run([&] { return conjugacy_check(spec, x, bits); },
          [&] { return show(spec) + " x=" + show(x); });
  }
  return c.finish();
}

CheckResult check_pv_round_trip(std::size_t max_degree) {
  Checker c("pv_inverse_exact(pv_exact(x)) = x on polynomials");
  for (const MapSpec& spec : {t_one_one_plus_q2(), MapSpec::tq()}) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (max_degree + 1)); ++bits) {
      const Gf2RatFun x = poly(bits);
      c.run(
          [&] {
            const auto v = pv_exact(spec, x, 100000);
            return v && pv_inverse_exact(spec, *v) == x;
          },
          [&] { return show(spec) + " x=" + show(x); });
    }
  }
  return c.finish();
}

CheckResult check_periodic_points(Rng& rng, std::size_t maps, std::size_t max_len) {
  Checker c("periodic_point realizes its parity pattern");
  for (std::size_t m = 0; m < maps; ++m) {
    const MapSpec spec = random_poly_map(rng, 8);
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
        Bits pattern(len);
        for (std::size_t k = 0; k < len; ++k) pattern[k] = ((code >> k) & 1U) != 0;
        c.run(
            [&] {
              const Gf2RatFun x = periodic_point(spec, pattern);
              Bits twice = pattern;
              twice.insert(twice.end(), pattern.begin(), pattern.end());
              return pv_trunc(spec, x, 2 * len) == twice && iterate(spec, x, len) == x;
            },
            [&] { return show(spec) + " pattern=" + to_string(pattern); });
      }
    }
  }
  return c.finish();
}

CheckResult check_two_cycle_fixed_points(Rng& rng, std::size_t draws) {
  Checker c("2-cycle and fixed point formulas");
  for (std::size_t i = 0; i < draws; ++i) {
    // Alternate polynomial and genuinely rational parameters.
    const MapSpec spec = (i % 2 == 0)
                             ? random_poly_map(rng, 8)
                             : MapSpec::q_analog(random_odd_ratfun(rng, 6, 4), random_odd_ratfun(rng, 6, 4));
    c.run(
        [&] {
          const auto [c0, c1] = two_cycle_of(spec);
          const auto [zero, fixed] = fixed_points_of(spec);
          return c0 != c1 && step_TAB(spec, c0) == c1 && step_TAB(spec, c1) == c0 &&
                 zero.is_zero() && step_TAB(spec, zero) == zero && step_TAB(spec, fixed) == fixed &&
                 fixed.is_odd();
        },
        [&] { return show(spec); });
  }
  return c.finish();
}

CheckResult check_polynomial_two_cycles(Rng& rng, std::size_t draws) {
  Checker c("B = (A+q^2)M gives the polynomial 2-cycle {M, qM}");
  for (std::size_t i = 0; i < draws; ++i) {
    const Gf2Poly a = random_odd_poly(rng, 8);
    const Gf2Poly m = random_odd_poly(rng, 8);
    const MapSpec spec =
        MapSpec::q_analog(Gf2RatFun(a), Gf2RatFun((a + Gf2Poly::monomial(2)) * m));
    c.run(
        [&] {
          const auto [c0, c1] = two_cycle_of(spec);
          return c0 == Gf2RatFun(m) && c1 == Gf2RatFun(m.shifted_up(1)) && c0.is_polynomial() &&
                 c1.is_polynomial() && step_TAB(spec, c0) == c1 && step_TAB(spec, c1) == c0;
        },
        [&] { return show(spec) + " M=" + show(m); });
  }
  return c.finish();
}

CheckResult check_tq_polynomial_orbits(std::size_t max_degree) {
  Checker c("every nonzero polynomial reaches 1 under T_q");
  const MapSpec tq = MapSpec::tq();
  const Gf2RatFun one = Gf2RatFun::one();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << (max_degree + 1)); ++bits) {
    const Gf2RatFun x = poly(bits);
    c.run(
        [&] {
          const auto rec = orbit(tq, x, 1'000'000);
          return std::find(rec.states.begin(), rec.states.end(), one) != rec.states.end();
        },
        [&] { return "x=" + show(x); });
  }
  return c.finish();
}

CheckResult check_descent(std::size_t max_degree) {
  Checker c("T_{1,1+q^2} polynomial orbits descend to {1,q}, 0 or 1+q");
  const MapSpec spec = t_one_one_plus_q2();
  const std::vector<Gf2RatFun> targets{poly(0), poly(1), poly(0b10), poly(0b11)};
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (max_degree + 1)); ++bits) {
    const Gf2Poly x = Gf2Poly::from_word(bits);
    c.run(
        [&] {
          const std::size_t limit = x.bit_length();  // degree + 1
          Gf2RatFun y(x);
          for (std::size_t steps = 0;; ++steps) {
            if (std::find(targets.begin(), targets.end(), y) != targets.end()) return true;
            if (steps == limit || !check_poly_descent(y.num())) return false;
            y = step_TAB(spec, y);
          }
        },
        [&] { return "x=" + show(x); });
  }
  return c.finish();
}

CheckResult check_polynomial_closure(Rng& rng, std::size_t draws) {
  Checker c("T_{1,1+q^2}(x) is a polynomial iff x is");
  const MapSpec spec = t_one_one_plus_q2();
  for (std::size_t i = 0; i < draws; ++i) {
    const Gf2RatFun p(random_poly(rng, 64));
    c.run([&] { return step_TAB(spec, p).is_polynomial(); }, [&] { return "x=" + show(p); });
    const Gf2RatFun r = random_non_polynomial(rng, 16, 8);
    c.run([&] { return !step_TAB(spec, r).is_polynomial(); }, [&] { return "x=" + show(r); });
  }
  return c.finish();
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  auto count = [&](std::size_t full) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(full * options.scale)));
  };
  std::vector<std::function<CheckResult(Rng&)>> checks{
      [&](Rng& r) { return check_ring_axioms(r, count(10000)); },
      [&](Rng& r) { return check_divmod(r, count(10000)); },
      [](Rng&) { return check_eval_bijection(std::uint64_t{1} << 16); },
      [&](Rng& r) { return check_word_round_trips(r, count(10000)); },
      [&](Rng& r) { return check_series_homomorphism(r, count(1000)); },
      [&](Rng& r) { return check_shift_cycles(r, count(1000)); },
      [&](Rng& r) { return check_tail_lemma(r, count(1000)); },
      [&](Rng& r) { return check_tail_iterates(r, count(1000)); },
      [&](Rng& r) { return check_opposite_parity(r, count(1000)); },
      [&](Rng& r) { return check_solenoidal(r, count(1000)); },
      [&](Rng& r) { return check_pv_bijection(r, 10, count(20)); },
      [&](Rng& r) { return check_conjugacy_equation(r, count(1000), 32); },
      [](Rng&) { return check_pv_round_trip(8); },
      [&](Rng& r) { return check_periodic_points(r, count(100), 8); },
      [&](Rng& r) { return check_two_cycle_fixed_points(r, count(1000)); },
      [&](Rng& r) { return check_polynomial_two_cycles(r, count(1000)); },
      [](Rng&) { return check_tq_polynomial_orbits(12); },
      [](Rng&) { return check_descent(12); },
      [&](Rng& r) { return check_polynomial_closure(r, count(1000)); },
  };
  std::vector<CheckResult> results;
  results.reserve(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    // Independent stream per check so results do not depend on order.
    Rng rng(options.seed + 0x9e3779b97f4a7c15ULL * (i + 1));
    results.push_back(checks[i](rng));
  }
  return results;
}

}  // namespace qcollatz
