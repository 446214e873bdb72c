#pragma once

// Machine checks of the structural facts the library relies on: ring laws,
// the binary-word correspondences, the tail/parity lemmas behind the parity
// vector, its bijectivity, the 2-cycle formulas, and polynomial descent under
// T_{1,1+q^2}. Each check reports its first counterexample.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcollatz/conjugacy.hpp"

namespace qcollatz {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;  // first failing case, empty when passed
  double seconds = 0.0;
};

using Rng = std::mt19937_64;

// Generators shared with the test suites.
Gf2Poly random_poly(Rng& rng, std::size_t max_degree);
Gf2Poly random_odd_poly(Rng& rng, std::size_t max_degree);
/// num of degree <= num_degree over an odd den of degree <= den_degree.
Gf2RatFun random_ratfun(Rng& rng, std::size_t num_degree, std::size_t den_degree);
Gf2RatFun random_odd_ratfun(Rng& rng, std::size_t num_degree, std::size_t den_degree);
/// A rational function whose reduced denominator is not 1.
Gf2RatFun random_non_polynomial(Rng& rng, std::size_t num_degree, std::size_t den_degree);
/// T_{A,B} with odd polynomial A, B of degree <= max_degree.
MapSpec random_poly_map(Rng& rng, std::size_t max_degree);
EpWord random_word(Rng& rng, std::size_t max_pre, std::size_t max_per);

CheckResult check_ring_axioms(Rng& rng, std::size_t triples);
CheckResult check_divmod(Rng& rng, std::size_t pairs);
CheckResult check_eval_bijection(std::uint64_t limit);
CheckResult check_word_round_trips(Rng& rng, std::size_t words);
CheckResult check_series_homomorphism(Rng& rng, std::size_t pairs);
CheckResult check_shift_cycles(Rng& rng, std::size_t words);

/// T(U + q^(n+1)V) = T(U) + q^n W with W odd.
CheckResult check_tail_lemma(Rng& rng, std::size_t draws);
/// T^k(U + q^(n+1)V) = T^k(U) + q^(n+1-k) W_k with W_k odd, for all k <= n+1.
CheckResult check_tail_iterates(Rng& rng, std::size_t draws);
/// T^n(U + q^n V) and T^n(U) have opposite parity.
CheckResult check_opposite_parity(Rng& rng, std::size_t draws);
/// a = b mod q^(n+1) iff their first n+1 parity bits agree.
CheckResult check_solenoidal(Rng& rng, std::size_t draws);
/// pv_inverse_trunc hits all 2^n residues and inverts pv_trunc, n = 1..max_n.
CheckResult check_pv_bijection(Rng& rng, std::size_t max_n, std::size_t maps);
/// PV(T(x)) = shift(PV(x)) on `bits` digits.
CheckResult check_conjugacy_equation(Rng& rng, std::size_t draws, std::size_t bits);
/// pv_inverse_exact(pv_exact(x)) = x on all polynomials of degree <= max_degree
/// under T_{1,1+q^2} and T_q.
CheckResult check_pv_round_trip(std::size_t max_degree);
/// periodic_point realizes every pattern of length <= max_len.
CheckResult check_periodic_points(Rng& rng, std::size_t maps, std::size_t max_len);

/// Two-cycle and fixed points satisfy their defining equations.
CheckResult check_two_cycle_fixed_points(Rng& rng, std::size_t draws);
/// For B = (A+q^2)·M with M an odd polynomial, the 2-cycle is {M, qM}.
CheckResult check_polynomial_two_cycles(Rng& rng, std::size_t draws);

/// Every nonzero polynomial of degree <= max_degree has 1 in its T_q-orbit.
CheckResult check_tq_polynomial_orbits(std::size_t max_degree);
/// Every polynomial of degree <= max_degree reaches {1,q}, 0 or 1+q under
/// T_{1,1+q^2} within degree+1 steps, each step lowering the degree.
CheckResult check_descent(std::size_t max_degree);
/// T_{1,1+q^2}(x) is a polynomial iff x is.
CheckResult check_polynomial_closure(Rng& rng, std::size_t draws);

struct VerifyOptions {
  std::uint64_t seed = 0x51ed2701;
  /// Multiplies every random-draw count; 1.0 runs the full suite.
  double scale = 1.0;
};

std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace qcollatz
