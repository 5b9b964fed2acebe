#pragma once

// Cross-method invariants on a single curve, shared by `hypercris selfcheck`
// and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "hypercris/curve.hpp"

namespace hypercris::checks {

struct CheckResult {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

// L(T) from the Frobenius matrix against brute-force counts, for every m <= max_m
// with q^m inside the enumeration limit. Skipped when even m = g is out of reach.
CheckResult zeta_oracle(const HyperellipticCurve& X, int max_m = 4);
// First g columns of M_ad vanish mod p, A invertible mod p, v_p(det A) = 0 and,
// for n = 1, v_p(det M_ked) = g.
CheckResult strong_divisibility(const HyperellipticCurve& X);
// V-bar diagonal -2, zero left block of V, C22 diagonal -(2l+1)/2 and det
// valuation, u_{i,l} constant term 2 with odd terms zero.
CheckResult derham_structure(const HyperellipticCurve& X);
// Lower-right block of the DI matrix against the classical Hasse-Witt matrix (n = 1).
CheckResult hasse_witt(const HyperellipticCurve& X);
// P^{p-1} | u' + x^{p-1} on both charts and f_V - f_U + dh = 0 for every image.
CheckResult di_regularity(const HyperellipticCurve& X);
// Kedlaya's A mod p against the DI matrix after the base change.
CheckResult kedlaya_agreement(const HyperellipticCurve& X);
// di_matrix under random splitting perturbations W: literal equality.
CheckResult splitting_literal(const HyperellipticCurve& X, int trials, uint64_t seed);
// ... and the basis-change law A_W = [[I, -W], [0, I]] A.
CheckResult splitting_covariance(const HyperellipticCurve& X, int trials, uint64_t seed);
// compute_gamma_matrix at (i, j): commutes, trivial mod T, and equal to a rerun
// with two more guard digits.
CheckResult gamma_certification(const HyperellipticCurve& X, int i, int j);

// Everything above that is a theorem about the curve (the literal splitting
// check is not one).
std::vector<CheckResult> all_invariants(const HyperellipticCurve& X, int i, int j, uint64_t seed);

}  // namespace hypercris::checks
