#pragma once

#include <cstdint>
#include <vector>

#include "hypercris/matrix.hpp"
#include "hypercris/poly.hpp"

namespace hypercris {

// y^2 = P(x) with P monic of odd degree d = 2g + 1 over W(F_{p^n}).
// Coefficients are kept exactly (ascending, each as power-basis coordinates)
// so that P can be lifted to any precision.
struct HyperellipticCurve {
  uint64_t p = 0;
  int n = 1;
  int d = 0;
  int g = 0;
  std::vector<std::vector<int64_t>> coeffs;
  ZqRing field;  // F_q
  Poly P_bar;    // P mod p

  uint64_t q() const { return field.q(); }
  ZqRing ring(int N) const { return field.with_precision(N); }
  Poly P(const ZqRing& R) const;
};

HyperellipticCurve validate_curve(uint64_t p, int n, const std::vector<std::vector<int64_t>>& coeffs);
HyperellipticCurve validate_curve(uint64_t p, int n, const std::vector<int64_t>& coeffs);

constexpr uint64_t kNaiveCountLimit = 1000000;

// #X(F_{q^m}) including the point at infinity; TooLarge when q^m > 10^6.
uint64_t count_points_naive(const HyperellipticCurve& X, int m);

// L(T) from #X(F_{q^k}), k = 1..g (g = counts.size()); coefficients c_0..c_{2g}.
std::vector<int64_t> lpolynomial_oracle(const std::vector<uint64_t>& counts, uint64_t q);
// #X(F_{q^m}) predicted by an L-polynomial.
int64_t count_from_lpolynomial(const std::vector<int64_t>& L, uint64_t q, int m);

// Entry (m, j) = coefficient of x^{jp - m} in P_bar^{(p-1)/2}, 1 <= m, j <= g.
ZqMatrix hasse_witt_classical(const HyperellipticCurve& X);

// Deterministic genus-g member x^{2g+1} + a x + b of a test family over F_p.
HyperellipticCurve curve_family_member(uint64_t p, int g);

}  // namespace hypercris
