#pragma once

// Expansions at infinity and the integral de Rham lattice H^1_DR(X) in a basis
// adapted to the Hodge filtration.
//
// Coordinates at infinity: x1 = 1/x, t = y / x^{g+1}, so t^2 = Q(x1) with
// Q(x1) = x1^{d+1} P(1/x1) = x1 R1(x1) and R1(0) = 1.

#include <vector>

#include "hypercris/curve.hpp"
#include "hypercris/matrix.hpp"
#include "hypercris/series.hpp"

namespace hypercris {

struct InfinityExpansions {
  int M = 0;
  TruncatedSeries U;   // x1(t) = t^2 U(t), U(0) = 1
  TruncatedSeries x1;
  TruncatedSeries V;   // dx1 / 2t = V(t) dt, V = 1 / Q'(x1(t))
};

// R1(x1) = x1^d P(1/x1) and Q(x1) = x1 R1(x1) over R.
Poly infinity_R1(const HyperellipticCurve& X, const ZqRing& R);
Poly infinity_Q(const HyperellipticCurve& X, const ZqRing& R);

// M >= 4g + 2.
InfinityExpansions infinity_expansions(const HyperellipticCurve& X, const ZqRing& R, int M);

// 2 U^{-1-i} V = 2 + sum_l u_{i,l} t^l; returns all M coefficients (index 0 is 2).
std::vector<ZqElement> u_coefficients(const InfinityExpansions& e, int i);

struct VMatrices {
  ZqMatrix full;  // g x 2g, row l-1 <-> t^{-2l} dt, column i <-> omega_i = x^i dx / y
  ZqMatrix bar;   // right g x g block
};
VMatrices build_v_matrices(const HyperellipticCurve& X, const InfinityExpansions& e);

// Basis omega_0..omega_{g-1}, omega'_g..omega'_{2g-1} of H^1_DR(X) over W/p^N.
struct AdaptedBasis {
  int g = 0;
  ZqMatrix C22;        // omega'_{g+l} = sum_{m <= l} C22(m, l) omega_{g+m}
  ZqMatrix C;          // block-diag(I_g, C22): Kedlaya basis -> adapted basis
  std::vector<int> r;  // Hodge exponents (1,...,1,0,...,0)
  int det_valuation = 0;  // sum_l v_p(2l + 1)
};
AdaptedBasis adapted_basis(const HyperellipticCurve& X, int N);

}  // namespace hypercris
