#pragma once

// The divided Frobenius mod p through the Deligne-Illusie morphism: Frobenius
// lifts mod p^2 on the charts U = {y^2 = P(x)} and V = {t^2 = Q(x1)},
// x1 = 1/x, t = y/x^{g+1}, and the Cech complex of the cover.
//
// Everything here lives over F_q and only sees the part anti-invariant under
// the hyperelliptic involution, so all data on U n V is written in the
// x-coordinate:
//   a 1-form is C(x) dx/y, stored as the Laurent polynomial C;
//   a function is y H(x), stored as H.
// A form is regular on U iff C has no negative exponents, on V iff every
// exponent is <= g - 1; y x^{-m} is regular on U iff m <= 0, on V iff m >= g + 1.

#include <vector>

#include "hypercris/curve.hpp"
#include "hypercris/kedlaya.hpp"
#include "hypercris/laurent.hpp"

namespace hypercris {

enum class Chart { U, V };

struct CurlyP {
  Poly P;  // (P_2^p - P_2^sigma(x^p)) / p mod p
  Poly Q;  // same for Q_2(x1) = x1^{d+1} P_2(1/x1)
};
CurlyP curly_p(const HyperellipticCurve& X);

// F(x) = x^p + p u(x), F(y) = y^p (1 + p alpha(x)) on U, with
// (P')^p u - 2 alpha P^p = curly P; on V the same with x1, Q, v, beta.
struct ChartFrobeniusLift {
  Chart chart = Chart::U;
  Poly u;      // reduced modulo the p-th power of the chart polynomial
  Poly alpha;
};
ChartFrobeniusLift bezout_frobenius_lift(const HyperellipticCurve& X, Chart chart);

struct RegularityReport {
  Poly du_quotient;       // (u' + x^{p-1}) / P^{p-1}
  Poly dv_quotient;       // (v' + x1^{p-1}) / Q^{p-1}
  LaurentPoly h_quotient; // (u + x^{2p} v(1/x)) / P^p
};
// DivisibilityViolation when one of the three divisions fails.
RegularityReport regularity_check(const HyperellipticCurve& X, const ChartFrobeniusLift& U,
                                  const ChartFrobeniusLift& V);

struct CechCocycle {
  LaurentPoly omega_U, omega_V, h;
};

// coefficient of d(y H) on dx/y: H' P + H P'/2
LaurentPoly d_function(const HyperellipticCurve& X, const LaurentPoly& H);
bool is_cocycle(const HyperellipticCurve& X, const CechCocycle& c);

struct CechSplit {
  LaurentPoly h_U, h_V;
  std::vector<ZqElement> cls;  // coordinates on [h_1], ..., [h_g]
};
// H = h_U + h_V + sum_m cls[m-1] x^{-m}
CechSplit cech_split(const LaurentPoly& H, int g);

// s([h_i]) = (alpha_i^U, -alpha_i^V, h_i) with d h_i = alpha_i^U + alpha_i^V.
struct Splitting {
  std::vector<LaurentPoly> alpha_U, alpha_V;  // index i - 1
};
// 'perturb' (g x g over F_q, may be null) adds sum_j W(j, i-1) x^j dx/y to
// alpha_i^U and subtracts it from alpha_i^V.
Splitting splitting_s(const HyperellipticCurve& X, const ZqMatrix* perturb = nullptr);
// alpha_i^U = sum_{k=i}^{2g} (k - 2i + 1)/2 b_{k+1} x^{k-i}
LaurentPoly alpha_closed_form(const HyperellipticCurve& X, int i);

// Coordinates on (omega_0..omega_{g-1}, s([h_1])..s([h_g])).
// NotACocycle, NotGlobalResidue.
std::vector<ZqElement> cocycle_to_coordinates(const HyperellipticCurve& X, const Splitting& s,
                                              const CechCocycle& c);

struct DeligneIllusieData {
  CurlyP curly;
  ChartFrobeniusLift lift_U, lift_V;
  RegularityReport regularity;
  Splitting splitting;
  std::vector<CechCocycle> images;  // f(omega_0..omega_{g-1}), f(h_1..h_g)
  ZqMatrix A;                       // over F_q
};
DeligneIllusieData deligne_illusie(const HyperellipticCurve& X, const ZqMatrix* perturb = nullptr);
ZqMatrix di_matrix(const HyperellipticCurve& X, const ZqMatrix* perturb = nullptr);

// Kedlaya's A mod p against the DI matrix. T holds the DI coordinates of the
// reduced adapted basis, T = [[I, W], [0, B]]; mod p
//   A_ked = T^{-1} A_DI diag(I, sigma(B)).
// The lower blocks depend only on B and are the splitting-free comparison.
struct KedlayaComparison {
  ZqMatrix T;
  ZqMatrix A_kedlaya;
  ZqMatrix predicted;
  bool lower_blocks_agree = false;
  bool full_agree = false;
};
KedlayaComparison compare_with_kedlaya(const HyperellipticCurve& X, const DeligneIllusieData& di,
                                       const FilteredFrobeniusData& ff);

}  // namespace hypercris
