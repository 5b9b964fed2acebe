#pragma once

// Frobenius on H^1_MW(X)^- by Kedlaya's method, its matrix in the adapted
// basis, the divided matrix A and the zeta function of the special fibre.
//
// Arithmetic is fixed point: the Frobenius matrix is carried as p^E M_ked with
// integral representatives in W/p^{Nw}, so divisions by p that occur while
// reducing are checked divisibilities rather than rational arithmetic.

#include <map>
#include <vector>

#include "hypercris/curve.hpp"
#include "hypercris/derham.hpp"
#include "hypercris/matrix.hpp"

namespace hypercris {

// Delta(x) = (P^sigma(x^p) - P(x)^p) / p over R, so that
// sigma(y)^2 = y^{2p} (1 + p Delta / y^{2p}).
Poly frobenius_delta(const HyperellipticCurve& X, const ZqRing& R);

// sum_m A_m(x) dx / y^{2m+1}
struct MWForm {
  std::map<int, Poly> terms;
  void add(int m, const Poly& A);
};

// Unreduced phi(x^i dx/y) = sum_{k<K} binom(-1/2,k) p^{k+1} x^{ip+p-1} Delta^k dx / y^{p(2k+1)}.
MWForm frobenius_image(const HyperellipticCurve& X, int i, const ZqRing& R, int K);

// Shared data for the reduction rules over one ring.
struct ReductionContext {
  ZqRing R;
  int g = 0, d = 0;
  uint64_t p = 0;
  Poly P, dP;
  Poly t;  // t P' = 1 mod P
};
ReductionContext make_reduction_context(const HyperellipticCurve& X, const ZqRing& R);

// Reduces every term to m = 0 with A = aP + bP',
// A dx/y^{2m+1} == (a + 2b'/(2m-1)) dx/y^{2m-1}.
// A division by p^v is an exact shift that must succeed on the residues;
// otherwise PrecisionExhausted. 'loss' collects sum of v over all divisions.
Poly reduce_pole(const MWForm& w, const ReductionContext& c, int* loss = nullptr);

// Coordinates on x^i dx/y, 0 <= i < 2g, using
// d(x^s y) = (s x^{s-1} P + x^s P'/2) dx/y.
std::vector<ZqElement> reduce_degree(const Poly& A, const ReductionContext& c, int* loss = nullptr);

struct FrobeniusPlan {
  int target = 0;       // M_ked wanted modulo p^target
  int terms = 0;        // K
  int scale = 0;        // E
  int e_pole = 0, e_deg = 0;
  int working = 0;      // Nw
  int rule_terms = 0;  // least N with N - v_p(2N+1) >= target
};
// extra_scale: additional fixed-point headroom, extra_guard: additional digits
FrobeniusPlan plan_frobenius(const HyperellipticCurve& X, int target, int extra_scale = 0, int extra_guard = 0);

struct KedlayaMatrix {
  FrobeniusPlan plan;
  ZqRing ring;      // W/p^{Nw}
  ZqMatrix scaled;  // p^E M_ked, valid modulo p^{E + target}
  int retries = 0;
};
KedlayaMatrix frobenius_matrix(const HyperellipticCurve& X, int target);
KedlayaMatrix frobenius_matrix(const HyperellipticCurve& X, const FrobeniusPlan& plan);

// p^E times the reduced coordinates of phi(c(x) dx/y), c over W/p^{Nw}.
std::vector<ZqElement> frobenius_apply(const HyperellipticCurve& X, const FrobeniusPlan& plan, const Poly& c);

struct FilteredFrobeniusData {
  int g = 0;
  int precision = 0;      // A is known modulo p^precision
  ZqMatrix M_ad;          // modulo p^{precision + 1}
  ZqMatrix A;             // columns of M_ad divided by p^{r_j}
  std::vector<int> r;
  std::vector<std::string> labels;
};

// M_ad = C^{-1} M_ked sigma(C); StrongDivisibilityViolation, NotInvertibleModP.
FilteredFrobeniusData adapted_divided_matrix(const KedlayaMatrix& M, const AdaptedBasis& b);

// Kedlaya matrix and adapted basis at the precision needed for A mod p^target;
// 'kedlaya' receives the underlying matrix and its precision plan.
FilteredFrobeniusData filtered_frobenius(const HyperellipticCurve& X, int target, KedlayaMatrix* kedlaya = nullptr);

struct ZetaResult {
  std::vector<int64_t> L;  // c_0..c_{2g}
  uint64_t q = 0;
  int precision = 0;       // p-adic precision the lift was resolved at
};
// Integer L(T) from M (integral, over W/p^a) of the sigma-semilinear Frobenius.
// PrecisionInsufficientForLift when p^a does not separate the Weil window.
ZetaResult zeta_from_matrix(const ZqMatrix& M, int g);
// Required p-adic precision for the lift.
int zeta_precision(uint64_t p, int n, int g);
ZetaResult zeta_function(const HyperellipticCurve& X);

}  // namespace hypercris
