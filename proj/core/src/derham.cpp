#include "hypercris/derham.hpp"

namespace hypercris {

Poly infinity_R1(const HyperellipticCurve& X, const ZqRing& R) { return X.P(R).reverse(X.d + 1); }

Poly infinity_Q(const HyperellipticCurve& X, const ZqRing& R) { return infinity_R1(X, R).shift(1); }

InfinityExpansions infinity_expansions(const HyperellipticCurve& X, const ZqRing& R, int M) {
  if (M < 4 * X.g + 2) raise(ErrorKind::InvalidArgument, "series precision must be at least 4g + 2");
  InfinityExpansions e;
  e.M = M;
  Poly R1 = infinity_R1(X, R);
  e.U = hensel_series_solve(R1, M);
  e.x1 = e.U.shift(2);
  e.V = substitute(infinity_Q(X, R).derivative(), e.x1).invert_unit();
  // both identities are cheap to recheck
  if (e.x1 * substitute(R1, e.x1) != TruncatedSeries::t(R, M).shift(1))
    raise(ErrorKind::NonConvergence, "x1 R1(x1) != t^2");
  TruncatedSeries lhs = e.x1.derivative();
  TruncatedSeries rhs = (TruncatedSeries::t(R, M) * e.V).scale(R.from_int(2));
  // derivative() drops the top coefficient, compare below it
  if (lhs.truncate(M - 1) != rhs.truncate(M - 1)) raise(ErrorKind::NonConvergence, "dx1 != 2t V dt");
  return e;
}

std::vector<ZqElement> u_coefficients(const InfinityExpansions& e, int i) {
  if (i < 0) raise(ErrorKind::InvalidArgument, "index out of range");
  TruncatedSeries s = e.U.pow(-1 - i) * e.V;
  s = s + s;
  return s.coeffs();
}

VMatrices build_v_matrices(const HyperellipticCurve& X, const InfinityExpansions& e) {
  const int g = X.g;
  if (e.M < 2 * g + 1) raise(ErrorKind::PrecisionExhausted, "expansions too short for V");
  const ZqRing& R = e.U.ring();
  VMatrices v{ZqMatrix(R, g, 2 * g), ZqMatrix(R, g, g)};
  for (int i = 0; i < g; ++i) {
    auto u = u_coefficients(e, i);
    // omega_{g+i} = -t^{-2(i+1)} (2 + sum_l u_{i,l} t^l) dt
    v.bar(i, i) = R.from_int(-2);
    for (int l = 1; l <= i; ++l) v.bar(l - 1, i) = -u[2 * (i + 1 - l)];
  }
  v.full.set_block(0, g, v.bar);
  return v;
}

AdaptedBasis adapted_basis(const HyperellipticCurve& X, int N) {
  const int g = X.g;
  const ZqRing R = X.ring(N);
  InfinityExpansions e = infinity_expansions(X, R, 4 * g + 2);
  ZqMatrix Vbar = build_v_matrices(X, e).bar;
  // V-bar is upper triangular with diagonal -2: back substitution
  AdaptedBasis b;
  b.g = g;
  b.C22 = ZqMatrix(R, g, g);
  const ZqElement inv_m2 = R.from_int(-2).inverse();
  for (int l = 0; l < g; ++l) {
    for (int m = l; m >= 0; --m) {
      ZqElement rhs = (m == l) ? R.from_int(2 * l + 1) : R.zero();
      for (int k = m + 1; k <= l; ++k) rhs -= Vbar(m, k) * b.C22(k, l);
      b.C22(m, l) = rhs * inv_m2;
    }
    b.det_valuation += vp_int(2 * l + 1, X.p);
  }
  b.C = ZqMatrix::identity(R, 2 * g);
  b.C.set_block(g, g, b.C22);
  b.r.assign(2 * g, 0);
  for (int j = 0; j < g; ++j) b.r[j] = 1;
  return b;
}

}  // namespace hypercris
