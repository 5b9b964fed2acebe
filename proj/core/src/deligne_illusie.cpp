#include "hypercris/deligne_illusie.hpp"

#include "hypercris/derham.hpp"

namespace hypercris {

namespace {

Poly chart_polynomial(const HyperellipticCurve& X, Chart c) {
  return c == Chart::U ? X.P_bar : X.P_bar.reverse(X.d + 2);
}

// a / b for polynomials, reporting failure as a divisibility violation
Poly divide_or_flag(const Poly& a, const Poly& b, const char* what) {
  try {
    return exact_quotient(a, b);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ExactQuotientFailure) throw;
    raise(ErrorKind::DivisibilityViolation, what);
  }
}

LaurentPoly x_power(const ZqRing& R, int k) { return LaurentPoly::monomial(R.one(), k); }

LaurentPoly d_function_over(const Poly& P, const LaurentPoly& H) {
  const ZqRing& R = P.ring();
  LaurentPoly LP = LaurentPoly::from_poly(P);
  LaurentPoly dLP = LaurentPoly::from_poly(P.derivative());
  return H.derivative() * LP + (H * dLP).scale(R.from_int(2).inverse());
}

// x / w for an integer w, checked: the p-part must divide x exactly
ZqElement divide_by_int(const ZqElement& x, int64_t w, uint64_t p) {
  int v = vp_int(w, p);
  int64_t u = w;
  for (int i = 0; i < v; ++i) u /= static_cast<int64_t>(p);
  ZqElement s = x;
  if (v) {
    try {
      s = x.shift_down(v);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotDivisible) throw;
      raise(ErrorKind::PrecisionExhausted, "adapted basis vector is not integral at infinity");
    }
  }
  return s * x.ring().from_int(u).inverse();
}

}  // namespace

CurlyP curly_p(const HyperellipticCurve& X) {
  const ZqRing R2 = X.ring(2);
  const int p = static_cast<int>(X.p);
  auto curly = [&](const Poly& F) {
    return (F.pow(X.p) - F.sigma().compose_xpow(p)).exact_div_p(1).reduce(X.field);
  };
  Poly P2 = X.P(R2);
  CurlyP c;
  c.P = curly(P2);
  c.Q = curly(P2.reverse(X.d + 2));
  return c;
}

ChartFrobeniusLift bezout_frobenius_lift(const HyperellipticCurve& X, Chart chart) {
  const ZqRing& F = X.field;
  CurlyP cp = curly_p(X);
  const Poly& target = chart == Chart::U ? cp.P : cp.Q;
  Poly Pc = chart_polynomial(X, chart);
  Poly Pp = Pc.pow(X.p);
  Poly dPp = Pc.derivative().pow(X.p);
  ChartFrobeniusLift L;
  L.chart = chart;
  L.u = (target * invert_mod(dPp % Pp, Pp)) % Pp;
  L.alpha = exact_quotient(dPp * L.u - target, Pp).scale(F.from_int(2).inverse());
  if (dPp * L.u - (L.alpha * Pp).mul_int(2) != target)
    raise(ErrorKind::FinalVerificationFailed, "Bezout relation for the Frobenius lift fails");
  return L;
}

RegularityReport regularity_check(const HyperellipticCurve& X, const ChartFrobeniusLift& U,
                                  const ChartFrobeniusLift& V) {
  const ZqRing& F = X.field;
  const unsigned p = static_cast<unsigned>(X.p);
  RegularityReport r;
  Poly xp1 = Poly::monomial(F.one(), static_cast<int>(p) - 1);
  // the exponent here is p - 1; p itself already fails for x^3 - x over F_3
  r.du_quotient = divide_or_flag(U.u.derivative() + xp1, X.P_bar.pow(p - 1), "P^{p-1} does not divide u' + x^{p-1}");
  r.dv_quotient = divide_or_flag(V.u.derivative() + xp1, chart_polynomial(X, Chart::V).pow(p - 1),
                                 "Q^{p-1} does not divide v' + x1^{p-1}");
  LaurentPoly h = LaurentPoly::from_poly(U.u) + LaurentPoly::from_poly(V.u).substitute_inverse().shift(2 * static_cast<int>(p));
  Poly Pp = X.P_bar.pow(p);
  if (!divides(Pp, h)) raise(ErrorKind::DivisibilityViolation, "P^p does not divide u + x^{2p} v(1/x)");
  r.h_quotient = exact_quotient(h, Pp);
  return r;
}

LaurentPoly d_function(const HyperellipticCurve& X, const LaurentPoly& H) { return d_function_over(X.P_bar, H); }

bool is_cocycle(const HyperellipticCurve& X, const CechCocycle& c) {
  return (c.omega_V - c.omega_U + d_function(X, c.h)).is_zero();
}

CechSplit cech_split(const LaurentPoly& H, int g) {
  CechSplit s;
  s.h_U = H.part_at_least(0);
  s.h_V = H.part_below(-g);
  for (int m = 1; m <= g; ++m) s.cls.push_back(H.coeff(-m));
  return s;
}

Splitting splitting_s(const HyperellipticCurve& X, const ZqMatrix* perturb) {
  const ZqRing& F = X.field;
  const int g = X.g;
  if (perturb && (perturb->rows() != g || perturb->cols() != g || perturb->ring() != F))
    raise(ErrorKind::InvalidArgument, "splitting perturbation must be g x g over F_q");
  Splitting s;
  for (int i = 1; i <= g; ++i) {
    LaurentPoly dh = d_function(X, x_power(F, -i));
    LaurentPoly aU = dh.part_at_least(0), aV = dh.part_below(0);
    if (perturb) {
      LaurentPoly w(F);
      for (int j = 0; j < g; ++j) w += LaurentPoly::monomial((*perturb)(j, i - 1), j);
      aU += w;
      aV -= w;
    }
    s.alpha_U.push_back(aU);
    s.alpha_V.push_back(aV);
  }
  return s;
}

LaurentPoly alpha_closed_form(const HyperellipticCurve& X, int i) {
  const ZqRing& F = X.field;
  const ZqElement half = F.from_int(2).inverse();
  LaurentPoly a(F);
  for (int k = i; k <= 2 * X.g; ++k)
    a += LaurentPoly::monomial(X.P_bar.coeff(k + 1).mul_int(k - 2 * i + 1) * half, k - i);
  return a;
}

std::vector<ZqElement> cocycle_to_coordinates(const HyperellipticCurve& X, const Splitting& s,
                                              const CechCocycle& c) {
  const int g = X.g;
  if (!is_cocycle(X, c)) raise(ErrorKind::NotACocycle, "omega_V - omega_U + dh != 0");
  CechSplit sp = cech_split(c.h, g);
  LaurentPoly rU = c.omega_U - d_function(X, sp.h_U);
  LaurentPoly rV = c.omega_V + d_function(X, sp.h_V);
  for (int m = 0; m < g; ++m) {
    rU -= s.alpha_U[m].scale(sp.cls[m]);
    rV += s.alpha_V[m].scale(sp.cls[m]);
  }
  if (rU != rV) raise(ErrorKind::NotACocycle, "remainder differs between the charts");
  if (!rU.is_zero() && (rU.min_degree() < 0 || rU.max_degree() > g - 1))
    raise(ErrorKind::NotGlobalResidue, "remainder is not a global differential");
  std::vector<ZqElement> out;
  for (int j = 0; j < g; ++j) out.push_back(rU.coeff(j));
  for (const auto& v : sp.cls) out.push_back(v);
  return out;
}

DeligneIllusieData deligne_illusie(const HyperellipticCurve& X, const ZqMatrix* perturb) {
  const ZqRing& F = X.field;
  const int g = X.g;
  const int p = static_cast<int>(X.p);
  const unsigned half = static_cast<unsigned>((p - 1) / 2);
  DeligneIllusieData D;
  D.curly = curly_p(X);
  D.lift_U = bezout_frobenius_lift(X, Chart::U);
  D.lift_V = bezout_frobenius_lift(X, Chart::V);
  D.regularity = regularity_check(X, D.lift_U, D.lift_V);
  D.splitting = splitting_s(X, perturb);

  LaurentPoly Ph = LaurentPoly::from_poly(X.P_bar.pow(half));
  LaurentPoly Qh = LaurentPoly::from_poly(chart_polynomial(X, Chart::V).pow(half));
  LaurentPoly du = LaurentPoly::from_poly(D.regularity.du_quotient);
  LaurentPoly dv = LaurentPoly::from_poly(D.regularity.dv_quotient);
  for (int i = 0; i < g; ++i) {
    CechCocycle c;
    // f_U(omega_i) = x^{ip} (x^{p-1} + u') / y^{p-1} dx/y
    c.omega_U = (du * Ph).shift(i * p);
    // f_V(omega_i) = -x1^{p(g-1-i)} (x1^{p-1} + v') / t^{p-1} dx1/t and dx1/t = -x^{g-1} dx/y
    c.omega_V = (dv * Qh).shift(p * (g - 1 - i)).substitute_inverse().shift(g - 1);
    // h(omega_i) = x^{ip} (u + x^{2p} v(1/x)) / y^p
    c.h = (D.regularity.h_quotient * Ph).shift(i * p);
    D.images.push_back(c);
  }
  for (int i = 1; i <= g; ++i) {
    CechCocycle c{LaurentPoly(F), LaurentPoly(F), Ph.shift(-i * p)};  // h_i^p = y x^{-ip} P^{(p-1)/2}
    D.images.push_back(c);
  }
  D.A = ZqMatrix(F, 2 * g, 2 * g);
  for (int j = 0; j < 2 * g; ++j) {
    if (!is_cocycle(X, D.images[j]))
      raise(ErrorKind::NotACocycle, "image of basis vector " + std::to_string(j) + " is not a cocycle");
    auto col = cocycle_to_coordinates(X, D.splitting, D.images[j]);
    for (int i = 0; i < 2 * g; ++i) D.A(i, j) = col[i];
  }
  return D;
}

ZqMatrix di_matrix(const HyperellipticCurve& X, const ZqMatrix* perturb) { return deligne_illusie(X, perturb).A; }

KedlayaComparison compare_with_kedlaya(const HyperellipticCurve& X, const DeligneIllusieData& di,
                                       const FilteredFrobeniusData& ff) {
  const ZqRing& F = X.field;
  const int g = X.g;
  int f = 0;
  for (int l = 0; l < g; ++l) f += vp_int(2 * l + 1, X.p);
  const ZqRing R = X.ring(f + 3);
  AdaptedBasis b = adapted_basis(X, R.precision());
  Poly P = X.P(R);

  KedlayaComparison out;
  out.T = ZqMatrix::identity(F, 2 * g);
  for (int l = 0; l < g; ++l) {
    // omega'_{g+l} = D dx/y; y H with H = sum_{m=1}^{g} a_m x^{-m} makes D - dH regular at infinity
    LaurentPoly Dl(R);
    for (int k = 0; k <= l; ++k) Dl += LaurentPoly::monomial(b.C22(k, l), g + k);
    LaurentPoly H(R);
    for (int m = 1; m <= g; ++m) {
      const int e = 2 * g - m;
      ZqElement top = (Dl - d_function_over(P, H)).coeff(e);
      // d(y x^{-m}) has leading term (2g + 1 - 2m)/2 x^{2g-m}
      H += LaurentPoly::monomial(divide_by_int(top.mul_int(2), 2 * g + 1 - 2 * m, X.p), -m);
    }
    auto red = [&](const LaurentPoly& L) {
      LaurentPoly r(F);
      if (L.is_zero()) return r;
      for (int k = L.min_degree(); k <= L.max_degree(); ++k) r += LaurentPoly::monomial(L.coeff(k).reduce(F), k);
      return r;
    };
    CechCocycle c;
    c.omega_U = red(Dl);
    c.h = red(H);
    c.omega_V = c.omega_U - d_function(X, c.h);
    if (!c.omega_V.is_zero() && c.omega_V.max_degree() > g - 1)
      raise(ErrorKind::NotGlobalResidue, "adapted basis vector has a pole at infinity mod p");
    auto col = cocycle_to_coordinates(X, di.splitting, c);
    for (int i = 0; i < 2 * g; ++i) out.T(i, g + l) = col[i];
  }
  out.A_kedlaya = ff.A.reduce(F);
  ZqMatrix twist = ZqMatrix::identity(F, 2 * g);
  twist.set_block(g, g, out.T.block(g, g, g, g).sigma());
  out.predicted = out.T.inverse() * di.A * twist;
  out.full_agree = out.predicted == out.A_kedlaya;
  out.lower_blocks_agree = out.predicted.block(g, 0, g, 2 * g) == out.A_kedlaya.block(g, 0, g, 2 * g);
  return out;
}

}  // namespace hypercris
