#include "hypercris/kedlaya.hpp"

#include <gmpxx.h>

#include <cmath>

namespace hypercris {

namespace {

// floor(log_p(x)) for x >= 1
int floor_log(uint64_t x, uint64_t p) {
  int e = 0;
  unsigned __int128 pw = p;
  while (pw <= x) {
    pw *= p;
    ++e;
  }
  return e;
}

// binom(-1/2, k) = (-1)^k C(2k, k) / 4^k in R
ZqElement binom_minus_half(const ZqRing& R, int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
  mpz_class m(std::to_string(R.modulus()));
  mpz_class r = c % m;
  ZqElement v = R.from_int(static_cast<int64_t>(r.get_ui()));
  ZqElement inv4 = R.from_int(4).inverse();
  v *= inv4.pow(static_cast<uint64_t>(k));
  return (k % 2) ? -v : v;
}

// a / (unit * p^v) for a divisible by p^v, checked on residues
Poly divide_by_int(const Poly& a, int64_t w, uint64_t p) {
  int v = vp_int(w, p);
  int64_t u = w;
  for (int i = 0; i < v; ++i) u /= static_cast<int64_t>(p);
  Poly s = a;
  if (v) {
    try {
      s = a.shift_down(v);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotDivisible || e.kind() == ErrorKind::PrecisionExhausted)
        raise(ErrorKind::PrecisionExhausted, "division by p^" + std::to_string(v) + " lost integrality");
      throw;
    }
  }
  return s.scale(a.ring().from_int(u).inverse());
}

// Lift t with t P' = 1 mod P from F_q to W/p^N by Newton iteration.
Poly lift_inverse(const Poly& dP, const Poly& P) {
  const ZqRing& R = P.ring();
  ZqRing F = R.residue_field();
  Poly t = invert_mod(dP.reduce(F), P.reduce(F)).reduce(R);
  Poly two = Poly::constant(R.from_int(2));
  for (int prec = 1; prec < R.precision(); prec *= 2) t = (t * (two - (dP * t) % P)) % P;
  return t;
}

// Base-P digits of sum_k binom(-1/2,k) p^{k+1} x^{p-1} Delta^k / y^{p(2k+1)}, by level.
std::map<int, Poly> frobenius_digits(const HyperellipticCurve& X, const ZqRing& R, int K, const Poly& mult) {
  const uint64_t p = X.p;
  const int N = R.precision();
  Poly P = X.P(R);
  Poly Delta = frobenius_delta(X, R);
  std::map<int, Poly> out;
  Poly Dk = mult;
  for (int k = 0; k < K; ++k) {
    if (k + 1 >= N) break;
    if (k > 0) Dk = Dk * Delta;
    Poly F = Dk.scale(binom_minus_half(R, k).mul_p_pow(k + 1));
    const int mk = static_cast<int>((p * (2 * k + 1) - 1) / 2);
    for (int j = 0; j < mk && !F.is_zero(); ++j) {
      auto [q, r] = divrem(F, P);
      if (!r.is_zero()) {
        auto it = out.find(mk - j);
        if (it == out.end())
          out.emplace(mk - j, r);
        else
          it->second += r;
      }
      F = std::move(q);
    }
    // F P^{mk} / y^{2mk+1} = F / y
    if (!F.is_zero()) {
      auto it = out.find(0);
      if (it == out.end())
        out.emplace(0, F);
      else
        it->second += F;
    }
  }
  return out;
}

}  // namespace

Poly frobenius_delta(const HyperellipticCurve& X, const ZqRing& R) {
  ZqRing R1 = R.with_precision(R.precision() + 1);
  Poly P = X.P(R1);
  Poly num = P.sigma().compose_xpow(static_cast<int>(X.p)) - P.pow(static_cast<unsigned>(X.p));
  return num.exact_div_p(1).reduce(R);
}

void MWForm::add(int m, const Poly& A) {
  auto it = terms.find(m);
  if (it == terms.end())
    terms.emplace(m, A);
  else
    it->second += A;
}

MWForm frobenius_image(const HyperellipticCurve& X, int i, const ZqRing& R, int K) {
  const uint64_t p = X.p;
  Poly P = X.P(R);
  Poly Delta = frobenius_delta(X, R);
  MWForm w;
  Poly base = Poly::monomial(R.one(), static_cast<int>(i * p + p - 1));
  Poly Dk = base;
  for (int k = 0; k < K; ++k) {
    if (k > 0) Dk = Dk * Delta;
    ZqElement c = binom_minus_half(R, k).mul_p_pow(k + 1);
    if (c.is_zero()) break;
    w.add(static_cast<int>((p * (2 * k + 1) - 1) / 2), Dk.scale(c));
  }
  return w;
}

ReductionContext make_reduction_context(const HyperellipticCurve& X, const ZqRing& R) {
  ReductionContext c;
  c.R = R;
  c.g = X.g;
  c.d = X.d;
  c.p = X.p;
  c.P = X.P(R);
  c.dP = c.P.derivative();
  c.t = lift_inverse(c.dP, c.P);
  return c;
}

Poly reduce_pole(const MWForm& w, const ReductionContext& c, int* loss) {
  const ZqRing& R = c.R;
  Poly incoming(R);
  if (w.terms.empty()) return incoming;
  int top = w.terms.rbegin()->first;
  for (int m = top; m >= 1; --m) {
    auto it = w.terms.find(m);
    Poly A = (it == w.terms.end()) ? incoming : it->second + incoming;
    if (A.is_zero()) {
      incoming = A;
      continue;
    }
    auto [q1, r1] = divrem(A, c.P);
    Poly b = (c.t * r1) % c.P;
    // a = (A - b P') / P = q1 + (r1 - b P') / P
    Poly a = q1 + exact_quotient(r1 - b * c.dP, c.P);
    Poly db = b.derivative().mul_int(2);
    incoming = a + divide_by_int(db, 2 * m - 1, c.p);
    if (loss) *loss += vp_int(2 * m - 1, c.p);
  }
  auto it = w.terms.find(0);
  return it == w.terms.end() ? incoming : it->second + incoming;
}

std::vector<ZqElement> reduce_degree(const Poly& A, const ReductionContext& c, int* loss) {
  const ZqRing& R = c.R;
  const int g = c.g, d = c.d;
  std::vector<ZqElement> v = A.coeffs();
  if (static_cast<int>(v.size()) < 2 * g) v.resize(2 * g, R.zero());
  const ZqElement half = R.from_int(2).inverse();
  const auto& Pc = c.P.coeffs();
  const auto& dPc = c.dP.coeffs();
  for (int D = static_cast<int>(v.size()) - 1; D >= 2 * g; --D) {
    if (v[D].is_zero()) continue;
    // d(x^s y) has leading term (2s + d)/2 x^{s + d - 1}
    const int s = D - 2 * g;
    const int64_t w = 2 * s + d;
    Poly lead = Poly::constant(v[D].mul_int(2));
    ZqElement x = divide_by_int(lead, w, c.p).coeff(0);
    if (loss) *loss += vp_int(w, c.p);
    if (s > 0) {
      ZqElement xs = x.mul_int(s);
      for (int j = 0; j <= d; ++j) v[j + s - 1] -= xs * Pc[j];
    }
    ZqElement xh = x * half;
    for (int j = 0; j < d; ++j) v[j + s] -= xh * dPc[j];
    if (!v[D].is_zero()) raise(ErrorKind::PrecisionExhausted, "degree reduction left a residue");
  }
  v.resize(2 * g);
  return v;
}

FrobeniusPlan plan_frobenius(const HyperellipticCurve& X, int target, int extra_scale, int extra_guard) {
  if (target < 1) raise(ErrorKind::InvalidArgument, "target precision must be >= 1");
  const uint64_t p = X.p;
  const int g = X.g, d = X.d;
  FrobeniusPlan pl;
  pl.target = target;
  // degree entering the degree reduction, see reduce_pole: deg <= max(d - 2, (2g - 1) p - 1)
  const int64_t D0 = std::max<int64_t>(d - 2, (2 * g - 1) * static_cast<int64_t>(p) - 1);
  pl.e_deg = D0 >= 2 * g ? floor_log(static_cast<uint64_t>(2 * D0 - 2 * g + 1), p) : 0;
  // term k contributes with valuation >= k - floor(log_p(2k + 1)) - e_deg
  int K = 1;
  while (K - floor_log(2 * K + 1, p) - pl.e_deg < target) ++K;
  int Np = 1;
  while (Np - vp_int(2 * Np + 1, p) < target) ++Np;
  pl.rule_terms = Np;
  pl.terms = std::max(K, Np);
  const int64_t m_top = (static_cast<int64_t>(p) * (2 * pl.terms - 1) - 1) / 2;
  pl.e_pole = m_top >= 1 ? floor_log(static_cast<uint64_t>(2 * m_top - 1), p) : 0;
  pl.scale = pl.e_deg + extra_scale;
  const int loss = std::max(pl.e_pole, pl.e_deg) + pl.e_pole + pl.e_deg;
  pl.working = pl.scale + target + loss + extra_guard;
  return pl;
}

KedlayaMatrix frobenius_matrix(const HyperellipticCurve& X, const FrobeniusPlan& plan) {
  KedlayaMatrix km;
  km.plan = plan;
  km.ring = X.ring(plan.working);
  const ZqRing& R = km.ring;
  const int g = X.g;
  const int p = static_cast<int>(X.p);
  ReductionContext ctx = make_reduction_context(X, R);
  std::map<int, Poly> digits = frobenius_digits(X, R, plan.terms, Poly::monomial(R.one(), p - 1));
  for (auto& [m, D] : digits) D = D.scale(R.one().mul_p_pow(plan.scale));
  km.scaled = ZqMatrix(R, 2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i) {
    MWForm w;
    for (const auto& [m, D] : digits) w.terms.emplace(m, D.shift(i * p));
    auto col = reduce_degree(reduce_pole(w, ctx), ctx);
    for (int r = 0; r < 2 * g; ++r) km.scaled(r, i) = col[r];
  }
  return km;
}

KedlayaMatrix frobenius_matrix(const HyperellipticCurve& X, int target) {
  for (int attempt = 0;; ++attempt) {
    try {
      KedlayaMatrix km = frobenius_matrix(X, plan_frobenius(X, target, attempt, 2 * attempt));
      km.retries = attempt;
      return km;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || attempt >= 3) throw;
    }
  }
}

std::vector<ZqElement> frobenius_apply(const HyperellipticCurve& X, const FrobeniusPlan& plan, const Poly& c) {
  const ZqRing R = X.ring(plan.working);
  if (c.degree() >= 2 * X.g) raise(ErrorKind::InvalidArgument, "form must have degree < 2g");
  const int p = static_cast<int>(X.p);
  ReductionContext ctx = make_reduction_context(X, R);
  Poly cs = c.reduce(R).sigma().compose_xpow(p);
  std::map<int, Poly> digits = frobenius_digits(X, R, plan.terms, Poly::monomial(R.one(), p - 1));
  MWForm w;
  for (const auto& [m, D] : digits) w.terms.emplace(m, (D * cs).scale(R.one().mul_p_pow(plan.scale)));
  return reduce_degree(reduce_pole(w, ctx), ctx);
}

FilteredFrobeniusData adapted_divided_matrix(const KedlayaMatrix& km, const AdaptedBasis& b) {
  const ZqRing& R = km.ring;
  const int g = b.g;
  const uint64_t p = R.p();
  const int f = b.det_valuation;
  ZqMatrix C22 = b.C22.reduce(R);
  // Z = p^f C22^{-1}, integral since v_p(det C22) = f
  ZqMatrix Z(R, g, g);
  for (int l = 0; l < g; ++l) {
    for (int m = l; m >= 0; --m) {
      ZqElement num = (m == l) ? R.one().mul_p_pow(f) : R.zero();
      for (int k = m + 1; k <= l; ++k) num -= C22(m, k) * Z(k, l);
      // C22(m, m) = -(2m + 1)/2
      Poly q = divide_by_int(Poly::constant(num.mul_int(-2)), 2 * m + 1, p);
      Z(m, l) = q.coeff(0);
    }
  }
  ZqMatrix Y = ZqMatrix::identity(R, 2 * g).scale(R.one().mul_p_pow(f));
  Y.set_block(g, g, Z);
  ZqMatrix C = b.C.reduce(R);
  ZqMatrix num = Y * km.scaled * C.sigma();
  const int shift = km.plan.scale + f;
  ZqMatrix Mad;
  try {
    Mad = num.shift_down(shift);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotDivisible) throw;
    raise(ErrorKind::PrecisionExhausted, "adapted Frobenius matrix is not integral at this precision");
  }
  const int prec = km.plan.target - f;  // M_ad known modulo p^prec
  if (prec < 2) raise(ErrorKind::PrecisionExhausted, "not enough precision left for the divided matrix");
  ZqRing Rm = R.with_precision(prec);
  Mad = Mad.reduce(Rm);
  FilteredFrobeniusData out;
  out.g = g;
  out.precision = prec - 1;
  out.r = b.r;
  out.M_ad = Mad;
  ZqRing Ra = R.with_precision(prec - 1);
  out.A = ZqMatrix(Ra, 2 * g, 2 * g);
  for (int j = 0; j < 2 * g; ++j) {
    for (int i = 0; i < 2 * g; ++i) {
      const ZqElement& e = Mad(i, j);
      if (b.r[j] == 1) {
        if (e.valuation() < 1)
          raise(ErrorKind::StrongDivisibilityViolation,
                "column " + std::to_string(j) + " of the Fil^1 block is not divisible by p");
        out.A(i, j) = e.shift_down(1).reduce(Ra);
      } else {
        out.A(i, j) = e.reduce(Ra);
      }
    }
  }
  if (!out.A.invertible_mod_p()) raise(ErrorKind::NotInvertibleModP, "divided Frobenius matrix is singular mod p");
  for (int j = 0; j < g; ++j) out.labels.push_back("omega_" + std::to_string(j));
  for (int j = 0; j < g; ++j) out.labels.push_back("omega'_" + std::to_string(g + j));
  return out;
}

FilteredFrobeniusData filtered_frobenius(const HyperellipticCurve& X, int target, KedlayaMatrix* kedlaya) {
  if (target < 1) raise(ErrorKind::InvalidArgument, "target precision must be >= 1");
  int f = 0;
  for (int l = 0; l < X.g; ++l) f += vp_int(2 * l + 1, X.p);
  const int TM = target + 1 + f;
  for (int attempt = 0;; ++attempt) {
    try {
      FrobeniusPlan pl = plan_frobenius(X, TM, attempt, f + 2 * attempt);
      KedlayaMatrix km = frobenius_matrix(X, pl);
      km.retries = attempt;
      AdaptedBasis b = adapted_basis(X, pl.working);
      FilteredFrobeniusData out = adapted_divided_matrix(km, b);
      if (kedlaya) *kedlaya = km;
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PrecisionExhausted || attempt >= 3) throw;
    }
  }
}

int zeta_precision(uint64_t p, int n, int g) {
  long double q = std::pow(static_cast<long double>(p), n);
  long double B = 0, binom = 1;
  for (int i = 0; i <= g; ++i) {
    if (i) binom = binom * (2 * g - i + 1) / i;
    B = std::max(B, binom * std::pow(q, i / 2.0L));
  }
  int a = 1;
  long double pa = static_cast<long double>(p);
  while (pa <= 2 * B) {
    pa *= static_cast<long double>(p);
    ++a;
  }
  return a;
}

ZetaResult zeta_from_matrix(const ZqMatrix& M, int g) {
  const ZqRing& R = M.ring();
  const int n = R.degree();
  const uint64_t p = R.p();
  ZetaResult z;
  z.q = R.q();
  z.precision = R.precision();
  ZqMatrix Mq = M;
  for (int k = 1; k < n; ++k) Mq = Mq * M.sigma_pow(k);
  auto c = Mq.charpoly();
  z.L.assign(2 * g + 1, 0);
  z.L[0] = 1;
  const long double q = static_cast<long double>(z.q);
  const long double pa = std::pow(static_cast<long double>(p), R.precision());
  long double binom = 1;
  for (int i = 1; i <= g; ++i) {
    binom = binom * (2 * g - i + 1) / i;
    if (!c[i].is_rational())
      raise(ErrorKind::FinalVerificationFailed, "characteristic polynomial coefficient is not in Z_p");
    long double B = binom * std::pow(q, i / 2.0L);
    if (pa <= 2 * B) raise(ErrorKind::PrecisionInsufficientForLift, "p^N does not separate the Weil window");
    int64_t v = c[i].centered();
    if (std::fabs(static_cast<long double>(v)) > B + 0.5L)
      raise(ErrorKind::FinalVerificationFailed, "lifted coefficient violates the Weil bound");
    z.L[i] = v;
  }
  for (int i = 0; i < g; ++i) {
    __int128 v = z.L[i];
    for (int k = 0; k < g - i; ++k) v *= static_cast<__int128>(z.q);
    z.L[2 * g - i] = static_cast<int64_t>(v);
  }
  for (int i = g + 1; i <= 2 * g; ++i)
    if (c[i] != R.from_int(z.L[i]))
      raise(ErrorKind::FinalVerificationFailed, "functional equation fails modulo p^N");
  return z;
}

ZetaResult zeta_function(const HyperellipticCurve& X) {
  const int a = zeta_precision(X.p, X.n, X.g);
  FilteredFrobeniusData ff = filtered_frobenius(X, std::max(a - 1, 1));
  ZqRing Ra = ff.M_ad.ring().with_precision(a);
  return zeta_from_matrix(ff.M_ad.reduce(Ra), X.g);
}

}  // namespace hypercris
