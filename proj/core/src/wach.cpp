#include "hypercris/wach.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace hypercris {

namespace {

// Exact series over Q, truncated to a fixed length.
using QSeries = std::vector<mpq_class>;

QSeries qmul(const QSeries& a, const QSeries& b, size_t L) {
  QSeries r(L, 0);
  for (size_t i = 0; i < std::min(a.size(), L); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size() && i + j < L; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// f(g), g(0) = 0
QSeries qcompose(const QSeries& f, const QSeries& g, size_t L) {
  QSeries acc(L, 0);
  for (size_t k = std::min(f.size(), L); k-- > 0;) {
    acc = qmul(acc, g, L);
    acc[0] += f[k];
  }
  return acc;
}

// phi(f) = f (p + f)^{p-1}
QSeries qphi_of(const QSeries& f, uint64_t p, size_t L) {
  QSeries shifted = f;
  shifted.resize(L, 0);
  shifted[0] += mpq_class(mpz_class(p));
  QSeries acc = f;
  acc.resize(L, 0);
  for (uint64_t k = 1; k < p; ++k) acc = qmul(acc, shifted, L);
  return acc;
}

bool p_integral(const mpq_class& v, uint64_t p) { return mpz_divisible_ui_p(v.get_den().get_mpz_t(), p) == 0; }

ZqElement to_ring(const mpq_class& v, const ZqRing& R) {
  mpz_class m(static_cast<unsigned long>(R.modulus()));
  mpz_class num = v.get_num() % m, inv;
  if (num < 0) num += m;
  if (mpz_invert(inv.get_mpz_t(), v.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
    raise(ErrorKind::AxiomViolation, "coefficient is not p-integral");
  mpz_class r = (num * inv) % m;
  return R.from_int(static_cast<int64_t>(r.get_ui()));
}

std::vector<TruncatedSeries> power_table(const TruncatedSeries& f) {
  const int M = f.precision();
  std::vector<TruncatedSeries> out;
  out.reserve(M);
  out.push_back(TruncatedSeries::constant(f.ring().one(), M));
  for (int k = 1; k < M; ++k) out.push_back(out.back() * f);
  return out;
}

TruncatedSeries p_plus(const ZqRing& R, const TruncatedSeries& f) {
  TruncatedSeries r = f;
  r.set_coeff(0, r[0] + R.from_int(static_cast<int64_t>(R.p())));
  return r;
}

// Truncate or pad with zeros.
TruncatedSeries resize(const TruncatedSeries& f, int M) { return f.truncate(M); }

void finish_structure(SStructure& S) {
  S.gamma_pow = power_table(S.gamma);
  S.phi_pow = power_table(S.phi);
  const int M = S.t_precision;
  // phi(gamma(T)) = gamma(T) (p + gamma(T))^{p-1}
  TruncatedSeries lhs = apply_gamma(S, S.phi);
  TruncatedSeries rhs = S.gamma * p_plus(S.base, S.gamma).pow(static_cast<int>(S.p - 1));
  if (lhs != rhs) raise(ErrorKind::AxiomViolation, "gamma and phi do not commute modulo T^" + std::to_string(M));
}

}  // namespace

SStructure build_s_structure(uint64_t p, int n, int N, int M) {
  if (p % 2 == 0) raise(ErrorKind::EvenCharacteristic, "S-structure needs p odd");
  if (M < 2) raise(ErrorKind::InvalidArgument, "T-precision must be at least 2");
  const size_t L = static_cast<size_t>(M);
  const mpz_class P(static_cast<unsigned long>(p));
  mpz_class ppm1;
  mpz_pow_ui(ppm1.get_mpz_t(), P.get_mpz_t(), p - 1);

  QSeries c(L, 0);
  c[1] = mpq_class(P + 1);
  QSeries phiT = qphi_of(QSeries{0, 1}, p, L);
  for (size_t m = 2; m < L; ++m) {
    // with c_m = 0: the T^m coefficients of both sides; c_m enters with
    // p^{(p-1)m} on the left and p^{p-1} on the right
    QSeries lhs = qcompose(c, phiT, m + 1);
    QSeries rhs = qphi_of(c, p, m + 1);
    mpz_class ppm;
    mpz_pow_ui(ppm.get_mpz_t(), P.get_mpz_t(), (p - 1) * m);
    c[m] = (rhs[m] - lhs[m]) / mpq_class(ppm - ppm1);
    c[m].canonicalize();
    if (!p_integral(c[m], p))
      raise(ErrorKind::AxiomViolation, "gamma(T) coefficient " + std::to_string(m) + " is not p-integral");
  }

  // gamma(T) - T = alpha (p + T) T: a_0 = b_0 / p, a_k = (b_k - a_{k-1}) / p
  QSeries a(L - 1, 0);
  for (size_t k = 0; k + 1 < L; ++k) {
    mpq_class b = c[k + 1] - (k == 0 ? 1 : 0);
    a[k] = (b - (k ? a[k - 1] : mpq_class(0))) / mpq_class(P);
    a[k].canonicalize();
    if (!p_integral(a[k], p)) raise(ErrorKind::AxiomViolation, "alpha is not p-integral");
  }
  {
    mpq_class d = a[0] - 1;
    if (!p_integral(d, p) || mpz_divisible_ui_p(d.get_num().get_mpz_t(), p) == 0)
      raise(ErrorKind::AxiomViolation, "alpha(0) is not congruent to 1 mod p");
  }

  SStructure S;
  S.p = p;
  S.base = ZqRing::create(p, n, N);
  S.t_precision = M;
  std::vector<ZqElement> gc, pc, ac;
  for (size_t k = 0; k < L; ++k) {
    gc.push_back(to_ring(c[k], S.base));
    pc.push_back(to_ring(phiT[k], S.base));
  }
  for (const auto& v : a) ac.push_back(to_ring(v, S.base));
  S.gamma = TruncatedSeries(S.base, M, gc);
  S.phi = TruncatedSeries(S.base, M, pc);
  S.alpha = TruncatedSeries(S.base, M - 1, ac);
  S.chi = S.gamma[1];
  finish_structure(S);
  return S;
}

SStructure square_gamma(const SStructure& S) {
  SStructure Q = S;
  Q.gamma = apply_gamma(S, S.gamma);
  Q.chi = Q.gamma[1];
  Q.alpha = TruncatedSeries();
  finish_structure(Q);
  return Q;
}

TruncatedSeries apply_gamma(const SStructure& S, const TruncatedSeries& f) {
  TruncatedSeries g = resize(f, S.t_precision);
  TruncatedSeries acc(g.ring(), S.t_precision);
  for (int k = 0; k < S.t_precision; ++k)
    if (!g[k].is_zero()) acc += S.gamma_pow[k].reduce(g.ring()).scale(g[k]);
  return resize(acc, f.precision());
}

TruncatedSeries apply_phi(const SStructure& S, const TruncatedSeries& f) {
  TruncatedSeries g = resize(f, S.t_precision);
  TruncatedSeries acc(g.ring(), S.t_precision);
  for (int k = 0; k < S.t_precision; ++k)
    if (!g[k].is_zero()) acc += S.phi_pow[k].reduce(g.ring()).scale(g[k].sigma());
  return resize(acc, f.precision());
}

// SeriesMatrix

SeriesMatrix::SeriesMatrix(const ZqRing& R, int M, int rows, int cols)
    : ring_(R), M_(M), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, TruncatedSeries(R, M)) {}

SeriesMatrix SeriesMatrix::identity(const ZqRing& R, int M, int n) {
  SeriesMatrix I(R, M, n, n);
  for (int i = 0; i < n; ++i) I(i, i) = TruncatedSeries::constant(R.one(), M);
  return I;
}

SeriesMatrix SeriesMatrix::constant(const ZqMatrix& A, int M) {
  SeriesMatrix S(A.ring(), M, A.rows(), A.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) S(i, j) = TruncatedSeries::constant(A(i, j), M);
  return S;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) raise(ErrorKind::InvalidArgument, "shape mismatch");
  SeriesMatrix s = *this;
  for (size_t k = 0; k < a_.size(); ++k) s.a_[k] += o.a_[k];
  return s;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) raise(ErrorKind::InvalidArgument, "shape mismatch");
  SeriesMatrix s = *this;
  for (size_t k = 0; k < a_.size(); ++k) s.a_[k] -= o.a_[k];
  return s;
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
  if (c_ != o.r_) raise(ErrorKind::InvalidArgument, "shape mismatch");
  SeriesMatrix s(ring_, M_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const TruncatedSeries& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) s(i, j) += x * o(k, j);
    }
  return s;
}

SeriesMatrix SeriesMatrix::reduce(const ZqRing& target) const {
  SeriesMatrix s(target, M_, r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k].reduce(target);
  return s;
}

ZqMatrix SeriesMatrix::coefficient(int k) const {
  ZqMatrix m(ring_, r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).coeff(k);
  return m;
}

bool SeriesMatrix::operator==(const SeriesMatrix& o) const {
  return r_ == o.r_ && c_ == o.c_ && M_ == o.M_ && ring_ == o.ring_ && a_ == o.a_;
}

bool SeriesMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const TruncatedSeries& s) { return s.is_zero(); });
}

int SeriesMatrix::t_valuation() const {
  int v = M_;
  for (const auto& s : a_) v = std::min(v, s.t_valuation());
  return v;
}

// devissage

SeriesMatrix discrepancy(const SeriesMatrix& G, const ZqMatrix& A, const std::vector<int>& r, const SStructure& S) {
  const int n = G.rows();
  if (G.cols() != n || A.rows() != n || A.cols() != n || static_cast<int>(r.size()) != n)
    raise(ErrorKind::InvalidArgument, "discrepancy: shapes disagree");
  const ZqRing& R = G.ring();
  const int M = G.t_precision();
  ZqMatrix Ar = A.reduce(R);
  TruncatedSeries lam = p_plus(R, TruncatedSeries::t(R, M));
  TruncatedSeries glam = p_plus(R, resize(S.gamma.reduce(R), M));

  SeriesMatrix GA = G * SeriesMatrix::constant(Ar, M);
  SeriesMatrix AL = SeriesMatrix::constant(Ar, M);
  for (int j = 0; j < n; ++j) {
    if (r[j] == 0) continue;
    TruncatedSeries gl = glam.pow(r[j]), l = lam.pow(r[j]);
    for (int i = 0; i < n; ++i) {
      GA(i, j) *= gl;
      AL(i, j) *= l;
    }
  }
  SeriesMatrix phiG(R, M, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) phiG(i, j) = apply_phi(S, G(i, j));
  return GA - AL * phiG;
}

ZqMatrix extract_B(const SeriesMatrix& D, int n, const std::vector<int>& r) {
  ZqMatrix B(D.ring(), D.rows(), D.cols());
  for (int i = 0; i < D.rows(); ++i)
    for (int j = 0; j < D.cols(); ++j) {
      const TruncatedSeries& d = D(i, j);
      if (d.t_valuation() < n)
        raise(ErrorKind::NotDivisible, "discrepancy is not divisible by T^" + std::to_string(n));
      if (r[j] > 1) raise(ErrorKind::InvalidArgument, "only r_j in {0, 1} is supported");
      // (p + T) h has constant term p h(0)
      B(i, j) = r[j] == 0 ? d.coeff(n) : d.coeff(n).shift_down(1);
    }
  return B;
}

ZqMatrix solve_star(const ZqMatrix& B, const ZqMatrix& A, const std::vector<int>& r, int n, int target) {
  const ZqRing& R = B.ring();
  const int m = B.rows();
  const int p = static_cast<int>(R.p());
  if (p < 3) raise(ErrorKind::EvenCharacteristic, "solve_star needs p >= 3");
  if (n < 1) raise(ErrorKind::InvalidArgument, "level must be at least 1");
  if (target > R.precision()) raise(ErrorKind::PrecisionExhausted, "target exceeds the working precision");
  ZqMatrix Ar = A.reduce(R);
  ZqMatrix Ap = Ar;
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k) Ap(i, k) = Ar(i, k).mul_p_pow(r[k]);
  const ZqRing F = R.residue_field();
  ZqMatrix Ainv = Ar.reduce(F).inverse();

  auto residual = [&](const ZqMatrix& X) {
    ZqMatrix Xp(R, m, m);
    for (int k = 0; k < m; ++k)
      for (int j = 0; j < m; ++j) Xp(k, j) = X(k, j).sigma().mul_p_pow(n * (p - 1) - r[j]);
    return B - Ap * Xp + X * Ar;
  };

  // B = -X A mod p, then X <- X + p^k Y with B_k / p^k = -Y A mod p
  ZqMatrix X = (-(B.reduce(F) * Ainv)).reduce(R);
  for (int k = 1; k < target; ++k) {
    ZqMatrix res = residual(X);
    if (res.valuation() < k) raise(ErrorKind::NonConvergence, "solve_star lost track of the residual");
    ZqMatrix Y = -(res.shift_down(k).reduce(F) * Ainv);
    X += Y.reduce(R).mul_p_pow(k);
  }
  if (residual(X).valuation() < target) raise(ErrorKind::NonConvergence, "solve_star did not converge");
  return X;
}

CommutationReport verify_commutation(const SeriesMatrix& G, const ZqMatrix& A, const std::vector<int>& r,
                                     const SStructure& S, int i, int j) {
  CommutationReport rep;
  const int n = G.rows();
  const ZqRing Ri = S.base.with_precision(i);
  SeriesMatrix Gw(S.base, S.t_precision, n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) Gw(a, b) = resize(G(a, b).reduce(S.base), S.t_precision);
  rep.trivial_mod_T = Gw.coefficient(0).reduce(Ri) == ZqMatrix::identity(Ri, n);

  SeriesMatrix D = discrepancy(Gw, A, r, S);
  SeriesMatrix Dj(Ri, j, n, n);
  rep.residual_p_valuation = i;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Dj(a, b) = resize(D(a, b), j).reduce(Ri);
      for (int k = 0; k < j; ++k) rep.residual_p_valuation = std::min(rep.residual_p_valuation, Dj(a, b)[k].valuation());
    }
  rep.residual_t_valuation = Dj.t_valuation();
  rep.commutes = rep.trivial_mod_T && Dj.is_zero();
  return rep;
}

int gamma_working_precision(int i, int j, int extra_guard) { return i + j + 1 + extra_guard; }

GammaMatrix compute_gamma_matrix(const ZqMatrix& A, const std::vector<int>& r, const SStructure& S, int i, int j) {
  const int m = A.rows();
  if (A.cols() != m || static_cast<int>(r.size()) != m) raise(ErrorKind::InvalidArgument, "A must be square");
  if (i < 1 || j < 1) raise(ErrorKind::InvalidArgument, "precisions must be positive");
  for (int v : r)
    if (v < 0 || v > 1) raise(ErrorKind::InvalidArgument, "only r_j in {0, 1} is supported");
  if (S.t_precision < j) raise(ErrorKind::InvalidArgument, "S-structure truncated below T^j");
  const ZqRing& Rw = S.base;
  if (Rw.precision() < i + 1) raise(ErrorKind::PrecisionExhausted, "working precision too small");
  if (A.ring().precision() < Rw.precision())
    raise(ErrorKind::PrecisionExhausted, "A is not known to the working precision");
  if (!A.invertible_mod_p()) raise(ErrorKind::NotInvertibleModP, "A is not invertible mod p");
  ZqMatrix Aw = A.reduce(Rw);
  const ZqRing Ri = Rw.with_precision(i);

  GammaMatrix out;
  out.p_precision = i;
  out.t_precision = j;
  out.working = Rw.precision();
  SeriesMatrix G = SeriesMatrix::identity(Rw, S.t_precision, m);
  for (int n = 1; n < j; ++n) {
    SeriesMatrix D = discrepancy(G, Aw, r, S);
    ZqMatrix B = extract_B(D, n, r);
    ZqMatrix X = solve_star(B, Aw, r, n, Rw.precision());
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        TruncatedSeries& e = G(a, b);
        e.set_coeff(n, e[n] + X(a, b));
      }
    // the digits we certify: level n costs at most one, and i + 1 remain
    int v = discrepancy(G, Aw, r, S).reduce(Rw.with_precision(Rw.precision() - n)).t_valuation();
    out.level_valuations.push_back(v);
    if (v < n + 1)
      raise(ErrorKind::FinalVerificationFailed, "level " + std::to_string(n) + " did not clear T^" + std::to_string(n));
  }

  out.G = SeriesMatrix(Ri, j, m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) out.G(a, b) = resize(G(a, b), j).reduce(Ri);
  out.report = verify_commutation(out.G, Aw, r, S, i, j);
  if (!out.report.commutes) raise(ErrorKind::FinalVerificationFailed, "gamma matrix fails the commutation check");
  return out;
}

GammaMatrix compute_gamma_matrix(const FilteredFrobeniusData& data, int i, int j, int extra_guard) {
  const int iw = gamma_working_precision(i, j, extra_guard);
  if (data.precision < iw)
    raise(ErrorKind::PrecisionExhausted,
          "Frobenius data known to p^" + std::to_string(data.precision) + ", need p^" + std::to_string(iw));
  SStructure S = build_s_structure(data.A.ring().p(), data.A.ring().degree(), iw, std::max(j, 2));
  return compute_gamma_matrix(data.A, data.r, S, i, j);
}

}  // namespace hypercris
