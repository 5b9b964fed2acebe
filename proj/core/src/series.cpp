#include "hypercris/series.hpp"

#include <algorithm>

namespace hypercris {

TruncatedSeries::TruncatedSeries(const ZqRing& R, int M) : ring_(R), M_(M), c_(M, R.zero()) {
  if (M < 1) raise(ErrorKind::InvalidArgument, "series precision must be >= 1");
}

TruncatedSeries::TruncatedSeries(const ZqRing& R, int M, std::vector<ZqElement> c) : ring_(R), M_(M), c_(std::move(c)) {
  if (M < 1) raise(ErrorKind::InvalidArgument, "series precision must be >= 1");
  c_.resize(M, R.zero());
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& f, int M) {
  std::vector<ZqElement> v(f.coeffs().begin(), f.coeffs().begin() + std::min<int>(M, f.degree() + 1));
  return TruncatedSeries(f.ring(), M, std::move(v));
}

TruncatedSeries TruncatedSeries::constant(const ZqElement& c, int M) {
  TruncatedSeries s(c.ring(), M);
  s.c_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::t(const ZqRing& R, int M) {
  TruncatedSeries s(R, M);
  if (M > 1) s.c_[1] = R.one();
  return s;
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

int TruncatedSeries::t_valuation() const {
  for (int k = 0; k < M_; ++k)
    if (!c_[k].is_zero()) return k;
  return M_;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (o.M_ != M_) raise(ErrorKind::InvalidArgument, "series precisions differ");
  TruncatedSeries r = *this;
  for (int k = 0; k < M_; ++k) r.c_[k] += o.c_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  if (o.M_ != M_) raise(ErrorKind::InvalidArgument, "series precisions differ");
  TruncatedSeries r = *this;
  for (int k = 0; k < M_; ++k) r.c_[k] -= o.c_[k];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (o.M_ != M_) raise(ErrorKind::InvalidArgument, "series precisions differ");
  Poly a(ring_, c_), b(ring_, o.c_);
  return TruncatedSeries(ring_, M_, mul_truncated(a, b, M_).coeffs());
}

TruncatedSeries TruncatedSeries::scale(const ZqElement& s) const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

TruncatedSeries TruncatedSeries::sigma() const {
  TruncatedSeries r = *this;
  for (auto& c : r.c_) c = c.sigma();
  return r;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
  if (!c_[0].is_unit()) raise(ErrorKind::NonUnitConstantTerm, "series constant term is not a unit");
  // Newton: g <- g (2 - f g), doubling the t-adic precision
  TruncatedSeries g = constant(c_[0].inverse(), M_);
  TruncatedSeries two = constant(ring_.from_int(2), M_);
  for (int prec = 1; prec < M_; prec *= 2) g = g * (two - *this * g);
  return g;
}

TruncatedSeries TruncatedSeries::pow(int e) const {
  TruncatedSeries b = e < 0 ? invert_unit() : *this;
  unsigned u = static_cast<unsigned>(e < 0 ? -e : e);
  TruncatedSeries acc = constant(ring_.one(), M_);
  while (u) {
    if (u & 1) acc = acc * b;
    u >>= 1;
    if (u) b = b * b;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::derivative() const {
  TruncatedSeries r(ring_, M_);
  for (int k = 1; k < M_; ++k) r.c_[k - 1] = c_[k].mul_int(k);
  return r;
}

TruncatedSeries TruncatedSeries::shift(int k) const {
  TruncatedSeries r(ring_, M_);
  for (int i = 0; i < M_; ++i) {
    int j = i + k;
    if (j >= 0 && j < M_) r.c_[j] = c_[i];
  }
  return r;
}

TruncatedSeries TruncatedSeries::truncate(int M) const {
  std::vector<ZqElement> v(c_.begin(), c_.begin() + std::min(M, M_));
  return TruncatedSeries(ring_, M, std::move(v));
}

TruncatedSeries TruncatedSeries::reduce(const ZqRing& target) const {
  std::vector<ZqElement> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.reduce(target));
  return TruncatedSeries(target, M_, std::move(v));
}

Poly TruncatedSeries::to_poly(char var) const { return Poly(ring_, c_, var); }

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
  if (M_ != o.M_) return false;
  for (int k = 0; k < M_; ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

TruncatedSeries substitute(const Poly& f, const TruncatedSeries& g) {
  if (!g[0].is_zero()) raise(ErrorKind::InvalidArgument, "substituted series must have zero constant term");
  int M = g.precision();
  TruncatedSeries acc(f.ring(), M);
  for (int k = f.degree(); k >= 0; --k) {
    acc = acc * g;
    acc.set_coeff(0, acc[0] + f.coeff(k));
  }
  return acc;
}

TruncatedSeries substitute(const TruncatedSeries& f, const TruncatedSeries& g) {
  return substitute(f.to_poly(), g);
}

TruncatedSeries hensel_series_solve(const Poly& R, int M) {
  const ZqRing& ring = R.ring();
  if (!R.coeff(0).is_one()) raise(ErrorKind::NonUnitConstantTerm, "R(0) must equal 1");
  Poly dR = R.derivative();
  TruncatedSeries U = TruncatedSeries::constant(ring.one(), M);
  TruncatedSeries one = U;
  // F(U) = U R(t^2 U) - 1, F'(U) = R(t^2 U) + t^2 U R'(t^2 U); F'(1)(0) = 1.
  for (int it = 0; it < 64; ++it) {
    TruncatedSeries z = U.shift(2);
    TruncatedSeries Rz = substitute(R, z);
    TruncatedSeries F = U * Rz - one;
    if (F.is_zero()) break;
    TruncatedSeries dF = Rz + z * substitute(dR, z);
    U = U - F * dF.invert_unit();
  }
  TruncatedSeries check = U * substitute(R, U.shift(2)) - one;
  if (!check.is_zero()) raise(ErrorKind::NonConvergence, "Newton iteration for U did not converge");
  return U;
}

}  // namespace hypercris
