#include "hypercris/poly.hpp"

#include <algorithm>

namespace hypercris {

namespace {

// Schoolbook product of coefficient vectors. For n = 1 the residues are
// accumulated in 128 bits and reduced every 15 terms (each product < 2^124).
std::vector<ZqElement> convolve(const ZqRing& R, const std::vector<ZqElement>& a, const std::vector<ZqElement>& b,
                                int len) {
  if (a.empty() || b.empty()) return {};
  int full = static_cast<int>(a.size() + b.size()) - 1;
  if (len < 0 || len > full) len = full;
  std::vector<ZqElement> out(len, R.zero());
  if (R.degree() == 1) {
    const uint64_t M = R.modulus();
    const auto* ctx = R.ctx();
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    std::vector<uint64_t> ra(na), rb(nb);
    for (int i = 0; i < na; ++i) ra[i] = a[i].residue();
    for (int j = 0; j < nb; ++j) rb[j] = b[j].residue();
    for (int k = 0; k < len; ++k) {
      int lo = std::max(0, k - nb + 1), hi = std::min(k, na - 1);
      unsigned __int128 acc = 0;
      int cnt = 0;
      for (int i = lo; i <= hi; ++i) {
        acc += static_cast<unsigned __int128>(ra[i]) * rb[k - i];
        if (++cnt == 15) {
          acc %= M;
          cnt = 0;
        }
      }
      Coords c{};
      c[0] = static_cast<uint64_t>(acc % M);
      out[k] = ZqElement(ctx, c);
    }
    return out;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size() && static_cast<int>(i + j) < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

Poly::Poly(const ZqRing& R, std::vector<ZqElement> c, char var) : ring_(R), c_(std::move(c)), var_(var) {
  normalize();
}

Poly Poly::from_ints(const ZqRing& R, const std::vector<int64_t>& c, char var) {
  std::vector<ZqElement> v;
  v.reserve(c.size());
  for (int64_t x : c) v.push_back(R.from_int(x));
  return Poly(R, std::move(v), var);
}

Poly Poly::monomial(const ZqElement& c, int k, char var) {
  ZqRing R = c.ring();
  std::vector<ZqElement> v(k + 1, R.zero());
  v[k] = c;
  return Poly(R, std::move(v), var);
}

Poly Poly::x(const ZqRing& R, char var) { return monomial(R.one(), 1, var); }

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::set_coeff(int k, const ZqElement& v) {
  if (k >= static_cast<int>(c_.size())) {
    if (v.is_zero()) return;
    c_.resize(k + 1, ring_.zero());
  }
  c_[k] = v;
  normalize();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

Poly Poly::operator*(const Poly& o) const { return Poly(ring_, convolve(ring_, c_, o.c_, -1), var_); }

Poly mul_truncated(const Poly& a, const Poly& b, int len) {
  return Poly(a.ring(), convolve(a.ring(), a.coeffs(), b.coeffs(), len), a.var());
}

Poly Poly::scale(const ZqElement& s) const {
  Poly r = *this;
  for (auto& c : r.c_) c *= s;
  r.normalize();
  return r;
}

Poly Poly::mul_int(int64_t k) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.mul_int(k);
  r.normalize();
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(ring_, var_);
  std::vector<ZqElement> v(c_.size() - 1, ring_.zero());
  for (size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k].mul_int(static_cast<int64_t>(k));
  return Poly(ring_, std::move(v), var_);
}

Poly Poly::sigma() const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.sigma();
  return r;
}

Poly Poly::sigma_pow(int k) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.sigma_pow(k);
  return r;
}

Poly Poly::compose_xpow(int e) const {
  if (c_.empty()) return *this;
  std::vector<ZqElement> v(static_cast<size_t>(degree()) * e + 1, ring_.zero());
  for (size_t k = 0; k < c_.size(); ++k) v[k * e] = c_[k];
  return Poly(ring_, std::move(v), var_);
}

Poly Poly::shift(int k) const {
  if (c_.empty() || k == 0) return *this;
  std::vector<ZqElement> v;
  if (k > 0) {
    v.assign(k, ring_.zero());
    v.insert(v.end(), c_.begin(), c_.end());
  } else if (-k < static_cast<int>(c_.size())) {
    v.assign(c_.begin() - k, c_.end());
  }
  return Poly(ring_, std::move(v), var_);
}

Poly Poly::truncate(int len) const {
  if (static_cast<int>(c_.size()) <= len) return *this;
  return Poly(ring_, std::vector<ZqElement>(c_.begin(), c_.begin() + std::max(len, 0)), var_);
}

Poly Poly::reverse(int len) const {
  if (degree() >= len) raise(ErrorKind::InvalidArgument, "reverse length below degree + 1");
  std::vector<ZqElement> v(len, ring_.zero());
  for (size_t k = 0; k < c_.size(); ++k) v[len - 1 - k] = c_[k];
  return Poly(ring_, std::move(v), var_);
}

Poly Poly::pow(unsigned e) const {
  Poly acc = constant(ring_.one(), var_);
  Poly b = *this;
  while (e) {
    if (e & 1) acc = acc * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc(ring_, g.var());
  for (int k = degree(); k >= 0; --k) {
    acc = acc * g;
    acc += constant(c_[k], g.var());
  }
  return acc;
}

Poly compose_truncated(const Poly& f, const Poly& g, int len) {
  Poly acc(f.ring(), g.var());
  for (int k = f.degree(); k >= 0; --k) {
    acc = mul_truncated(acc, g, len);
    acc += Poly::constant(f.coeff(k), g.var());
  }
  return acc.truncate(len);
}

ZqElement Poly::eval(const ZqElement& x) const {
  ZqElement acc = ring_.zero();
  for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
  return acc;
}

Poly Poly::reduce(const ZqRing& target) const {
  std::vector<ZqElement> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.reduce(target));
  return Poly(target, std::move(v), var_);
}

Poly Poly::shift_down(int v) const {
  Poly r = *this;
  for (auto& c : r.c_) c = c.shift_down(v);
  r.normalize();
  return r;
}

Poly Poly::exact_div_p(int k) const {
  ZqRing T = ring_.with_precision(ring_.precision() - k);
  std::vector<ZqElement> v;
  v.reserve(c_.size());
  for (const auto& c : c_) v.push_back(c.exact_div_p(k, T));
  return Poly(T, std::move(v), var_);
}

int Poly::valuation() const {
  int v = ring_.precision();
  for (const auto& c : c_) v = std::min(v, c.valuation());
  return v;
}

bool Poly::operator==(const Poly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c_[k].to_string();
    if (k >= 1) s += std::string("*") + var_;
    if (k >= 2) s += "^" + std::to_string(k);
  }
  return s;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorKind::InvalidArgument, "division by the zero polynomial");
  const ZqRing& R = a.ring();
  int db = b.degree();
  if (a.degree() < db) return {Poly(R, a.var()), a};
  ZqElement lead = b.leading();
  bool monic = lead.is_one();
  ZqElement inv = monic ? lead : lead.inverse();
  std::vector<ZqElement> r = a.coeffs();
  std::vector<ZqElement> q(a.degree() - db + 1, R.zero());
  const auto& bc = b.coeffs();
  if (R.degree() == 1) {
    const uint64_t M = R.modulus();
    std::vector<uint64_t> rr(r.size()), bb(bc.size());
    for (size_t k = 0; k < r.size(); ++k) rr[k] = r[k].residue();
    for (size_t k = 0; k < bc.size(); ++k) bb[k] = bc[k].residue();
    uint64_t iv = inv.residue();
    for (int k = a.degree() - db; k >= 0; --k) {
      uint64_t c = rr[k + db];
      if (!c) continue;
      if (!monic) c = detail::mulmod(c, iv, M);
      Coords qc{};
      qc[0] = c;
      q[k] = ZqElement(R.ctx(), qc);
      for (int j = 0; j <= db; ++j) rr[k + j] = detail::submod(rr[k + j], detail::mulmod(c, bb[j], M), M);
    }
    r.resize(db);
    for (int k = 0; k < db; ++k) {
      Coords rc{};
      rc[0] = rr[k];
      r[k] = ZqElement(R.ctx(), rc);
    }
    return {Poly(R, std::move(q), a.var()), Poly(R, std::move(r), a.var())};
  }
  for (int k = a.degree() - db; k >= 0; --k) {
    ZqElement c = r[k + db];
    if (c.is_zero()) continue;
    if (!monic) c = c * inv;
    q[k] = c;
    for (int j = 0; j <= db; ++j) r[k + j] -= c * bc[j];
  }
  r.resize(db);
  return {Poly(R, std::move(q), a.var()), Poly(R, std::move(r), a.var())};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) raise(ErrorKind::ExactQuotientFailure, "nonzero remainder in exact polynomial division");
  return q;
}

Xgcd xgcd(const Poly& f, const Poly& g) {
  const ZqRing& R = f.ring();
  if (R.precision() != 1) raise(ErrorKind::InvalidArgument, "xgcd requires a residue field");
  if (f.is_zero() && g.is_zero()) raise(ErrorKind::InvalidArgument, "xgcd of two zero polynomials");
  char v = f.var();
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(R.one(), v), s1(R, v);
  Poly t0(R, v), t1 = Poly::constant(R.one(), v);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly s2 = s0 - q * s1;
    Poly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  ZqElement li = r0.leading().inverse();
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

Poly invert_mod(const Poly& a, const Poly& m) {
  Xgcd x = xgcd(a % m, m);
  if (x.d.degree() != 0) raise(ErrorKind::NotAUnit, "polynomial is not invertible modulo m");
  return x.s % m;
}

}  // namespace hypercris
