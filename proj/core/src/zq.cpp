#include "hypercris/zq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace hypercris {

using detail::addmod;
using detail::mulmod;
using detail::submod;
using detail::ZqContext;

namespace {

// --- small dense polynomials over F_p, used only to pick the modulus -------

using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& m, uint64_t p) {
  // m monic or with unit leading coefficient
  fp_trim(a);
  uint64_t lc = m.back();
  uint64_t lci = 1;
  {
    uint64_t b = lc, e = p - 2;
    while (e) {
      if (e & 1) lci = mulmod(lci, b, p);
      b = mulmod(b, b, p);
      e >>= 1;
    }
  }
  while (a.size() >= m.size()) {
    uint64_t c = mulmod(a.back(), lci, p);
    size_t shift = a.size() - m.size();
    for (size_t k = 0; k < m.size(); ++k)
      a[shift + k] = submod(a[shift + k], mulmod(c, m[k], p), p);
    fp_trim(a);
  }
  return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j], p), p);
  return fp_mod(r, m, p);
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: m of degree n is irreducible iff gcd(x^{p^k} - x, m) = 1 for k <= n/2.
bool fp_irreducible(const FpPoly& m, uint64_t p) {
  int n = static_cast<int>(m.size()) - 1;
  if (n == 1) return true;
  FpPoly xp = {0, 1};
  for (int k = 1; k <= n / 2; ++k) {
    // xp <- xp^p mod m
    FpPoly base = xp, acc = {1};
    uint64_t e = p;
    while (e) {
      if (e & 1) acc = fp_mulmod(acc, base, m, p);
      base = fp_mulmod(base, base, m, p);
      e >>= 1;
    }
    xp = acc;
    FpPoly t = xp;
    t.resize(std::max<size_t>(t.size(), 2), 0);
    t[1] = submod(t[1], 1, p);
    fp_trim(t);
    FpPoly g = fp_gcd(m, t, p);
    if (g.size() != 1) return false;
  }
  return true;
}

FpPoly pick_modulus(uint64_t p, int n) {
  if (n == 1) return {0, 1};
  std::vector<uint64_t> c(n, 0);
  for (;;) {
    FpPoly m(c.begin(), c.end());
    m.push_back(1);
    if (m[0] != 0 && fp_irreducible(m, p)) return m;
    // increment c as a base-p counter, c[0] least significant
    int k = 0;
    while (k < n && ++c[k] == p) c[k++] = 0;
    if (k == n) raise(ErrorKind::InvalidArgument, "no irreducible polynomial found");
  }
}

// --- raw coordinate arithmetic on a context ---------------------------------

Coords raw_mul(const ZqContext& R, const Coords& x, const Coords& y) {
  Coords r{};
  const uint64_t M = R.mod;
  const int n = R.n;
  if (n == 1) {
    r[0] = mulmod(x[0], y[0], M);
    return r;
  }
  unsigned __int128 acc[2 * kMaxDegree - 1] = {};
  uint64_t prod[2 * kMaxDegree - 1];
  for (int i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < n; ++j) acc[i + j] += static_cast<unsigned __int128>(x[i]) * y[j];
  }
  for (int k = 0; k < 2 * n - 1; ++k) prod[k] = static_cast<uint64_t>(acc[k] % M);
  for (int j = 0; j < n; ++j) {
    unsigned __int128 s = prod[j];
    for (int k = n; k < 2 * n - 1; ++k)
      s += static_cast<unsigned __int128>(prod[k]) * R.red[k - n][j];
    r[j] = static_cast<uint64_t>(s % M);
  }
  return r;
}

Coords raw_pow(const ZqContext& R, Coords b, uint64_t e) {
  Coords acc{};
  acc[0] = 1 % R.mod;
  while (e) {
    if (e & 1) acc = raw_mul(R, acc, b);
    b = raw_mul(R, b, b);
    e >>= 1;
  }
  return acc;
}

Coords raw_add(const ZqContext& R, const Coords& x, const Coords& y) {
  Coords r{};
  for (int k = 0; k < R.n; ++k) r[k] = addmod(x[k], y[k], R.mod);
  return r;
}
Coords raw_sub(const ZqContext& R, const Coords& x, const Coords& y) {
  Coords r{};
  for (int k = 0; k < R.n; ++k) r[k] = submod(x[k], y[k], R.mod);
  return r;
}

// evaluate the defining polynomial (and its derivative) at an element
Coords eval_m(const ZqContext& R, const Coords& x, bool derivative) {
  Coords acc{};
  const int n = R.n;
  int top = derivative ? n - 1 : n;
  for (int k = top; k >= 0; --k) {
    acc = raw_mul(R, acc, x);
    uint64_t c = derivative ? mulmod(R.m[k + 1] % R.mod, static_cast<uint64_t>(k + 1) % R.mod, R.mod)
                            : R.m[k] % R.mod;
    acc[0] = addmod(acc[0], c, R.mod);
  }
  return acc;
}

int raw_valuation(const ZqContext& R, const Coords& x) {
  int v = R.N;
  for (int k = 0; k < R.n; ++k) {
    uint64_t c = x[k];
    if (!c) continue;
    int w = 0;
    while (c % R.p == 0) {
      c /= R.p;
      ++w;
    }
    v = std::min(v, w);
  }
  return v;
}

Coords raw_inverse(const ZqContext& R, const Coords& x) {
  if (raw_valuation(R, x) != 0) raise(ErrorKind::NotAUnit, "element is divisible by p");
  if (R.n == 1) {
    // extended Euclid on (x, p^N)
    __int128 a = x[0], b = R.mod, s0 = 1, s1 = 0;
    while (b) {
      __int128 qt = a / b;
      __int128 t = a - qt * b;
      a = b;
      b = t;
      t = s0 - qt * s1;
      s0 = s1;
      s1 = t;
    }
    __int128 m = R.mod;
    __int128 r = s0 % m;
    if (r < 0) r += m;
    Coords out{};
    out[0] = static_cast<uint64_t>(r);
    return out;
  }
  // inverse mod p via x^{q-2}, then Newton y <- y(2 - xy)
  unsigned __int128 q = 1;
  for (int k = 0; k < R.n; ++k) q *= R.p;
  Coords y = raw_pow(R, x, static_cast<uint64_t>(q - 2));
  Coords two{};
  two[0] = 2 % R.mod;
  for (int prec = 1; prec < R.N; prec *= 2) y = raw_mul(R, y, raw_sub(R, two, raw_mul(R, x, y)));
  return y;
}

std::shared_ptr<ZqContext> build_context(uint64_t p, int n, int N, const FpPoly& m) {
  auto R = std::make_shared<ZqContext>();
  R->p = p;
  R->n = n;
  R->N = N;
  R->pw.assign(N + 1, 1);
  for (int k = 1; k <= N; ++k) R->pw[k] = R->pw[k - 1] * p;
  R->mod = R->pw[N];
  for (int k = 0; k <= n; ++k) R->m[k] = m[k];
  // a^n = -sum_{k<n} m_k a^k, then a^{n+1}, ... by shifting
  R->red.assign(std::max(n - 1, 0), Coords{});
  if (n >= 2) {
    Coords cur{};
    for (int k = 0; k < n; ++k) cur[k] = submod(0, m[k] % R->mod, R->mod);
    R->red[0] = cur;
    for (int s = 1; s < n - 1; ++s) {
      Coords nxt{};
      uint64_t top = cur[n - 1];
      for (int k = n - 1; k >= 1; --k) nxt[k] = cur[k - 1];
      nxt[0] = 0;
      for (int k = 0; k < n; ++k) nxt[k] = addmod(nxt[k], mulmod(top, R->red[0][k], R->mod), R->mod);
      R->red[s] = nxt;
      cur = nxt;
    }
  }
  // sigma(a): Newton lift of the root congruent to a^p
  Coords a{};
  if (n >= 2) a[1] = 1;
  Coords r = raw_pow(*R, a, p);
  if (n >= 2) {
    for (int it = 0; it < 2 * N + 2; ++it) {
      Coords f = eval_m(*R, r, false);
      bool zero = true;
      for (int k = 0; k < n; ++k) zero = zero && f[k] == 0;
      if (zero) break;
      Coords fp = eval_m(*R, r, true);
      r = raw_sub(*R, r, raw_mul(*R, f, raw_inverse(*R, fp)));
    }
  } else {
    r = a;
  }
  R->sig.assign(n, Coords{});
  Coords acc{};
  acc[0] = 1 % R->mod;
  for (int k = 0; k < n; ++k) {
    R->sig[k] = acc;
    acc = raw_mul(*R, acc, r);
  }
  return R;
}

// Contexts are interned and never released: elements keep a raw pointer to
// their context, so a ring built inside a function must outlive it.
std::shared_ptr<ZqContext> make_context(uint64_t p, int n, int N, const FpPoly& m) {
  static std::mutex mu;
  static std::map<std::tuple<uint64_t, int, int, FpPoly>, std::shared_ptr<ZqContext>> cache;
  std::lock_guard<std::mutex> lock(mu);
  FpPoly key_m(m.begin(), m.begin() + n + 1);
  auto key = std::make_tuple(p, n, N, key_m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto R = build_context(p, n, N, m);
  cache.emplace(key, R);
  return R;
}

}  // namespace

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int vp_int(int64_t x, uint64_t p) {
  if (x == 0) return 1 << 20;
  unsigned __int128 u = x < 0 ? static_cast<unsigned __int128>(-(__int128)x) : static_cast<unsigned __int128>(x);
  int v = 0;
  while (u % p == 0) {
    u /= p;
    ++v;
  }
  return v;
}

// --- ZqRing ------------------------------------------------------------------

ZqRing ZqRing::create(uint64_t p, int n, int N) {
  if (p == 2) raise(ErrorKind::EvenCharacteristic, "p = 2 is not supported");
  if (!is_prime(p)) raise(ErrorKind::InvalidArgument, "p = " + std::to_string(p) + " is not prime");
  if (n < 1 || n > kMaxDegree)
    raise(ErrorKind::InvalidArgument, "field degree must lie in [1, " + std::to_string(kMaxDegree) + "]");
  if (N < 1) raise(ErrorKind::InvalidArgument, "precision must be >= 1");
  unsigned __int128 pn = 1;
  for (int k = 0; k < N; ++k) {
    pn *= p;
    // p itself too big is a bad input; a precision the 62-bit residues cannot hold is exhaustion
    if (pn >= (static_cast<unsigned __int128>(1) << 62))
      raise(k == 0 ? ErrorKind::TooLarge : ErrorKind::PrecisionExhausted,
            "p^N must stay below 2^62 (p=" + std::to_string(p) + ", N=" + std::to_string(N) + ")");
  }
  return ZqRing(make_context(p, n, N, pick_modulus(p, n)));
}

uint64_t ZqRing::q() const {
  unsigned __int128 q = 1;
  for (int k = 0; k < degree(); ++k) {
    q *= p();
    if (q >> 63) raise(ErrorKind::TooLarge, "q exceeds 2^63");
  }
  return static_cast<uint64_t>(q);
}

std::vector<uint64_t> ZqRing::defining_polynomial() const {
  return std::vector<uint64_t>(ctx_->m.begin(), ctx_->m.begin() + ctx_->n + 1);
}

ZqRing ZqRing::with_precision(int N) const {
  if (N == precision()) return *this;
  if (N < 1) raise(ErrorKind::PrecisionExhausted, "precision dropped below 1");
  unsigned __int128 pn = 1;
  for (int k = 0; k < N; ++k) {
    pn *= p();
    if (pn >= (static_cast<unsigned __int128>(1) << 62))
      raise(ErrorKind::PrecisionExhausted, "p^N must stay below 2^62");
  }
  return ZqRing(make_context(p(), degree(), N, defining_polynomial()));
}

ZqElement ZqRing::zero() const { return ZqElement(ctx_.get(), Coords{}); }
ZqElement ZqRing::one() const { return from_int(1); }

ZqElement ZqRing::from_int(int64_t v) const {
  Coords c{};
  __int128 m = ctx_->mod;
  __int128 r = static_cast<__int128>(v) % m;
  if (r < 0) r += m;
  c[0] = static_cast<uint64_t>(r);
  return ZqElement(ctx_.get(), c);
}

ZqElement ZqRing::from_coords(const std::vector<int64_t>& v) const {
  if (static_cast<int>(v.size()) > degree())
    raise(ErrorKind::InvalidArgument, "too many coordinates for the field degree");
  Coords c{};
  __int128 m = ctx_->mod;
  for (size_t k = 0; k < v.size(); ++k) {
    __int128 r = static_cast<__int128>(v[k]) % m;
    if (r < 0) r += m;
    c[k] = static_cast<uint64_t>(r);
  }
  return ZqElement(ctx_.get(), c);
}

ZqElement ZqRing::from_residues(const Coords& v) const {
  Coords c{};
  for (int k = 0; k < degree(); ++k) c[k] = v[k] % ctx_->mod;
  return ZqElement(ctx_.get(), c);
}

ZqElement ZqRing::generator() const {
  Coords c{};
  if (degree() >= 2)
    c[1] = 1;
  else
    c[0] = 0;
  return ZqElement(ctx_.get(), c);
}

ZqElement ZqRing::frobenius_image() const {
  if (degree() == 1) return generator();
  return ZqElement(ctx_.get(), ctx_->sig[1]);
}

bool ZqRing::same_tower(const ZqRing& o) const {
  if (ctx_ == o.ctx_) return true;
  if (!ctx_ || !o.ctx_) return false;
  return ctx_->p == o.ctx_->p && ctx_->n == o.ctx_->n && ctx_->m == o.ctx_->m;
}

bool ZqRing::operator==(const ZqRing& o) const {
  if (ctx_ == o.ctx_) return true;
  return same_tower(o) && ctx_->N == o.ctx_->N;
}

// --- ZqElement ---------------------------------------------------------------

ZqRing ZqElement::ring() const { return ZqRing(ctx_->shared_from_this()); }

void ZqElement::check_same(const ZqElement& o) const {
  if (ctx_ == o.ctx_) return;
  if (!ctx_ || !o.ctx_ || ctx_->p != o.ctx_->p || ctx_->n != o.ctx_->n || ctx_->N != o.ctx_->N ||
      ctx_->m != o.ctx_->m)
    raise(ErrorKind::RingMismatch, "operands belong to different rings");
}

bool ZqElement::is_zero() const {
  for (int k = 0; k < ctx_->n; ++k)
    if (c_[k]) return false;
  return true;
}

bool ZqElement::is_one() const {
  if (c_[0] != 1 % ctx_->mod) return false;
  for (int k = 1; k < ctx_->n; ++k)
    if (c_[k]) return false;
  return true;
}

int ZqElement::valuation() const { return raw_valuation(*ctx_, c_); }

bool ZqElement::is_rational() const {
  for (int k = 1; k < ctx_->n; ++k)
    if (c_[k]) return false;
  return true;
}

ZqElement ZqElement::operator-() const {
  Coords r{};
  for (int k = 0; k < ctx_->n; ++k) r[k] = submod(0, c_[k], ctx_->mod);
  return ZqElement(ctx_, r);
}

ZqElement ZqElement::operator+(const ZqElement& o) const {
  check_same(o);
  return ZqElement(ctx_, raw_add(*ctx_, c_, o.c_));
}

ZqElement ZqElement::operator-(const ZqElement& o) const {
  check_same(o);
  return ZqElement(ctx_, raw_sub(*ctx_, c_, o.c_));
}

ZqElement ZqElement::operator*(const ZqElement& o) const {
  check_same(o);
  return ZqElement(ctx_, raw_mul(*ctx_, c_, o.c_));
}

ZqElement& ZqElement::operator+=(const ZqElement& o) { return *this = *this + o; }
ZqElement& ZqElement::operator-=(const ZqElement& o) { return *this = *this - o; }
ZqElement& ZqElement::operator*=(const ZqElement& o) { return *this = *this * o; }

ZqElement ZqElement::mul_int(int64_t k) const {
  __int128 m = ctx_->mod;
  __int128 r = static_cast<__int128>(k) % m;
  if (r < 0) r += m;
  Coords out{};
  for (int i = 0; i < ctx_->n; ++i) out[i] = mulmod(c_[i], static_cast<uint64_t>(r), ctx_->mod);
  return ZqElement(ctx_, out);
}

ZqElement ZqElement::mul_p_pow(int v) const {
  if (v >= ctx_->N) return ZqElement(ctx_, Coords{});
  Coords out{};
  for (int i = 0; i < ctx_->n; ++i) out[i] = mulmod(c_[i], ctx_->pw[v], ctx_->mod);
  return ZqElement(ctx_, out);
}

ZqElement ZqElement::inverse() const { return ZqElement(ctx_, raw_inverse(*ctx_, c_)); }

ZqElement ZqElement::pow(uint64_t e) const { return ZqElement(ctx_, raw_pow(*ctx_, c_, e)); }

ZqElement ZqElement::sigma() const {
  const int n = ctx_->n;
  if (n == 1) return *this;
  unsigned __int128 acc[kMaxDegree] = {};
  for (int k = 0; k < n; ++k) {
    if (!c_[k]) continue;
    for (int j = 0; j < n; ++j) acc[j] += static_cast<unsigned __int128>(c_[k]) * ctx_->sig[k][j];
  }
  Coords r{};
  for (int j = 0; j < n; ++j) r[j] = static_cast<uint64_t>(acc[j] % ctx_->mod);
  return ZqElement(ctx_, r);
}

ZqElement ZqElement::sigma_pow(int k) const {
  int n = ctx_->n;
  k %= n;
  if (k < 0) k += n;
  ZqElement r = *this;
  for (int i = 0; i < k; ++i) r = r.sigma();
  return r;
}

ZqElement ZqElement::shift_down(int v) const {
  if (v == 0) return *this;
  if (v > ctx_->N) raise(ErrorKind::PrecisionExhausted, "shift exceeds precision");
  Coords r{};
  uint64_t d = ctx_->pw[v];
  for (int k = 0; k < ctx_->n; ++k) {
    if (c_[k] % d) raise(ErrorKind::NotDivisible, "coordinate not divisible by p^" + std::to_string(v));
    r[k] = c_[k] / d;
  }
  return ZqElement(ctx_, r);
}

ZqElement ZqElement::exact_div_p(int k) const {
  if (k < 1) raise(ErrorKind::InvalidArgument, "exact_div_p requires k >= 1");
  return exact_div_p(k, ring().with_precision(ctx_->N - k));
}

ZqElement ZqElement::exact_div_p(int k, const ZqRing& target) const {
  if (target.precision() > ctx_->N - k)
    raise(ErrorKind::PrecisionExhausted, "target precision exceeds N - k");
  ZqElement s = shift_down(k);
  return s.reduce(target);
}

ZqElement ZqElement::reduce(const ZqRing& target) const {
  const ZqContext* T = target.ctx();
  if (T == ctx_) return *this;
  if (T->p != ctx_->p || T->n != ctx_->n || T->m != ctx_->m)
    raise(ErrorKind::RingMismatch, "reduce across different towers");
  Coords r{};
  for (int k = 0; k < ctx_->n; ++k) r[k] = c_[k] % T->mod;
  return ZqElement(T, r);
}

bool ZqElement::operator==(const ZqElement& o) const {
  check_same(o);
  for (int k = 0; k < ctx_->n; ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

int64_t ZqElement::centered() const {
  uint64_t r = c_[0];
  if (r > ctx_->mod / 2) return -static_cast<int64_t>(ctx_->mod - r);
  return static_cast<int64_t>(r);
}

std::string ZqElement::to_string() const {
  if (ctx_->n == 1) return std::to_string(c_[0]);
  std::string s = "(";
  for (int k = 0; k < ctx_->n; ++k) {
    if (k) s += ",";
    s += std::to_string(c_[k]);
  }
  return s + ")";
}

}  // namespace hypercris
