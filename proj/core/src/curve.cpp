#include "hypercris/curve.hpp"

#include <cmath>

namespace hypercris {

Poly HyperellipticCurve::P(const ZqRing& R) const {
  std::vector<ZqElement> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(R.from_coords(c));
  return Poly(R, std::move(v));
}

HyperellipticCurve validate_curve(uint64_t p, int n, const std::vector<std::vector<int64_t>>& coeffs) {
  if (p == 2) raise(ErrorKind::EvenCharacteristic, "characteristic 2 is excluded");
  HyperellipticCurve X;
  X.p = p;
  X.n = n;
  X.field = ZqRing::create(p, n, 1);
  std::vector<std::vector<int64_t>> c = coeffs;
  auto is_zero_coord = [](const std::vector<int64_t>& v) {
    for (auto x : v)
      if (x) return false;
    return true;
  };
  while (!c.empty() && is_zero_coord(c.back())) c.pop_back();
  for (const auto& v : c)
    if (static_cast<int>(v.size()) > n) raise(ErrorKind::InvalidArgument, "coefficient has more than n coordinates");
  int d = static_cast<int>(c.size()) - 1;
  if (d < 0) raise(ErrorKind::InvalidArgument, "zero polynomial");
  if (d % 2 == 0) raise(ErrorKind::EvenDegree, "degree " + std::to_string(d) + " is even");
  if (d < 3) raise(ErrorKind::InvalidArgument, "degree must be at least 3");
  const auto& lead = c.back();
  if (lead.empty() || lead[0] != 1) raise(ErrorKind::NotMonic, "leading coefficient is not 1");
  for (size_t k = 1; k < lead.size(); ++k)
    if (lead[k]) raise(ErrorKind::NotMonic, "leading coefficient is not 1");
  X.coeffs = c;
  X.d = d;
  X.g = (d - 1) / 2;
  X.P_bar = X.P(X.field);
  Xgcd e = xgcd(X.P_bar, X.P_bar.derivative());
  if (e.d.degree() != 0) raise(ErrorKind::NotSeparableModP, "gcd(P, P') is nontrivial modulo p");
  return X;
}

HyperellipticCurve validate_curve(uint64_t p, int n, const std::vector<int64_t>& coeffs) {
  std::vector<std::vector<int64_t>> c;
  for (auto x : coeffs) c.push_back({x});
  return validate_curve(p, n, c);
}

namespace {

Coords decode(uint64_t idx, uint64_t p, int k) {
  Coords c{};
  for (int i = 0; i < k; ++i) {
    c[i] = idx % p;
    idx /= p;
  }
  return c;
}

uint64_t encode(const Coords& c, uint64_t p, int k) {
  uint64_t idx = 0;
  for (int i = k - 1; i >= 0; --i) idx = idx * p + c[i];
  return idx;
}

}  // namespace

uint64_t count_points_naive(const HyperellipticCurve& X, int m) {
  if (m < 1) raise(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const uint64_t p = X.p;
  const int k = X.n * m;
  unsigned __int128 Q = 1;
  for (int i = 0; i < k; ++i) {
    Q *= p;
    if (Q > kNaiveCountLimit) raise(ErrorKind::TooLarge, "q^m exceeds the enumeration threshold 10^6");
  }
  const uint64_t size = static_cast<uint64_t>(Q);
  if (k > kMaxDegree) raise(ErrorKind::TooLarge, "extension degree beyond supported field degree");
  ZqRing F = ZqRing::create(p, k, 1);
  // embed F_q: image of its generator is a root of its defining polynomial
  std::vector<ZqElement> coeff_images;
  {
    ZqElement root = F.zero();
    if (X.n > 1) {
      auto mq = X.field.defining_polynomial();
      bool found = false;
      for (uint64_t idx = 0; idx < size && !found; ++idx) {
        ZqElement z = F.from_residues(decode(idx, p, k));
        ZqElement acc = F.zero();
        for (int i = X.n; i >= 0; --i) acc = acc * z + F.from_int(static_cast<int64_t>(mq[i]));
        if (acc.is_zero()) {
          root = z;
          found = true;
        }
      }
      if (!found) raise(ErrorKind::InvalidArgument, "failed to embed the base field");
    }
    for (const auto& c : X.P_bar.coeffs()) {
      ZqElement img = F.zero(), pw = F.one();
      for (int i = 0; i < X.n; ++i) {
        img += pw.mul_int(static_cast<int64_t>(c.coord(i)));
        pw *= root;
      }
      coeff_images.push_back(img);
    }
  }
  std::vector<uint8_t> is_square(size, 0);
  for (uint64_t idx = 0; idx < size; ++idx) {
    ZqElement y = F.from_residues(decode(idx, p, k));
    is_square[encode((y * y).coords(), p, k)] = 1;
  }
  uint64_t count = 1;
  for (uint64_t idx = 0; idx < size; ++idx) {
    ZqElement x = F.from_residues(decode(idx, p, k));
    ZqElement v = F.zero();
    for (int i = static_cast<int>(coeff_images.size()) - 1; i >= 0; --i) v = v * x + coeff_images[i];
    if (v.is_zero())
      count += 1;
    else if (is_square[encode(v.coords(), p, k)])
      count += 2;
  }
  return count;
}

std::vector<int64_t> lpolynomial_oracle(const std::vector<uint64_t>& counts, uint64_t q) {
  const int g = static_cast<int>(counts.size());
  if (g < 1) raise(ErrorKind::InvalidArgument, "need at least one count");
  using i128 = __int128;
  std::vector<i128> s(g + 1), e(g + 1);
  i128 qk = 1;
  for (int k = 1; k <= g; ++k) {
    qk *= q;
    s[k] = qk + 1 - static_cast<i128>(counts[k - 1]);
  }
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    i128 acc = 0;
    for (int i = 1; i <= k; ++i) acc += ((i % 2) ? 1 : -1) * e[k - i] * s[i];
    if (acc % k != 0) raise(ErrorKind::InconsistentCounts, "Newton identity has a non-integral step");
    e[k] = acc / k;
  }
  std::vector<int64_t> L(2 * g + 1);
  for (int k = 0; k <= g; ++k) {
    i128 c = (k % 2) ? -e[k] : e[k];
    // Weil bound |c_k| <= binom(2g, k) q^{k/2}
    long double binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (2 * g - i) / (i + 1);
    long double bound = binom * std::pow(static_cast<long double>(q), k / 2.0L);
    if (static_cast<long double>(c < 0 ? -c : c) > bound + 0.5L)
      raise(ErrorKind::InconsistentCounts, "coefficient violates the Weil bound");
    L[k] = static_cast<int64_t>(c);
  }
  for (int k = 0; k < g; ++k) {
    i128 c = L[k];
    for (int i = 0; i < g - k; ++i) c *= q;
    if (c > INT64_MAX || c < INT64_MIN) raise(ErrorKind::TooLarge, "L-polynomial coefficient overflows int64");
    L[2 * g - k] = static_cast<int64_t>(c);
  }
  return L;
}

int64_t count_from_lpolynomial(const std::vector<int64_t>& L, uint64_t q, int m) {
  // power sums of inverse roots from log L: s_k via Newton on e_k = (-1)^k c_k
  const int deg = static_cast<int>(L.size()) - 1;
  using i128 = __int128;
  std::vector<i128> e(deg + 1), s(m + 1);
  for (int k = 0; k <= deg; ++k) e[k] = (k % 2) ? -L[k] : L[k];
  for (int k = 1; k <= m; ++k) {
    // s_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k
    i128 acc = 0;
    for (int i = 1; i < k; ++i)
      if (i <= deg) acc += ((i % 2) ? 1 : -1) * e[i] * s[k - i];
    if (k <= deg) acc += ((k % 2) ? 1 : -1) * static_cast<i128>(k) * e[k];
    s[k] = acc;
  }
  i128 qm = 1;
  for (int k = 0; k < m; ++k) qm *= q;
  return static_cast<int64_t>(qm + 1 - s[m]);
}

ZqMatrix hasse_witt_classical(const HyperellipticCurve& X) {
  const int g = X.g;
  const int p = static_cast<int>(X.p);
  Poly h = X.P_bar.pow(static_cast<unsigned>((p - 1) / 2));
  ZqMatrix H(X.field, g, g);
  for (int m = 1; m <= g; ++m)
    for (int j = 1; j <= g; ++j) H(m - 1, j - 1) = h.coeff(j * p - m);
  return H;
}

HyperellipticCurve curve_family_member(uint64_t p, int g) {
  const int d = 2 * g + 1;
  for (int64_t b = 1; b < static_cast<int64_t>(p); ++b)
    for (int64_t a = 1; a < static_cast<int64_t>(p); ++a) {
      std::vector<int64_t> c(d + 1, 0);
      c[0] = b;
      c[1] = a;
      c[d] = 1;
      try {
        return validate_curve(p, 1, c);
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NotSeparableModP) throw;
      }
    }
  raise(ErrorKind::InvalidArgument, "no separable family member found");
}

}  // namespace hypercris
