#pragma once

// Truncated Witt vectors W(F_{p^n})/p^N, modelled as (Z/p^N)[a]/m(a) with m a
// monic lift of an irreducible polynomial over F_p.

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hypercris/error.hpp"

namespace hypercris {

constexpr int kMaxDegree = 8;
using Coords = std::array<uint64_t, kMaxDegree>;

class ZqElement;

namespace detail {

struct ZqContext : std::enable_shared_from_this<ZqContext> {
  uint64_t p = 0;
  int n = 0;
  int N = 0;
  uint64_t mod = 0;                         // p^N
  std::vector<uint64_t> pw;                 // pw[k] = p^k, k = 0..N
  std::array<uint64_t, kMaxDegree + 1> m{}; // monic defining polynomial, coefficients in [0, p)
  std::vector<Coords> red;                  // red[k] = a^{n+k} on the power basis, k = 0..n-2
  std::vector<Coords> sig;                  // sig[k] = sigma(a^k), k = 0..n-1
};

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
  uint64_t s = a + b;
  return s >= m ? s - m : s;
}
inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + m - b; }

}  // namespace detail

class ZqRing {
 public:
  ZqRing() = default;

  // Deterministic choice of modulus: the first monic irreducible polynomial of
  // degree n over F_p when coefficient vectors are enumerated as c0 + c1 p + ...
  static ZqRing create(uint64_t p, int n, int N);

  bool valid() const { return ctx_ != nullptr; }
  uint64_t p() const { return ctx_->p; }
  int degree() const { return ctx_->n; }
  int precision() const { return ctx_->N; }
  uint64_t modulus() const { return ctx_->mod; }
  uint64_t p_power(int k) const { return ctx_->pw.at(k); }
  // q = p^n as an exact integer (throws TooLarge past 2^63)
  uint64_t q() const;
  std::vector<uint64_t> defining_polynomial() const;

  ZqRing with_precision(int N) const;
  ZqRing residue_field() const { return with_precision(1); }

  ZqElement zero() const;
  ZqElement one() const;
  ZqElement from_int(int64_t v) const;
  ZqElement from_coords(const std::vector<int64_t>& c) const;
  ZqElement from_residues(const Coords& c) const;
  ZqElement generator() const;
  ZqElement frobenius_image() const;

  // Structural equality: same p, n, N and modulus.
  bool operator==(const ZqRing& o) const;
  bool operator!=(const ZqRing& o) const { return !(*this == o); }
  bool same_tower(const ZqRing& o) const;  // equal up to precision

  const detail::ZqContext* ctx() const { return ctx_.get(); }
  explicit ZqRing(std::shared_ptr<const detail::ZqContext> c) : ctx_(std::move(c)) {}

 private:
  std::shared_ptr<const detail::ZqContext> ctx_;
};

class ZqElement {
 public:
  ZqElement() = default;
  ZqElement(const detail::ZqContext* ctx, const Coords& c) : ctx_(ctx), c_(c) {}

  ZqRing ring() const;
  const detail::ZqContext* ctx() const { return ctx_; }
  const Coords& coords() const { return c_; }
  uint64_t coord(int k) const { return c_[k]; }
  uint64_t residue() const { return c_[0]; }  // n = 1 convenience

  bool is_zero() const;
  bool is_one() const;
  bool is_unit() const { return valuation() == 0; }
  // min over coordinates; returns N for zero
  int valuation() const;
  bool is_rational() const;  // only the constant coordinate nonzero

  ZqElement operator-() const;
  ZqElement operator+(const ZqElement& o) const;
  ZqElement operator-(const ZqElement& o) const;
  ZqElement operator*(const ZqElement& o) const;
  ZqElement& operator+=(const ZqElement& o);
  ZqElement& operator-=(const ZqElement& o);
  ZqElement& operator*=(const ZqElement& o);
  ZqElement mul_int(int64_t k) const;
  ZqElement mul_p_pow(int v) const;

  ZqElement inverse() const;  // NotAUnit
  ZqElement pow(uint64_t e) const;
  ZqElement sigma() const;
  ZqElement sigma_pow(int k) const;

  // Divide every coordinate by p^v inside the same ring; the top v digits of
  // the result are zero and carry no information.
  ZqElement shift_down(int v) const;
  // y with p^k y = x, living in the ring of precision N - k.
  ZqElement exact_div_p(int k) const;
  ZqElement exact_div_p(int k, const ZqRing& target) const;
  // Canonical representative in another ring of the same tower.
  ZqElement reduce(const ZqRing& target) const;

  bool operator==(const ZqElement& o) const;
  bool operator!=(const ZqElement& o) const { return !(*this == o); }

  // n = 1 only: representative in (-p^N/2, p^N/2]
  int64_t centered() const;
  std::string to_string() const;

 private:
  void check_same(const ZqElement& o) const;
  const detail::ZqContext* ctx_ = nullptr;
  Coords c_{};
};

// Number of base-p digits of 'x' divisible out, i.e. v_p(x) for x != 0.
int vp_int(int64_t x, uint64_t p);
bool is_prime(uint64_t p);

}  // namespace hypercris
