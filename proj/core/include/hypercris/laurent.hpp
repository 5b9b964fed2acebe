#pragma once

#include <vector>

#include "hypercris/poly.hpp"

namespace hypercris {

// Finite Laurent polynomial sum_k c_k x^k, k in [low, low + size).
// Canonical: no zero coefficient at either end; zero has empty storage.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const ZqRing& R) : ring_(R) {}
  LaurentPoly(const ZqRing& R, int low, std::vector<ZqElement> c);
  static LaurentPoly from_poly(const Poly& f, int shift = 0);
  static LaurentPoly monomial(const ZqElement& c, int k);

  const ZqRing& ring() const { return ring_; }
  bool is_zero() const { return c_.empty(); }
  int min_degree() const { return low_; }  // meaningful only when nonzero
  int max_degree() const { return low_ + static_cast<int>(c_.size()) - 1; }
  ZqElement coeff(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly scale(const ZqElement& s) const;

  LaurentPoly derivative() const;
  LaurentPoly shift(int k) const;            // x^k f
  LaurentPoly substitute_inverse() const;    // f(1/x)
  LaurentPoly part_at_least(int k) const;    // terms of degree >= k
  LaurentPoly part_below(int k) const;       // terms of degree < k
  Poly to_poly() const;                      // requires min_degree >= 0

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  void normalize();
  ZqRing ring_;
  int low_ = 0;
  std::vector<ZqElement> c_;
};

// a / b in the Laurent ring; ExactQuotientFailure if b does not divide a there.
LaurentPoly exact_quotient(const LaurentPoly& a, const Poly& b);
// true iff b divides a in the Laurent ring
bool divides(const Poly& b, const LaurentPoly& a);

}  // namespace hypercris
