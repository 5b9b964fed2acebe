#pragma once

#include <vector>

#include "hypercris/poly.hpp"

namespace hypercris {

// Element of (W/p^N)[[t]]/t^M; always stores exactly M coefficients.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(const ZqRing& R, int M);
  TruncatedSeries(const ZqRing& R, int M, std::vector<ZqElement> c);
  static TruncatedSeries from_poly(const Poly& f, int M);
  static TruncatedSeries constant(const ZqElement& c, int M);
  static TruncatedSeries t(const ZqRing& R, int M);

  const ZqRing& ring() const { return ring_; }
  int precision() const { return M_; }
  const ZqElement& operator[](int k) const { return c_[k]; }
  ZqElement coeff(int k) const { return (k >= 0 && k < M_) ? c_[k] : ring_.zero(); }
  const std::vector<ZqElement>& coeffs() const { return c_; }
  void set_coeff(int k, const ZqElement& v) { c_.at(k) = v; }
  bool is_zero() const;
  int t_valuation() const;  // M when zero

  TruncatedSeries operator-() const;
  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
  TruncatedSeries scale(const ZqElement& s) const;
  TruncatedSeries sigma() const;

  TruncatedSeries invert_unit() const;  // NonUnitConstantTerm
  TruncatedSeries pow(int e) const;     // negative e needs a unit constant term
  TruncatedSeries derivative() const;   // loses the top coefficient (set to zero)
  TruncatedSeries shift(int k) const;   // t^k f, truncated; k < 0 drops low terms
  TruncatedSeries truncate(int M) const;
  TruncatedSeries reduce(const ZqRing& target) const;
  Poly to_poly(char var = 't') const;

  bool operator==(const TruncatedSeries& o) const;
  bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

 private:
  ZqRing ring_;
  int M_ = 0;
  std::vector<ZqElement> c_;
};

// f(g) for a polynomial or series f; g must have zero constant term.
TruncatedSeries substitute(const Poly& f, const TruncatedSeries& g);
TruncatedSeries substitute(const TruncatedSeries& f, const TruncatedSeries& g);

// The unique U with U(0) = 1 and U(t) R(t^2 U(t)) = 1 mod t^M (Newton iteration).
TruncatedSeries hensel_series_solve(const Poly& R, int M);

}  // namespace hypercris
