#pragma once

#include <string>
#include <vector>

#include "hypercris/zq.hpp"

namespace hypercris {

// Dense row-major matrix over W/p^N.
class ZqMatrix {
 public:
  ZqMatrix() = default;
  ZqMatrix(const ZqRing& R, int rows, int cols);
  static ZqMatrix identity(const ZqRing& R, int n);
  static ZqMatrix from_ints(const ZqRing& R, int rows, int cols, const std::vector<int64_t>& v);

  const ZqRing& ring() const { return ring_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  ZqElement& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const ZqElement& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  ZqMatrix operator-() const;
  ZqMatrix operator+(const ZqMatrix& o) const;
  ZqMatrix operator-(const ZqMatrix& o) const;
  ZqMatrix operator*(const ZqMatrix& o) const;
  ZqMatrix& operator+=(const ZqMatrix& o) { return *this = *this + o; }
  ZqMatrix& operator-=(const ZqMatrix& o) { return *this = *this - o; }
  ZqMatrix scale(const ZqElement& s) const;
  ZqMatrix sigma() const;
  ZqMatrix sigma_pow(int k) const;
  ZqMatrix transpose() const;
  ZqMatrix block(int r0, int c0, int nr, int nc) const;
  void set_block(int r0, int c0, const ZqMatrix& b);
  ZqMatrix reduce(const ZqRing& target) const;
  ZqMatrix shift_down(int v) const;
  ZqMatrix mul_p_pow(int v) const;

  bool is_zero() const;
  int valuation() const;  // min over entries, N for zero
  bool operator==(const ZqMatrix& o) const;
  bool operator!=(const ZqMatrix& o) const { return !(*this == o); }

  // det(X I - M) = X^n + c[1] X^{n-1} + ... + c[n]; returned as c[0..n], c[0] = 1.
  // Berkowitz, division free.
  std::vector<ZqElement> charpoly() const;
  ZqElement det() const;
  bool invertible_mod_p() const;
  ZqMatrix inverse() const;  // NotInvertibleModP

  std::string to_string() const;

 private:
  ZqRing ring_;
  int r_ = 0, c_ = 0;
  std::vector<ZqElement> a_;
};

}  // namespace hypercris
