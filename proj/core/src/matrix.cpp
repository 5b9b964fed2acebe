#include "hypercris/matrix.hpp"

#include <algorithm>

namespace hypercris {

ZqMatrix::ZqMatrix(const ZqRing& R, int rows, int cols)
    : ring_(R), r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, R.zero()) {}

ZqMatrix ZqMatrix::identity(const ZqRing& R, int n) {
  ZqMatrix m(R, n, n);
  for (int i = 0; i < n; ++i) m(i, i) = R.one();
  return m;
}

ZqMatrix ZqMatrix::from_ints(const ZqRing& R, int rows, int cols, const std::vector<int64_t>& v) {
  if (static_cast<int>(v.size()) != rows * cols) raise(ErrorKind::InvalidArgument, "matrix size mismatch");
  ZqMatrix m(R, rows, cols);
  for (size_t k = 0; k < v.size(); ++k) m.a_[k] = R.from_int(v[k]);
  return m;
}

ZqMatrix ZqMatrix::operator-() const {
  ZqMatrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

ZqMatrix ZqMatrix::operator+(const ZqMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) raise(ErrorKind::InvalidArgument, "matrix shapes differ");
  ZqMatrix m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  return m;
}

ZqMatrix ZqMatrix::operator-(const ZqMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) raise(ErrorKind::InvalidArgument, "matrix shapes differ");
  ZqMatrix m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  return m;
}

ZqMatrix ZqMatrix::operator*(const ZqMatrix& o) const {
  if (c_ != o.r_) raise(ErrorKind::InvalidArgument, "matrix shapes do not compose");
  ZqMatrix m(ring_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const ZqElement& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) m(i, j) += x * o(k, j);
    }
  return m;
}

ZqMatrix ZqMatrix::scale(const ZqElement& s) const {
  ZqMatrix m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

ZqMatrix ZqMatrix::sigma() const {
  ZqMatrix m = *this;
  for (auto& x : m.a_) x = x.sigma();
  return m;
}

ZqMatrix ZqMatrix::sigma_pow(int k) const {
  ZqMatrix m = *this;
  for (auto& x : m.a_) x = x.sigma_pow(k);
  return m;
}

ZqMatrix ZqMatrix::transpose() const {
  ZqMatrix m(ring_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ZqMatrix ZqMatrix::block(int r0, int c0, int nr, int nc) const {
  ZqMatrix m(ring_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void ZqMatrix::set_block(int r0, int c0, const ZqMatrix& b) {
  for (int i = 0; i < b.r_; ++i)
    for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

ZqMatrix ZqMatrix::reduce(const ZqRing& target) const {
  ZqMatrix m(target, r_, c_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].reduce(target);
  return m;
}

ZqMatrix ZqMatrix::shift_down(int v) const {
  ZqMatrix m = *this;
  for (auto& x : m.a_) x = x.shift_down(v);
  return m;
}

ZqMatrix ZqMatrix::mul_p_pow(int v) const {
  ZqMatrix m = *this;
  for (auto& x : m.a_) x = x.mul_p_pow(v);
  return m;
}

bool ZqMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const ZqElement& x) { return x.is_zero(); });
}

int ZqMatrix::valuation() const {
  int v = ring_.precision();
  for (const auto& x : a_) v = std::min(v, x.valuation());
  return v;
}

bool ZqMatrix::operator==(const ZqMatrix& o) const {
  if (r_ != o.r_ || c_ != o.c_) return false;
  for (size_t k = 0; k < a_.size(); ++k)
    if (a_[k] != o.a_[k]) return false;
  return true;
}

std::vector<ZqElement> ZqMatrix::charpoly() const {
  if (r_ != c_) raise(ErrorKind::InvalidArgument, "charpoly of a non-square matrix");
  const int N = r_;
  const ZqRing& R = ring_;
  if (N == 0) return {R.one()};
  // Berkowitz: poly_1 = (1, -a_00); poly_k = T_k poly_{k-1} where T_k is the
  // (k+1) x k Toeplitz matrix built from 1, -a_kk, -R A^i C.
  std::vector<ZqElement> poly = {R.one(), -(*this)(0, 0)};
  for (int n = 2; n <= N; ++n) {
    int k = n - 1;
    // R = -A[k, :k], C = A[:k, k], A_k = A[:k, :k], a = -A[k, k]
    std::vector<ZqElement> items;
    items.push_back(R.one());
    items.push_back(-(*this)(k, k));
    std::vector<ZqElement> vec(k);
    for (int i = 0; i < k; ++i) vec[i] = (*this)(i, k);
    for (int it = 0; it < n - 1; ++it) {
      ZqElement s = R.zero();
      for (int i = 0; i < k; ++i) s -= (*this)(k, i) * vec[i];
      items.push_back(s);
      if (it + 1 < n - 1) {
        std::vector<ZqElement> nv(k, R.zero());
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) nv[i] += (*this)(i, j) * vec[j];
        vec = std::move(nv);
      }
    }
    // new[i] = sum_{j <= i} items[i - j] * poly[j]
    std::vector<ZqElement> next(n + 1, R.zero());
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < n && j <= i; ++j) next[i] += items[i - j] * poly[j];
    poly = std::move(next);
  }
  return poly;
}

ZqElement ZqMatrix::det() const {
  auto c = charpoly();
  return (r_ % 2) ? -c[r_] : c[r_];
}

bool ZqMatrix::invertible_mod_p() const { return det().is_unit(); }

ZqMatrix ZqMatrix::inverse() const {
  if (r_ != c_) raise(ErrorKind::InvalidArgument, "inverse of a non-square matrix");
  const int n = r_;
  ZqMatrix a = *this, inv = identity(ring_, n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col).is_unit()) {
        piv = i;
        break;
      }
    if (piv < 0) raise(ErrorKind::NotInvertibleModP, "matrix is not invertible modulo p");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    ZqElement u = a(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= u;
      inv(col, j) *= u;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      ZqElement f = a(i, col);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

std::string ZqMatrix::to_string() const {
  std::string s = "[";
  for (int i = 0; i < r_; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < c_; ++j) s += (j ? " " : "") + (*this)(i, j).to_string();
  }
  return s + "]";
}

}  // namespace hypercris
