#include "hypercris/laurent.hpp"

#include <algorithm>

namespace hypercris {

LaurentPoly::LaurentPoly(const ZqRing& R, int low, std::vector<ZqElement> c) : ring_(R), low_(low), c_(std::move(c)) {
  normalize();
}

LaurentPoly LaurentPoly::from_poly(const Poly& f, int shift) { return LaurentPoly(f.ring(), shift, f.coeffs()); }

LaurentPoly LaurentPoly::monomial(const ZqElement& c, int k) { return LaurentPoly(c.ring(), k, {c}); }

void LaurentPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  size_t z = 0;
  while (z < c_.size() && c_[z].is_zero()) ++z;
  if (z) {
    c_.erase(c_.begin(), c_.begin() + z);
    low_ += static_cast<int>(z);
  }
  if (c_.empty()) low_ = 0;
}

ZqElement LaurentPoly::coeff(int k) const {
  int i = k - low_;
  if (i < 0 || i >= static_cast<int>(c_.size())) return ring_.zero();
  return c_[i];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  int lo = std::min(low_, o.low_), hi = std::max(max_degree(), o.max_degree());
  std::vector<ZqElement> v(hi - lo + 1, ring_.zero());
  for (size_t k = 0; k < c_.size(); ++k) v[low_ - lo + k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k) v[o.low_ - lo + k] += o.c_[k];
  return LaurentPoly(ring_, lo, std::move(v));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return LaurentPoly(ring_);
  Poly a(ring_, c_), b(ring_, o.c_);
  return LaurentPoly(ring_, low_ + o.low_, (a * b).coeffs());
}

LaurentPoly LaurentPoly::scale(const ZqElement& s) const {
  LaurentPoly r = *this;
  for (auto& c : r.c_) c *= s;
  r.normalize();
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  if (is_zero()) return *this;
  std::vector<ZqElement> v(c_.size(), ring_.zero());
  for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k].mul_int(low_ + static_cast<int>(k));
  return LaurentPoly(ring_, low_ - 1, std::move(v));
}

LaurentPoly LaurentPoly::shift(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
  if (is_zero()) return *this;
  std::vector<ZqElement> v(c_.rbegin(), c_.rend());
  return LaurentPoly(ring_, -max_degree(), std::move(v));
}

LaurentPoly LaurentPoly::part_at_least(int k) const {
  if (is_zero() || max_degree() < k) return LaurentPoly(ring_);
  if (low_ >= k) return *this;
  return LaurentPoly(ring_, k, std::vector<ZqElement>(c_.begin() + (k - low_), c_.end()));
}

LaurentPoly LaurentPoly::part_below(int k) const {
  if (is_zero() || low_ >= k) return LaurentPoly(ring_);
  if (max_degree() < k) return *this;
  return LaurentPoly(ring_, low_, std::vector<ZqElement>(c_.begin(), c_.begin() + (k - low_)));
}

Poly LaurentPoly::to_poly() const {
  if (is_zero()) return Poly(ring_);
  if (low_ < 0) raise(ErrorKind::InvalidArgument, "Laurent polynomial has negative exponents");
  std::vector<ZqElement> v(low_, ring_.zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(ring_, std::move(v));
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  if (low_ != o.low_ || c_.size() != o.c_.size()) return false;
  for (size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != o.c_[k]) return false;
  return true;
}

namespace {

// b = x^s b1 with b1(0) != 0
std::pair<int, Poly> split_x_power(const Poly& b) {
  int s = 0;
  while (s <= b.degree() && b.coeff(s).is_zero()) ++s;
  return {s, b.shift(-s)};
}

}  // namespace

LaurentPoly exact_quotient(const LaurentPoly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorKind::InvalidArgument, "division by the zero polynomial");
  if (a.is_zero()) return a;
  auto [s, b1] = split_x_power(b);
  LaurentPoly an = a.shift(-a.min_degree());
  Poly q = exact_quotient(an.to_poly(), b1);
  return LaurentPoly::from_poly(q, a.min_degree() - s);
}

bool divides(const Poly& b, const LaurentPoly& a) {
  if (a.is_zero()) return true;
  auto [s, b1] = split_x_power(b);
  (void)s;
  LaurentPoly an = a.shift(-a.min_degree());
  return (an.to_poly() % b1).is_zero();
}

}  // namespace hypercris
