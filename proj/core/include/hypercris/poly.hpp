#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypercris/zq.hpp"

namespace hypercris {

// Dense univariate polynomial over W/p^N (or over F_q when N = 1), canonical:
// no trailing zero coefficients, the zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const ZqRing& R, char var = 'x') : ring_(R), var_(var) {}
  Poly(const ZqRing& R, std::vector<ZqElement> c, char var = 'x');

  static Poly from_ints(const ZqRing& R, const std::vector<int64_t>& c, char var = 'x');
  static Poly monomial(const ZqElement& c, int k, char var = 'x');
  static Poly constant(const ZqElement& c, char var = 'x') { return monomial(c, 0, var); }
  static Poly x(const ZqRing& R, char var = 'x');

  const ZqRing& ring() const { return ring_; }
  char var() const { return var_; }
  Poly with_var(char v) const {
    Poly r = *this;
    r.var_ = v;
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  ZqElement coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : ring_.zero(); }
  const std::vector<ZqElement>& coeffs() const { return c_; }
  ZqElement leading() const { return c_.empty() ? ring_.zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  void set_coeff(int k, const ZqElement& v);

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(const ZqElement& s) const;
  Poly mul_int(int64_t k) const;

  Poly derivative() const;
  Poly sigma() const;
  Poly sigma_pow(int k) const;
  Poly compose_xpow(int e) const;  // f(x^e)
  Poly shift(int k) const;         // x^k f, truncating negative exponents
  Poly truncate(int len) const;    // f mod x^len
  Poly reverse(int len) const;     // x^{len-1} f(1/x), requires deg < len
  Poly pow(unsigned e) const;
  Poly compose(const Poly& g) const;
  ZqElement eval(const ZqElement& x) const;

  Poly reduce(const ZqRing& target) const;
  Poly shift_down(int v) const;
  Poly exact_div_p(int k) const;
  int valuation() const;  // min p-adic valuation of the coefficients; N for zero

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  void normalize();
  ZqRing ring_;
  std::vector<ZqElement> c_;
  char var_ = 'x';
};

Poly mul_truncated(const Poly& a, const Poly& b, int len);
Poly compose_truncated(const Poly& f, const Poly& g, int len);

// divisor must have a unit leading coefficient
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly exact_quotient(const Poly& a, const Poly& b);  // ExactQuotientFailure on a nonzero remainder

struct Xgcd {
  Poly d, s, t;
};
// Over the residue field (precision 1): d = gcd made monic, s f + t g = d.
Xgcd xgcd(const Poly& f, const Poly& g);
// Inverse of a modulo m over the residue field.
Poly invert_mod(const Poly& a, const Poly& m);

}  // namespace hypercris
