#include "doctest.h"
#include "hypercris/laurent.hpp"
#include "hypercris/matrix.hpp"
#include "hypercris/poly.hpp"
#include "hypercris/series.hpp"
#include "oracle.hpp"

using namespace hypercris;

TEST_CASE("ring arithmetic on small residues") {
  ZqRing R = ZqRing::create(5, 1, 3);
  CHECK((R.from_int(3) + R.from_int(4)).residue() == 7);
  CHECK((R.from_int(2) * R.from_int(3)).residue() == 6);
  CHECK(R.from_int(-1).residue() == 124);

  ZqRing F9 = ZqRing::create(3, 2, 4);
  CHECK(F9.defining_polynomial() == std::vector<uint64_t>{1, 0, 1});
  ZqElement a = F9.generator();
  ZqElement aa = a * a;
  CHECK(aa == F9.from_int(-1));
  CHECK(aa.coord(0) == F9.modulus() - 1);
}

TEST_CASE("ring mismatch is reported") {
  ZqRing R = ZqRing::create(5, 1, 3);
  ZqRing S = ZqRing::create(5, 1, 4);
  CHECK_THROWS_AS(R.one() + S.one(), Error);
  ZqRing R2 = ZqRing::create(5, 1, 3);
  CHECK((R.one() + R2.one()).residue() == 2);
}

TEST_CASE("invert") {
  ZqRing R = ZqRing::create(5, 1, 3);
  CHECK(R.one().inverse().residue() == 1);
  CHECK(R.from_int(3).inverse().residue() == 42);
  try {
    (void)R.from_int(5).inverse();
    FAIL("expected NotAUnit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAUnit);
  }
}

TEST_CASE("invert: random units at full precision") {
  std::mt19937_64 rng(11);
  for (auto [p, n, N] : {std::tuple{3, 1, 20}, {5, 2, 9}, {7, 3, 6}, {3, 4, 12}, {11, 1, 10}}) {
    ZqRing R = ZqRing::create(p, n, N);
    for (int it = 0; it < 50; ++it) {
      ZqElement x = oracle::random_unit(R, rng);
      CHECK((x * x.inverse()).is_one());
    }
  }
}

TEST_CASE("frobenius sigma") {
  ZqRing R1 = ZqRing::create(7, 1, 5);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 10; ++it) {
    auto x = oracle::random_element(R1, rng);
    CHECK(x.sigma() == x);
  }
  ZqRing F9 = ZqRing::create(3, 2, 6);
  CHECK(F9.frobenius_image() == -F9.generator());
  CHECK(F9.generator().sigma() == -F9.generator());
}

TEST_CASE("frobenius sigma: ring endomorphism of order n lifting x^p") {
  std::mt19937_64 rng(5);
  for (auto [p, n, N] : {std::tuple{3, 2, 8}, {5, 3, 6}, {3, 5, 7}, {7, 2, 5}}) {
    ZqRing R = ZqRing::create(p, n, N);
    ZqRing F = R.residue_field();
    ZqElement s = R.frobenius_image();
    // root of the modulus
    auto m = R.defining_polynomial();
    ZqElement acc = R.zero();
    for (int k = n; k >= 0; --k) acc = acc * s + R.from_int(static_cast<int64_t>(m[k]));
    CHECK(acc.is_zero());
    for (int it = 0; it < 20; ++it) {
      auto x = oracle::random_element(R, rng), y = oracle::random_element(R, rng);
      CHECK((x + y).sigma() == x.sigma() + y.sigma());
      CHECK((x * y).sigma() == x.sigma() * y.sigma());
      CHECK(x.sigma_pow(n) == x);
      ZqElement xb = x.reduce(F);
      CHECK(x.sigma().reduce(F) == xb.pow(static_cast<uint64_t>(p)));
    }
  }
}

TEST_CASE("exact_div_p") {
  ZqRing R = ZqRing::create(5, 1, 3);
  ZqElement y = R.from_int(10).exact_div_p(1);
  CHECK(y.ring().precision() == 2);
  CHECK(y.residue() == 2);
  try {
    (void)R.from_int(3).exact_div_p(1);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  std::mt19937_64 rng(8);
  ZqRing S = ZqRing::create(3, 3, 9);
  ZqRing S8 = S.with_precision(8);
  for (int it = 0; it < 30; ++it) {
    auto x = oracle::random_element(S, rng);
    CHECK((x.mul_int(3)).exact_div_p(1, S8) == x.reduce(S8));
  }
}

TEST_CASE("polynomial operations") {
  ZqRing R = ZqRing::create(3, 1, 4);
  Poly f = Poly::from_ints(R, {0, -1, 0, 1});
  CHECK(f.derivative() == Poly::from_ints(R, {-1, 0, 3}));
  auto [q, r] = divrem(f, Poly::x(R));
  CHECK(q == Poly::from_ints(R, {-1, 0, 1}));
  CHECK(r.is_zero());
  ZqRing F3 = R.residue_field();
  CHECK(f.reduce(F3).eval(F3.from_int(2)).is_zero());
  CHECK(Poly(R).degree() == -1);
  CHECK(Poly::from_ints(R, {1, 2, 0, 0}).degree() == 1);
  // truncated composition: (1 + z)^2 at z = x + x^2, mod x^3
  Poly g = Poly::from_ints(R, {1, 2, 1});
  Poly h = compose_truncated(g, Poly::from_ints(R, {0, 1, 1}), 3);
  CHECK(h == Poly::from_ints(R, {1, 2, 3}));
}

TEST_CASE("xgcd examples") {
  ZqRing F3 = ZqRing::create(3, 1, 1);
  Poly f = Poly::from_ints(F3, {0, -1, 0, 1});
  Xgcd z = xgcd(f, Poly(F3));
  CHECK(z.d == f);
  CHECK(z.t.is_zero());
  Xgcd e = xgcd(f, f.derivative());
  CHECK(e.d == Poly::from_ints(F3, {1}));
  CHECK(e.s.is_zero());
  CHECK(e.t == Poly::from_ints(F3, {-1}));

  ZqRing F5 = ZqRing::create(5, 1, 1);
  Poly P = Poly::from_ints(F5, {1, 1, 0, 1});
  Xgcd b = xgcd(P, P.derivative());
  CHECK(b.d.degree() == 0);
  CHECK(b.s * P + b.t * P.derivative() == b.d);
}

TEST_CASE("xgcd: Bezout identity and divisibility on random inputs") {
  std::mt19937_64 rng(17);
  for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {3, 2}, {7, 3}}) {
    ZqRing F = ZqRing::create(p, n, 1);
    std::uniform_int_distribution<int> deg(0, 7);
    for (int it = 0; it < 40; ++it) {
      Poly common(F);
      std::vector<ZqElement> cc;
      for (int k = 0, dc = deg(rng) % 3; k <= dc; ++k) cc.push_back(oracle::random_element(F, rng));
      cc.push_back(F.one());
      common = Poly(F, cc);
      std::vector<ZqElement> a, b;
      for (int k = 0, da = deg(rng); k <= da; ++k) a.push_back(oracle::random_element(F, rng));
      for (int k = 0, db = deg(rng); k <= db; ++k) b.push_back(oracle::random_element(F, rng));
      Poly f = Poly(F, a) * common, g = Poly(F, b) * common;
      if (f.is_zero() && g.is_zero()) continue;
      Xgcd e = xgcd(f, g);
      CHECK(e.s * f + e.t * g == e.d);
      CHECK(e.d.is_monic());
      CHECK((f % e.d).is_zero());
      CHECK((g % e.d).is_zero());
      CHECK((e.d % common).is_zero());
    }
  }
}

TEST_CASE("Laurent polynomials") {
  ZqRing F = ZqRing::create(5, 1, 1);
  LaurentPoly a = LaurentPoly::from_poly(Poly::from_ints(F, {1, 2}), -3);  // x^-3 + 2x^-2
  CHECK(a.min_degree() == -3);
  CHECK(a.max_degree() == -2);
  CHECK(a.derivative() == LaurentPoly(F, -4, {F.from_int(-3), F.from_int(-4)}));
  CHECK(a.substitute_inverse() == LaurentPoly(F, 2, {F.from_int(2), F.from_int(1)}));
  Poly b = Poly::from_ints(F, {0, 1, 1});  // x + x^2
  LaurentPoly c = a * LaurentPoly::from_poly(b);
  CHECK(exact_quotient(c, b) == a);
  CHECK(divides(b, c));
  CHECK_FALSE(divides(Poly::from_ints(F, {1, 0, 1}), c));
}

TEST_CASE("series operations") {
  ZqRing R = ZqRing::create(5, 1, 4);
  const int M = 8;
  TruncatedSeries one_plus_t = TruncatedSeries::from_poly(Poly::from_ints(R, {1, 1}), M);
  TruncatedSeries inv = one_plus_t.invert_unit();
  for (int k = 0; k < M; ++k) CHECK(inv[k] == R.from_int(k % 2 ? -1 : 1));
  TruncatedSeries one_minus_t = TruncatedSeries::from_poly(Poly::from_ints(R, {1, -1}), M);
  CHECK(one_plus_t * one_minus_t == TruncatedSeries::from_poly(Poly::from_ints(R, {1, 0, -1}), M));
  TruncatedSeries t2 = TruncatedSeries::t(R, M).shift(1);
  CHECK(substitute(Poly::from_ints(R, {1, 1}), t2) == TruncatedSeries::from_poly(Poly::from_ints(R, {1, 0, 1}), M));
  TruncatedSeries bad = TruncatedSeries::from_poly(Poly::from_ints(R, {5, 1}), M);
  try {
    (void)bad.invert_unit();
    FAIL("expected NonUnitConstantTerm");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonUnitConstantTerm);
  }
  // truncation never extends
  CHECK((one_plus_t.pow(20)).precision() == M);
}

TEST_CASE("hensel_series_solve: trivial R") {
  ZqRing R = ZqRing::create(3, 1, 5);
  TruncatedSeries U = hensel_series_solve(Poly::from_ints(R, {1}), 10);
  CHECK(U == TruncatedSeries::constant(R.one(), 10));
}

TEST_CASE("hensel_series_solve: R = 1 + z against the binomial-series oracle") {
  // U + t^2 U^2 = 1, U = (-1 + sqrt(1 + 4t^2)) / (2t^2) = sum_{k>=1} binom(1/2,k) 4^k t^{2k-2} / 2
  for (uint64_t p : {3, 5, 7}) {
    ZqRing R = ZqRing::create(p, 1, 8);
    const int M = 20;
    TruncatedSeries U = hensel_series_solve(Poly::from_ints(R, {1, 1}), M);
    oracle::cpp_rational half(1, 2);
    for (int k = 1; 2 * k - 2 < M; ++k) {
      oracle::cpp_rational c = oracle::binom(half, k) * oracle::cpp_rational(oracle::cpp_int(1) << (2 * k)) / 2;
      CHECK(U[2 * k - 2] == oracle::from_rational(R, c));
      CHECK(U[2 * k - 1].is_zero());
    }
    CHECK(U[2] == R.from_int(-1));
    CHECK(U[4] == R.from_int(2));
    CHECK(U[6] == R.from_int(-5));
  }
}

TEST_CASE("hensel_series_solve: defining identity over an unramified extension") {
  std::mt19937_64 rng(23);
  ZqRing R = ZqRing::create(5, 2, 6);
  for (int it = 0; it < 5; ++it) {
    std::vector<ZqElement> c = {R.one()};
    for (int k = 1; k <= 5; ++k) c.push_back(oracle::random_element(R, rng));
    Poly Rp(R, c);
    for (int M : {3, 8, 17}) {
      TruncatedSeries U = hensel_series_solve(Rp, M);
      TruncatedSeries lhs = U * substitute(Rp, U.shift(2));
      CHECK(lhs == TruncatedSeries::constant(R.one(), M));
    }
  }
}

TEST_CASE("matrix charpoly and inverse") {
  ZqRing R = ZqRing::create(7, 1, 6);
  ZqMatrix A = ZqMatrix::from_ints(R, 3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 4});
  auto c = A.charpoly();
  // det(xI - A) = x^3 - 9x^2 + 24x - 18
  CHECK(c[0] == R.one());
  CHECK(c[1] == R.from_int(-9));
  CHECK(c[2] == R.from_int(24));
  CHECK(c[3] == R.from_int(-18));
  CHECK(A.det() == R.from_int(18));
  ZqMatrix I = ZqMatrix::identity(R, 3);
  CHECK(A * A.inverse() == I);
  ZqMatrix S = ZqMatrix::from_ints(R, 2, 2, {7, 1, 0, 7});
  CHECK_FALSE(S.invertible_mod_p());
  CHECK_THROWS_AS(S.inverse(), Error);
}

TEST_CASE("matrix charpoly: Cayley-Hamilton on random matrices") {
  std::mt19937_64 rng(29);
  ZqRing R = ZqRing::create(3, 2, 7);
  for (int n : {1, 2, 4, 6}) {
    ZqMatrix A(R, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = oracle::random_element(R, rng);
    auto c = A.charpoly();
    ZqMatrix acc(R, n, n);
    for (int k = 0; k <= n; ++k) acc = acc * A + ZqMatrix::identity(R, n).scale(c[k]);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("elements outlive the ring object that made them") {
  auto make = [] {
    ZqRing R = ZqRing::create(3, 2, 5).with_precision(7);
    return R.generator().mul_int(4);
  };
  ZqElement a = make();
  ZqRing S = ZqRing::create(3, 2, 7);
  CHECK(a.ring() == S);
  CHECK(a == S.generator().mul_int(4));
  CHECK(a.ring().ctx() == S.ctx());
}
