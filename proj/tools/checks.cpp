#include "checks.hpp"

#include <random>
#include <sstream>

#include "hypercris/deligne_illusie.hpp"
#include "hypercris/derham.hpp"
#include "hypercris/kedlaya.hpp"
#include "hypercris/wach.hpp"

namespace hypercris::checks {

namespace {

template <class F>
CheckResult guarded(const std::string& name, F body) {
  CheckResult r;
  r.name = name;
  try {
    body(r);
  } catch (const Error& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return r;
}

ZqMatrix random_matrix(const ZqRing& F, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int64_t> digit(0, static_cast<int64_t>(F.p()) - 1);
  ZqMatrix W(F, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int64_t> c(F.degree());
      for (auto& x : c) x = digit(rng);
      W(i, j) = F.from_coords(c);
    }
  return W;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

CheckResult zeta_oracle(const HyperellipticCurve& X, int max_m) {
  return guarded("zeta_oracle", [&](CheckResult& r) {
    const uint64_t q = X.q();
    ZetaResult z = zeta_function(X);
    std::ostringstream d;
    int compared = 0;
    bool ok = true;
    for (int m = 1; m <= max_m; ++m) {
      if (ipow(q, m) > kNaiveCountLimit) break;
      int64_t want = static_cast<int64_t>(count_points_naive(X, m));
      int64_t got = count_from_lpolynomial(z.L, q, m);
      if (want != got) {
        ok = false;
        d << "m=" << m << ": L gives " << got << ", enumeration " << want << "; ";
      }
      ++compared;
    }
    if (ipow(q, X.g) <= kNaiveCountLimit) {
      std::vector<uint64_t> counts;
      for (int m = 1; m <= X.g; ++m) counts.push_back(count_points_naive(X, m));
      if (lpolynomial_oracle(counts, q) != z.L) {
        ok = false;
        d << "L(T) differs from the brute-force oracle; ";
      }
    }
    if (compared == 0) {
      r.skipped = true;
      r.pass = true;
      r.detail = "q too large to enumerate";
      return;
    }
    r.pass = ok;
    if (ok) d << "counts agree for m = 1.." << compared;
    r.detail = d.str();
  });
}

CheckResult strong_divisibility(const HyperellipticCurve& X) {
  return guarded("strong_divisibility", [&](CheckResult& r) {
    const int g = X.g;
    FilteredFrobeniusData ff = filtered_frobenius(X, g);
    const ZqRing F = X.field;
    bool zero_cols = ff.M_ad.block(0, 0, 2 * g, g).reduce(F).is_zero();
    bool inv = ff.A.invertible_mod_p();
    int vA = ff.A.det().valuation();
    int vM = ff.M_ad.det().valuation();
    r.pass = zero_cols && inv && vA == 0 && (X.n != 1 || vM == g);
    std::ostringstream d;
    d << "Fil^1 columns zero mod p: " << (zero_cols ? "yes" : "no") << ", A invertible mod p: " << (inv ? "yes" : "no")
      << ", v(det A) = " << vA << ", v(det M) = " << vM << " (g = " << g << ")";
    r.detail = d.str();
  });
}

CheckResult derham_structure(const HyperellipticCurve& X) {
  return guarded("derham_structure", [&](CheckResult& r) {
    const int g = X.g, N = 6;
    const ZqRing R = X.ring(N);
    InfinityExpansions e = infinity_expansions(X, R, 4 * g + 2);
    VMatrices v = build_v_matrices(X, e);
    AdaptedBasis b = adapted_basis(X, N);
    std::vector<std::string> bad;
    if (!v.full.block(0, 0, g, g).is_zero()) bad.push_back("V_full left block");
    int expected = 0;
    const ZqElement half = R.from_int(2).inverse();
    for (int l = 0; l < g; ++l) {
      if (v.bar(l, l) != R.from_int(-2)) bad.push_back("V-bar diagonal");
      if (b.C22(l, l) != R.from_int(-(2 * l + 1)) * half) bad.push_back("C22 diagonal");
      expected += vp_int(2 * l + 1, X.p);
      auto u = u_coefficients(e, l);
      if (u[0] != R.from_int(2)) bad.push_back("u constant term");
      for (size_t k = 1; k < u.size(); k += 2)
        if (!u[k].is_zero()) bad.push_back("odd u coefficient");
    }
    if (b.det_valuation != expected || b.C22.det().valuation() != expected) bad.push_back("det C22 valuation");
    r.pass = bad.empty();
    std::ostringstream d;
    if (r.pass)
      d << "v(det C22) = " << expected;
    else
      for (const auto& s : bad) d << s << " wrong; ";
    r.detail = d.str();
  });
}

CheckResult hasse_witt(const HyperellipticCurve& X) {
  return guarded("hasse_witt", [&](CheckResult& r) {
    if (X.n != 1) {
      r.skipped = true;
      r.pass = true;
      r.detail = "classical formula is for F_p";
      return;
    }
    ZqMatrix A = di_matrix(X);
    ZqMatrix hw = hasse_witt_classical(X);
    r.pass = A.block(X.g, X.g, X.g, X.g) == hw;
    r.detail = "HW = " + hw.to_string();
  });
}

CheckResult di_regularity(const HyperellipticCurve& X) {
  return guarded("di_regularity", [&](CheckResult& r) {
    DeligneIllusieData D = deligne_illusie(X);
    RegularityReport rep = regularity_check(X, D.lift_U, D.lift_V);
    int cocycles = 0;
    for (const auto& c : D.images) cocycles += is_cocycle(X, c) ? 1 : 0;
    r.pass = cocycles == static_cast<int>(D.images.size());
    std::ostringstream d;
    d << "P^{p-1} divides u' + x^{p-1} (quotient degree " << rep.du_quotient.degree() << "), " << cocycles << "/"
      << D.images.size() << " images are cocycles";
    r.detail = d.str();
  });
}

CheckResult kedlaya_agreement(const HyperellipticCurve& X) {
  return guarded("kedlaya_agreement", [&](CheckResult& r) {
    KedlayaComparison c = compare_with_kedlaya(X, deligne_illusie(X), filtered_frobenius(X, 1));
    r.pass = c.lower_blocks_agree && c.full_agree;
    r.detail = std::string("graded blocks ") + (c.lower_blocks_agree ? "agree" : "differ") + ", full matrix " +
               (c.full_agree ? "agrees" : "differs");
  });
}

CheckResult splitting_literal(const HyperellipticCurve& X, int trials, uint64_t seed) {
  return guarded("splitting_literal", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    ZqMatrix A = di_matrix(X);
    int same = 0;
    for (int t = 0; t < trials; ++t) {
      ZqMatrix W = random_matrix(X.field, X.g, rng);
      same += di_matrix(X, &W) == A ? 1 : 0;
    }
    r.pass = same == trials;
    r.detail = std::to_string(same) + "/" + std::to_string(trials) + " perturbations left di_matrix unchanged";
  });
}

CheckResult splitting_covariance(const HyperellipticCurve& X, int trials, uint64_t seed) {
  return guarded("splitting_covariance", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const int g = X.g;
    ZqMatrix A = di_matrix(X);
    int ok = 0;
    for (int t = 0; t < trials; ++t) {
      ZqMatrix W = random_matrix(X.field, g, rng);
      ZqMatrix T = ZqMatrix::identity(X.field, 2 * g);
      T.set_block(0, g, -W);
      ok += di_matrix(X, &W) == T * A ? 1 : 0;
    }
    r.pass = ok == trials;
    r.detail = std::to_string(ok) + "/" + std::to_string(trials) + " perturbations satisfy A_W = [[I,-W],[0,I]] A";
  });
}

CheckResult gamma_certification(const HyperellipticCurve& X, int i, int j) {
  return guarded("gamma_certification", [&](CheckResult& r) {
    FilteredFrobeniusData ff = filtered_frobenius(X, gamma_working_precision(i, j, 2));
    GammaMatrix G = compute_gamma_matrix(ff, i, j);
    GammaMatrix H = compute_gamma_matrix(ff, i, j, 2);
    bool same = H.G == G.G;
    r.pass = G.report.commutes && G.report.trivial_mod_T && same;
    std::ostringstream d;
    d << "(i, j) = (" << i << ", " << j << "): residual zero mod (p^" << i << ", T^" << G.report.residual_t_valuation
      << "), rerun at +2 digits " << (same ? "identical" : "differs");
    r.detail = d.str();
  });
}

std::vector<CheckResult> all_invariants(const HyperellipticCurve& X, int i, int j, uint64_t seed) {
  return {zeta_oracle(X),        strong_divisibility(X), derham_structure(X),
          hasse_witt(X),         di_regularity(X),       kedlaya_agreement(X),
          splitting_covariance(X, 20, seed), gamma_certification(X, i, j)};
}

}  // namespace hypercris::checks
