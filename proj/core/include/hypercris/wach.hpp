#pragma once

// The matrix of gamma on N = S (x) H^1_DR(X), S = W[[T]], computed by the
// double devissage (modulo T, then modulo p) from the divided Frobenius A.

#include <vector>

#include "hypercris/kedlaya.hpp"
#include "hypercris/series.hpp"

namespace hypercris {

// W/p^N [[T]] / T^M with the commuting actions
//   phi(T) = T (p + T)^{p-1}, sigma-semilinear on coefficients,
//   gamma(T) = (1 + p) T + ..., W-linear,
// gamma(T) - T = alpha (p + T) T.
struct SStructure {
  uint64_t p = 0;
  ZqRing base;
  int t_precision = 0;
  TruncatedSeries gamma, phi;
  ZqElement chi;                        // linear coefficient of gamma(T)
  TruncatedSeries alpha;                // known modulo T^{M-1}
  std::vector<TruncatedSeries> gamma_pow, phi_pow;  // images of T^k, k < M
};

// Default construction: gamma solved exactly over Q from gamma(phi(T)) = phi(gamma(T))
// with chi = 1 + p, then mapped into W/p^N. AxiomViolation on a non-integral
// coefficient, a wrong alpha, or a commutation failure.
SStructure build_s_structure(uint64_t p, int n, int N, int M);
// Structure with gamma replaced by gamma o gamma (the action of gamma^2);
// the alpha congruence does not apply to it.
SStructure square_gamma(const SStructure& S);

TruncatedSeries apply_gamma(const SStructure& S, const TruncatedSeries& f);
TruncatedSeries apply_phi(const SStructure& S, const TruncatedSeries& f);

// Dense matrix of truncated series.
class SeriesMatrix {
 public:
  SeriesMatrix() = default;
  SeriesMatrix(const ZqRing& R, int M, int rows, int cols);
  static SeriesMatrix identity(const ZqRing& R, int M, int n);
  static SeriesMatrix constant(const ZqMatrix& A, int M);

  int rows() const { return r_; }
  int cols() const { return c_; }
  int t_precision() const { return M_; }
  const ZqRing& ring() const { return ring_; }
  TruncatedSeries& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const TruncatedSeries& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  SeriesMatrix operator+(const SeriesMatrix& o) const;
  SeriesMatrix operator-(const SeriesMatrix& o) const;
  SeriesMatrix operator*(const SeriesMatrix& o) const;
  SeriesMatrix reduce(const ZqRing& target) const;
  ZqMatrix coefficient(int k) const;
  bool operator==(const SeriesMatrix& o) const;
  bool operator!=(const SeriesMatrix& o) const { return !(*this == o); }
  bool is_zero() const;
  int t_valuation() const;  // min over entries, M for zero

 private:
  ZqRing ring_;
  int M_ = 0, r_ = 0, c_ = 0;
  std::vector<TruncatedSeries> a_;
};

// D = G A gamma(Lambda) - A Lambda phi(G), Lambda = diag((p + T)^{r_j}).
SeriesMatrix discrepancy(const SeriesMatrix& G, const ZqMatrix& A, const std::vector<int>& r, const SStructure& S);

// Constant term of D_{.j} / (T^n (p + T)^{r_j}); NotDivisible when D is not
// divisible that far.
ZqMatrix extract_B(const SeriesMatrix& D, int n, const std::vector<int>& r);

// X with B = A' X'_phi - X A modulo p^target, A' = (p^{r_j} a_ij),
// X'_phi = (p^{n(p-1) - r_j} sigma(x_ij)).
ZqMatrix solve_star(const ZqMatrix& B, const ZqMatrix& A, const std::vector<int>& r, int n, int target);

struct CommutationReport {
  bool trivial_mod_T = false;
  bool commutes = false;
  int residual_t_valuation = 0;  // of the residual modulo p^i
  int residual_p_valuation = 0;  // min over the coefficients below T^j
};
CommutationReport verify_commutation(const SeriesMatrix& G, const ZqMatrix& A, const std::vector<int>& r,
                                     const SStructure& S, int i, int j);

struct GammaMatrix {
  SeriesMatrix G;  // over W/p^i, modulo T^j
  int p_precision = 0, t_precision = 0;
  int working = 0;                      // p-adic working precision
  std::vector<int> level_valuations;    // T-valuation of the discrepancy after each level
  CommutationReport report;
};

// Core devissage; A over W/p^{>= working}, r_j in {0, 1}.
GammaMatrix compute_gamma_matrix(const ZqMatrix& A, const std::vector<int>& r, const SStructure& S, int i, int j);
// Working precision i + j + 1 + extra_guard; 'data' must be known that far.
GammaMatrix compute_gamma_matrix(const FilteredFrobeniusData& data, int i, int j, int extra_guard = 0);
int gamma_working_precision(int i, int j, int extra_guard = 0);

}  // namespace hypercris
