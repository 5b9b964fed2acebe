// Acceptance run: one PASS/FAIL line per criterion. Exit status is 0 whenever
// every criterion could be evaluated (so ctest records a completed run); pass
// --strict to turn any FAIL into exit status 1.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "fixtures.hpp"
#include "hypercris/deligne_illusie.hpp"
#include "hypercris/wach.hpp"

using namespace hypercris;
using hypercris::checks::CheckResult;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

HyperellipticCurve curve(const fixtures::CurveFixture& f) { return validate_curve(f.p, f.n, f.coeffs); }

HyperellipticCurve named(const std::string& name) {
  for (const auto& f : fixtures::curves())
    if (f.name == name) return curve(f);
  throw std::runtime_error("unknown fixture " + name);
}

struct Line {
  bool pass = true;
  std::ostringstream detail;
};

int failures = 0;

void report(int k, const std::string& title, const Line& l) {
  std::cout << (l.pass ? "[PASS] " : "[FAIL] ") << k << " " << title << ": " << l.detail.str() << std::endl;
  failures += l.pass ? 0 : 1;
}

// Collects failing checks by fixture name.
void absorb(Line& l, const std::string& who, const CheckResult& c, std::vector<std::string>& bad) {
  if (!c.pass) {
    l.pass = false;
    bad.push_back(who + " (" + c.detail + ")");
  }
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

// Median over 'samples' of the mean time per call, each sample running the
// body until at least 'floor' seconds have elapsed.
double timed(const std::function<void()>& body, int samples = 5, double floor = 0.05) {
  std::vector<double> t;
  for (int s = 0; s < samples; ++s) {
    auto a = Clock::now();
    int calls = 0;
    do {
      body();
      ++calls;
    } while (seconds_since(a) < floor);
    t.push_back(seconds_since(a) / calls);
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

void criterion1() {
  Line l;
  const double limit = 10.0;
  struct Case {
    std::string name;
    std::vector<int64_t> L;
  };
  for (const Case& c : std::vector<Case>{{"x3-x/F3", {1, 0, 3}}, {"x3+x+1/F5", {1, 3, 5}}}) {
    auto t = Clock::now();
    HyperellipticCurve X = named(c.name);
    ZetaResult z = zeta_function(X);
    std::vector<uint64_t> counts;
    for (int m = 1; m <= X.g; ++m) counts.push_back(count_points_naive(X, m));
    double dt = seconds_since(t);
    bool ok = z.L == c.L && lpolynomial_oracle(counts, X.q()) == z.L && dt < limit;
    l.pass = l.pass && ok;
    l.detail << c.name << " L " << (ok ? "matches" : "MISMATCH") << " (" << std::setprecision(2) << dt << " s); ";
  }
  for (const char* name : {"x5+2x2+x+3/F5", "x5+3x+1/F7"}) {
    auto t = Clock::now();
    CheckResult c = checks::zeta_oracle(named(name), 4);
    double dt = seconds_since(t);
    bool ok = c.pass && !c.skipped && dt < limit;
    l.pass = l.pass && ok;
    l.detail << name << " " << c.detail << " (" << std::setprecision(2) << dt << " s); ";
  }
  l.detail << "tolerance: exact, < " << limit << " s each";
  report(1, "zeta oracle equivalence", l);
}

void criterion2() {
  Line l;
  std::vector<std::string> bad;
  int n = 0;
  for (const auto& f : fixtures::curves()) {
    absorb(l, f.name, checks::strong_divisibility(curve(f)), bad);
    ++n;
  }
  l.detail << n << " fixtures; " << (bad.empty() ? "Fil^1 columns 0 mod p, A invertible, det valuations as expected" : join(bad))
           << "; tolerance: exact";
  report(2, "strong divisibility", l);
}

void criterion3() {
  Line l;
  std::vector<std::string> bad;
  int hw = 0, agree = 0;
  for (const auto& f : fixtures::curves()) {
    HyperellipticCurve X = curve(f);
    CheckResult h = checks::hasse_witt(X);
    if (!h.skipped) {
      absorb(l, f.name, h, bad);
      ++hw;
    }
    CheckResult k = checks::kedlaya_agreement(X);
    absorb(l, f.name, k, bad);
    agree += k.pass ? 1 : 0;
  }
  HyperellipticCurve ss = named("x3-x/F3"), ord = named("x3+x+1/F5");
  bool zero_block = di_matrix(ss)(1, 1).is_zero();
  bool block2 = di_matrix(ord)(1, 1) == ord.field.from_int(2);
  l.pass = l.pass && hw >= 5 && zero_block && block2;
  l.detail << "Hasse-Witt block exact on " << hw << " fixtures (p=3 supersingular block " << (zero_block ? "0" : "NONZERO")
           << ", p=5 block " << (block2 ? "[2]" : "WRONG") << "); Kedlaya A mod p agrees on " << agree
           << " fixtures after base change";
  if (!bad.empty()) l.detail << "; " << join(bad);
  l.detail << "; tolerance: exact over F_q";
  report(3, "Deligne-Illusie cross-validation", l);
}

void criterion4() {
  Line l;
  const int trials = 20;
  int unchanged = 0, total = 0, covariant = 0;
  uint64_t seed = 1000;
  for (const auto& f : fixtures::curves()) {
    HyperellipticCurve X = curve(f);
    CheckResult lit = checks::splitting_literal(X, trials, seed);
    CheckResult cov = checks::splitting_covariance(X, trials, seed);
    ++seed;
    total += 1;
    unchanged += lit.pass ? 1 : 0;
    covariant += cov.pass ? 1 : 0;
  }
  l.pass = unchanged == total;
  l.detail << trials << " random perturbations per fixture: di_matrix literally unchanged on " << unchanged << "/"
           << total << " fixtures; the basis change A_W = [[I,-W],[0,I]] A holds on " << covariant << "/" << total
           << " (the basis s([h_i]) moves with s); tolerance: exact";
  report(4, "splitting independence", l);
}

void criterion5() {
  Line l;
  const double limit = 60.0;
  std::vector<std::string> bad;
  double worst = 0;
  int n = 0;
  for (const auto& f : fixtures::curves()) {
    auto t = Clock::now();
    HyperellipticCurve X = curve(f);
    for (auto [i, j] : {std::pair{1, 4}, {2, 3}, {3, 3}}) absorb(l, f.name, checks::gamma_certification(X, i, j), bad);
    double dt = seconds_since(t);
    worst = std::max(worst, dt);
    if (dt >= limit) {
      l.pass = false;
      bad.push_back(f.name + " took " + std::to_string(dt) + " s");
    }
    ++n;
  }
  l.detail << n << " fixtures x (i,j) in {(1,4),(2,3),(3,3)}: G = I mod T, residual 0 mod (p^i,T^j), +2 rerun bit-exact";
  if (!bad.empty()) l.detail << "; " << join(bad);
  l.detail << "; slowest fixture " << std::setprecision(2) << worst << " s < " << static_cast<int>(limit) << " s";
  report(5, "(phi,Gamma)-module certification", l);
}

void criterion6() {
  Line l;
  std::vector<std::string> bad;
  int n = 0;
  for (const auto& f : fixtures::curves()) {
    absorb(l, f.name, checks::derham_structure(curve(f)), bad);
    ++n;
  }
  l.detail << n << " fixtures; "
           << (bad.empty() ? "V-bar diagonal -2, V_full left block 0, C22 diagonal -(2l+1)/2, det valuation, u_{i,l} shape"
                           : join(bad))
           << "; tolerance: exact";
  report(6, "de Rham structure regressions", l);
}

void criterion7() {
  Line l;
  std::vector<std::string> bad;
  int n = 0;
  for (const auto& f : fixtures::curves()) {
    absorb(l, f.name, checks::di_regularity(curve(f)), bad);
    ++n;
  }
  HyperellipticCurve X = named("x3-x/F3");
  bool worked = deligne_illusie(X).regularity.du_quotient == Poly::constant(X.field.one());
  l.pass = l.pass && worked;
  l.detail << n << " fixtures: P^{p-1} | u' + x^{p-1} and f_V - f_U + dh = 0 for every image; p=3 case u' + x^2 = P^2 "
           << (worked ? "holds" : "FAILS");
  if (!bad.empty()) l.detail << "; " << join(bad);
  l.detail << "; tolerance: exact";
  report(7, "corrected lemma divisibility", l);
}

void criterion8() {
  Line l;
  const double bound = 10.0, limit = 300.0;
  const int i = 2, j = 2;
  auto start = Clock::now();
  std::vector<double> tg, td;
  std::vector<int> genera = {2, 4, 8};
  for (int g : genera) {
    HyperellipticCurve X = curve_family_member(5, g);
    tg.push_back(timed([&] { compute_gamma_matrix(filtered_frobenius(X, gamma_working_precision(i, j)), i, j); }));
    td.push_back(timed([&] { di_matrix(X); }));
  }
  l.detail << std::setprecision(3);
  for (size_t k = 1; k < genera.size(); ++k) {
    double rg = tg[k] / tg[k - 1], rd = td[k] / td[k - 1];
    l.pass = l.pass && rg <= bound && rd <= bound;
    l.detail << "g " << genera[k - 1] << "->" << genera[k] << ": phigamma x" << rg << ", di x" << rd << "; ";
  }
  double total = seconds_since(start);
  l.pass = l.pass && total < limit;
  l.detail << "p=5, i=j=2, bound x" << bound << " per doubling, total " << std::setprecision(2) << total << " s < "
           << static_cast<int>(limit) << " s";
  report(8, "complexity smoke test", l);
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  try {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
  } catch (const std::exception& e) {
    std::cout << "acceptance run aborted: " << e.what() << std::endl;
    return 2;
  }
  std::cout << (8 - failures) << "/8 criteria pass" << std::endl;
  return strict && failures ? 1 : 0;
}
