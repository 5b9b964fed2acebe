#pragma once

// Curve fixtures with reference counts, L-polynomials and Hasse-Witt matrices
// frozen from tests/oracles/curve_counts.py (brute force over sympy finite fields).

#include <cstdint>
#include <string>
#include <vector>

namespace fixtures {

struct CurveFixture {
  std::string name;
  uint64_t p;
  int n;
  std::vector<std::vector<int64_t>> coeffs;  // ascending, power-basis coordinates
  int g;
  std::vector<uint64_t> counts;              // #X(F_{q^m}), m = 1..g
  std::vector<int64_t> L;
  std::vector<std::vector<int64_t>> hw;      // n = 1 only
};

inline const std::vector<CurveFixture>& curves() {
  static const std::vector<CurveFixture> v = {
      {"x3-x/F3", 3, 1, {{0}, {-1}, {0}, {1}}, 1, {4}, {1, 0, 3}, {{0}}},
      {"x3+x+1/F5", 5, 1, {{1}, {1}, {0}, {1}}, 1, {9}, {1, 3, 5}, {{2}}},
      {"x5+2x2+x+3/F5", 5, 1, {{3}, {1}, {2}, {0}, {0}, {1}}, 2, {2, 30}, {1, -4, 10, -20, 25}, {{4, 0}, {4, 0}}},
      {"x5+3x+1/F7", 7, 1, {{1}, {3}, {0}, {0}, {0}, {1}}, 2, {11, 55}, {1, 3, 7, 21, 49}, {{4, 0}, {3, 0}}},
      {"x5+x2+1/F3", 3, 1, {{1}, {0}, {1}, {0}, {0}, {1}}, 2, {6, 18}, {1, 2, 6, 6, 9}, {{1, 1}, {0, 0}}},
      {"x3+x+a/F9", 3, 2, {{0, 1}, {1}, {0}, {1}}, 1, {7}, {1, -3, 9}, {}},
      {"x5+ax+1/F25", 5, 2, {{1}, {0, 1}, {0}, {0}, {0}, {1}}, 2, {26, 626}, {1, 0, 0, 0, 625}, {}},
      {"x7+x+3/F7", 7, 1, {{3}, {1}, {0}, {0}, {0}, {0}, {0}, {1}}, 3, {8, 92, 344}, {1, 0, 21, 0, 147, 0, 343},
       {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}},
      {"x3+2x2+5/F11", 11, 1, {{5}, {0}, {2}, {1}}, 1, {7}, {1, -5, 11}, {{5}}},
  };
  return v;
}

}  // namespace fixtures
