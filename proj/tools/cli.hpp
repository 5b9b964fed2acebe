#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hypercris::cli {

struct JobSpec {
  std::string command;
  uint64_t p = 0;
  int n = 1;
  std::vector<std::vector<int64_t>> coeffs;  // ascending; each entry on the power basis of F_q
  int prec_p = 1;
  int prec_T = 2;
  std::string method = "kedlaya";
  uint64_t seed = 1;
  bool identity_override = false;  // phigamma test hook: A = I, r = 0
  std::vector<int> genera = {1, 2, 3, 4};
  int repeats = 3;
};

enum ExitCode { kOk = 0, kValidation = 1, kPrecision = 2, kInvariant = 3 };

// "c0,c1,..." with an entry either an integer or "a0:a1:..." coordinates.
std::vector<std::vector<int64_t>> parse_poly(const std::string& s);

// Executes one job; the JSON document goes to 'out', diagnostics to 'err'.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// argv front end: flags, optional --config file (flags win), then run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypercris::cli
