#pragma once

#include <string>
#include <vector>

namespace detlab {

struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

// Each check compares library output against an oracle that does not share
// the code path under test (brute force, closed formula, or a second method).
CheckResult check_product_formula();
CheckResult check_local_determinants();
CheckResult check_hilbert_identities();
CheckResult check_curve_exponents(unsigned threads = 0);
CheckResult check_affine_exponents(unsigned threads = 0);
CheckResult check_aux_contract();
CheckResult check_prime_sums();
CheckResult check_small_solutions();
CheckResult check_line_counts();
CheckResult check_bad_primes();
CheckResult check_dimension_growth(unsigned threads = 0);

/// All ten acceptance checks, in order.
std::vector<CheckResult> acceptance_suite(unsigned threads = 0);

/// Named bundle: curves, primes, detval, hilbert or growth.
std::vector<CheckResult> run_preset(const std::string& name, unsigned threads = 0);

}  // namespace detlab
