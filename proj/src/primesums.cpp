#include "detlab/primesums.hpp"

#include <algorithm>

namespace detlab {

std::vector<std::pair<Int, Int>> prime_norm_counts(const RationalField&, const Int& Q) {
  std::vector<std::pair<Int, Int>> out;
  if (Q < 2) return out;
  for (auto p : sieve_primes(Q.get_ui())) out.emplace_back(Int(p), Int(1));
  return out;
}

std::vector<std::pair<Int, Int>> prime_norm_counts(const FunctionField& F, const Int& Q) {
  std::vector<std::pair<Int, Int>> out;
  Int n = F.q();
  for (int d = 1; n <= Q; ++d, n *= F.q()) out.emplace_back(n, count_monic_irreducibles(Int(F.q()), d));
  return out;
}

std::vector<std::pair<Int, Int>> prime_norm_counts(const GaussianField&, const Int& Q) {
  std::vector<std::pair<Int, Int>> out;
  if (Q < 2) return out;
  for (auto p : sieve_primes(Q.get_ui())) {
    Int P(p);
    if (p == 2)
      out.emplace_back(P, Int(1));
    else if (p % 4 == 1)
      out.emplace_back(P, Int(2));
    else if (P * P <= Q)
      out.emplace_back(P * P, Int(1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detlab
