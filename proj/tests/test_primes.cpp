#include <cmath>
#include <random>

#include "doctest.h"
#include "detlab/constants.hpp"
#include "detlab/field.hpp"
#include "detlab/fp_poly.hpp"
#include "detlab/primesums.hpp"

using namespace detlab;
using namespace detlab::constants;

namespace {

// Plain sieve, shares nothing with the library prime listing.
std::vector<long> sieve(long n) {
  std::vector<bool> comp(static_cast<std::size_t>(n + 1), false);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (comp[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) comp[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

// Pinned tail constant: sum over Q < p <= cutoff of ln p / p^{3/2} <= c / sqrt(Q).
constexpr double kTailC = 6.0;

}  // namespace

TEST_CASE("Mertens-type sums") {
  RationalField Q;
  CHECK(mertens_sum(Q, Int(10)).sum == doctest::Approx(1.3127).epsilon(1e-3));
  CHECK(mertens_sum(Q, Int(2)).sum == doctest::Approx(std::log(2.0) / 2));
  CHECK(mertens_sum(FunctionField(2), Int(4)).sum == doctest::Approx(1.5));
  // Cutoffs snap down to powers of q.
  CHECK(mertens_sum(FunctionField(2), Int(7)).Q == 4);
}

TEST_CASE("Chebyshev sums and the Bertrand window") {
  RationalField Q;
  CHECK(chebyshev_sum(Q, Int(10)).sum == doctest::Approx(std::log(210.0)));
  CHECK(bertrand_window(Q, Int(10)).sum >= 5);
  CHECK(bertrand_window(Q, Int(10)).sum == doctest::Approx(std::log(11.0 * 13 * 17 * 19)));
  CHECK(chebyshev_sum(FunctionField(3), Int(3)).sum == doctest::Approx(3.0));
}

TEST_CASE("tail of the three-halves sum") {
  RationalField Q;
  auto a = tail_three_halves(Q, Int(100), Int(1000000));
  auto b = tail_three_halves(Q, Int(10000), Int(1000000));
  CHECK(a.sum <= kTailC / 10);
  CHECK(b.sum < a.sum);
  CHECK(b.sum <= kTailC / 100);
  auto f = tail_three_halves(FunctionField(2), Int(4), Int(1024));
  CHECK(f.sum > 0);
  CHECK(std::isfinite(f.sum));
  CHECK_THROWS_AS(tail_three_halves(Q, Int(100), Int(100)), DomainError);
}

TEST_CASE("divisor log sums") {
  RationalField Q;
  auto r = divisor_log_sum(Q, Int(12), kDivisorSumC);
  CHECK(r.sum == doctest::Approx(std::log(2.0) / 2 + std::log(3.0) / 3));
  CHECK(r.ok);
  CHECK(divisor_log_sum(Q, Int(2), kDivisorSumC).sum == doctest::Approx(std::log(2.0) / 2));
  FunctionField F2(2);
  FpPoly t = F2.t();
  auto fr = divisor_log_sum(F2, FpPoly(t * (t + FpPoly::constant(2, 1))), kDivisorSumC);
  CHECK(fr.sum == doctest::Approx(1.0));
  CHECK_THROWS_AS(divisor_log_sum(Q, Int(1), kDivisorSumC), DomainError);
  CHECK_THROWS_AS(divisor_log_sum(Q, Int(0), kDivisorSumC), DomainError);
}

TEST_CASE("Mertens deviation stays below the pinned constant") {
  RationalField Q;
  auto ps = sieve(1000000);
  for (long q = 2; q <= 1000000; q = q * 3 / 2 + 1) {
    double s = 0;
    for (long p : ps) {
      if (p > q) break;
      s += std::log(static_cast<double>(p)) / static_cast<double>(p);
    }
    auto r = mertens_sum(Q, Int(q));
    CHECK(r.sum == doctest::Approx(s).epsilon(1e-12));
    CHECK(std::abs(r.sum - std::log(static_cast<double>(q))) <= kMertensC);
  }
  for (std::uint32_t q : {2u, 3u, 5u}) {
    FunctionField F(q);
    Int top = 1;
    for (int h = 1; h <= 10; ++h) {
      top *= q;
      if (top > 100000) break;
      CHECK(std::abs(mertens_sum(F, top).deviation) <= kMertensC);
    }
  }
}

TEST_CASE("Bertrand window is at least Q/2") {
  RationalField Q;
  GaussianField G;
  for (long q = 32; q <= 100000; q *= 2) {
    CHECK(bertrand_window(Q, Int(q)).sum >= q / 2.0);
    CHECK(bertrand_window(G, Int(q)).sum >= q / 2.0);
  }
}

TEST_CASE("sums are monotone in Q") {
  RationalField Q;
  double prev = 0;
  for (long q = 2; q <= 5000; q += 37) {
    double s = chebyshev_sum(Q, Int(q)).sum;
    CHECK(s >= prev);
    prev = s;
  }
}

TEST_CASE("irreducible counts agree with the listing") {
  for (std::uint32_t q : {2u, 3u, 5u})
    for (int n = 1; n <= 5; ++n) {
      if (q == 5 && n > 4) break;
      CHECK(count_monic_irreducibles(Int(q), n) == Int(static_cast<unsigned long>(monic_irreducibles(q, n).size())));
    }
  CHECK(count_monic_irreducibles(Int(2), 4) == 3);
}

TEST_CASE("divisor bound holds on random elements") {
  std::mt19937_64 rng(31);
  RationalField Q;
  GaussianField G;
  FunctionField F2(2);
  std::uniform_int_distribution<long> dz(2, 1000000000L), dg(-22000, 22000);
  for (int i = 0; i < 500; ++i) {
    CHECK(divisor_log_sum(Q, Int(dz(rng)), kDivisorSumC).ok);
    GaussInt g(Int(dg(rng)), Int(dg(rng)));
    if (g.norm() > 1) CHECK(divisor_log_sum(G, g, kDivisorSumC).ok);
    FpPoly p = F2.random(rng, 29);
    if (p.degree() >= 1) CHECK(divisor_log_sum(F2, p, kDivisorSumC).ok);
  }
}
