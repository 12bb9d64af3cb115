#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace detlab {

using Int = mpz_class;
using Rat = mpq_class;

Int isqrt(const Int& n);
bool is_square(const Int& n);
bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);
Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, long exp);
Int binomial(long n, long k);

/// Prime factorization of |n| (n != 0), ascending primes.
std::vector<std::pair<Int, int>> factor_int(const Int& n);

/// All primes <= limit.
std::vector<std::uint32_t> sieve_primes(std::uint64_t limit);

/// Natural logarithm of a positive integer or rational, accurate for huge values.
double log_of(const Int& n);
double log_of(const Rat& r);
double to_double(const Rat& r);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Exponent of p in n (n != 0).
int valuation(const Int& n, const Int& p);

std::string to_string(const Int& n);
std::string to_string(const Rat& r);

}  // namespace detlab
