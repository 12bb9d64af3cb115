#include "detlab/integer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "detlab/errors.hpp"

namespace detlab {

Int isqrt(const Int& n) {
  if (n < 0) throw DomainError("isqrt of negative number");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime_u64(std::uint64_t n) { return is_prime(Int(static_cast<unsigned long>(n))); }

Int pow_int(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat pow_rat(const Rat& base, long exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("zero to a negative power");
    Rat inv = 1 / base;
    return pow_rat(inv, -exp);
  }
  Rat r(pow_int(base.get_num(), static_cast<unsigned long>(exp)),
        pow_int(base.get_den(), static_cast<unsigned long>(exp)));
  r.canonicalize();
  return r;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

namespace {

Int pollard_brent(const Int& n, unsigned long seed) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  std::mt19937_64 rng(seed);
  while (true) {
    Int y = Int(static_cast<unsigned long>(rng() % 1000000)) % n;
    Int c = Int(static_cast<unsigned long>(rng() % 1000000 + 1)) % n;
    Int g = 1, q = 1, x, ys;
    unsigned long r = 1, m = 128;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          Int diff = x - y;
          q = (q * abs(diff)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = (ys * ys + c) % n;
        Int diff = x - ys;
        Int a = abs(diff);
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
    ++seed;
    rng.seed(seed);
  }
}

void factor_rec(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_brent(n, 7);
  factor_rec(d, out);
  factor_rec(Int(n / d), out);
}

}  // namespace

std::vector<std::pair<Int, int>> factor_int(const Int& n_in) {
  if (n_in == 0) throw DomainError("factor_int of zero");
  Int n = abs(n_in);
  std::vector<Int> primes;
  for (unsigned long p = 2; p < 10000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Int, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<std::uint32_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

double log_of(const Int& n) {
  if (n <= 0) throw DomainError("log of non-positive integer");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

double log_of(const Rat& r) { return log_of(r.get_num()) - log_of(r.get_den()); }

double to_double(const Rat& r) { return std::exp(log_of(abs(r))) * (r < 0 ? -1.0 : 1.0); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("element not invertible");
  if (t < 0) t += m;
  return static_cast<std::uint64_t>(t);
}

int valuation(const Int& n, const Int& p) {
  if (n == 0) throw DomainError("valuation of zero");
  Int m = n;
  int v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

std::string to_string(const Int& n) { return n.get_str(); }
std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace detlab
