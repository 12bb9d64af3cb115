#include <random>

#include "doctest.h"
#include "detlab/badprimes.hpp"
#include "detlab/constants.hpp"
#include "detlab/field.hpp"
#include "detlab/irreducible.hpp"
#include "detlab/poly_io.hpp"

using namespace detlab;
using namespace detlab::constants;

namespace {

std::vector<Int> norms(const std::vector<PrimeId<Int>>& ps) {
  std::vector<Int> out;
  for (const auto& p : ps) out.push_back(p.norm);
  return out;
}

MPoly<GFElem> mod_p(const MPoly<Int>& f, std::uint32_t p) {
  RationalField Q;
  return reduce_mod(Q, f, Q.prime_of(Int(p)));
}

// Conic a x^2 + b xy + c xz + d y^2 + e yz + g z^2; the doubled Gram matrix.
Int conic_det(long a, long b, long c, long d, long e, long g) {
  Int m[3][3] = {{2 * a, b, c}, {b, 2 * d, e}, {c, e, 2 * g}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

MPoly<Int> conic(long a, long b, long c, long d, long e, long g) {
  MPoly<Int> f(3);
  f.add_term({2, 0, 0}, Int(a));
  f.add_term({1, 1, 0}, Int(b));
  f.add_term({1, 0, 1}, Int(c));
  f.add_term({0, 2, 0}, Int(d));
  f.add_term({0, 1, 1}, Int(e));
  f.add_term({0, 0, 2}, Int(g));
  return f;
}

}  // namespace

TEST_CASE("polynomial parsing") {
  RationalField Q;
  auto f = parse_poly(Q, "x0*x2 - x1^2");
  CHECK(f.degree() == 2);
  CHECK(f.size() == 2);
  CHECK(parse_poly(FunctionField(2), "(t+1)*x0^3 + t*x1^3").size() == 2);
  CHECK(parse_poly(Q, "x0^2 + x1^2 - 3*x2^2").size() == 3);
  CHECK_THROWS_AS(parse_poly(Q, "x0 +* x1"), ParseError);
  CHECK_THROWS_AS(parse_poly(Q, "y0 + x1"), ParseError);
  CHECK(parse_poly(Q, "x0 - x0").is_zero());
}

TEST_CASE("formatting round-trips") {
  std::mt19937_64 rng(41);
  GaussianField G;
  for (int i = 0; i < 100; ++i) {
    MPoly<GaussInt> f(3);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        if (rng() % 3 == 0) f.add_term({a, b, 3 - a - b}, G.random(rng, 50));
    auto text = to_text(f);
    CHECK(parse_poly(G, text, 3) == f);
    CHECK(to_text(parse_poly(G, text, 3)) == text);
  }
}

TEST_CASE("absolute irreducibility over residue fields") {
  RationalField Q;
  auto f5 = GFContext::prime_field(5);
  auto f2 = GFContext::prime_field(2);
  for (auto m : {IrredMethod::Ruppert, IrredMethod::ExtensionFactor})
    CHECK(abs_irreducible(f5, mod_p(parse_poly(Q, "x0*x2 - x1^2"), 5), m));
  CHECK_FALSE(abs_irreducible(f5, mod_p(parse_poly(Q, "x0^2 + x1^2"), 5), IrredMethod::ExtensionFactor));
  CHECK_FALSE(abs_irreducible(f2, mod_p(parse_poly(Q, "x0^2 + x1^2 + x2^2"), 2), IrredMethod::ExtensionFactor));
  // x^2 + y^2 is irreducible over F_3 but splits over F_9.
  CHECK_FALSE(abs_irreducible(GFContext::prime_field(3), mod_p(parse_poly(Q, "x0^2 + x1^2"), 3), IrredMethod::ExtensionFactor));
  CHECK(parse_irred_method("ruppert") == IrredMethod::Ruppert);
  CHECK_THROWS_AS(parse_irred_method("magic"), ParseError);
}

TEST_CASE("conic absolute irreducibility matches the discriminant") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> dc(-20, 20);
  int tested = 0;
  while (tested < 100) {
    long a = dc(rng), b = dc(rng), c = dc(rng), d = dc(rng), e = dc(rng), g = dc(rng);
    auto f = conic(a, b, c, d, e, g);
    if (f.degree() != 2) continue;
    ++tested;
    Int D = conic_det(a, b, c, d, e, g);
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u}) {
      auto fb = mod_p(f, p);
      if (fb.degree() != 2) continue;
      bool oracle = D % Int(p) != 0;
      auto ctx = GFContext::prime_field(p);
      CHECK(abs_irreducible(ctx, fb, IrredMethod::ExtensionFactor) == oracle);
      CHECK(abs_irreducible(ctx, fb, IrredMethod::Ruppert) == oracle);
    }
  }
}

TEST_CASE("Ruppert and extension factorization agree on cubics") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<long> dc(-20, 20);
  RationalField Q;
  int tested = 0;
  while (tested < 100) {
    MPoly<Int> f(3);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        if (rng() % 2) f.add_term({a, b, 3 - a - b}, Int(dc(rng)));
    if (f.degree() != 3 || !absolute_irreducibility_gate(Q, f).absolutely_irreducible) continue;
    ++tested;
    for (std::uint32_t p : {7u, 11u, 13u, 29u, 53u, 97u, 151u, 199u}) {
      auto fb = mod_p(f, p);
      if (fb.degree() != 3) continue;
      auto ctx = GFContext::prime_field(p);
      CHECK(abs_irreducible(ctx, fb, IrredMethod::ExtensionFactor) == abs_irreducible(ctx, fb, IrredMethod::Ruppert));
    }
  }
}

TEST_CASE("bad primes") {
  RationalField Q;
  auto f = parse_poly(Q, "x0^2 + x1^2 - 3*x2^2");
  auto raw = bad_primes(Q, f, Int(100), kBadPrimeLemmaC);
  CHECK(norms(raw.raw) == std::vector<Int>{2, 3});
  auto big = bad_primes(Q, f, Int(1000), kBadPrimeLemmaC);
  CHECK(big.filtered.empty());
  CHECK(big.b == 1.0);
  CHECK(big.b_exactly_one);
  CHECK(big.selector.beta() == 432.0);
  auto conic_raw = norms(bad_primes(Q, parse_poly(Q, "x0*x2 - x1^2"), Int(100), kBadPrimeLemmaC).raw);
  CHECK(conic_raw.size() <= 1);
  if (!conic_raw.empty()) CHECK(conic_raw.front() == 2);
  CHECK_THROWS_AS(bad_primes(Q, parse_poly(Q, "x0^2 - x1^2"), Int(100), kBadPrimeLemmaC), DomainError);
}

TEST_CASE("odd bad primes of conics divide the discriminant") {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<long> dc(-9, 9);
  RationalField Q;
  int tested = 0;
  while (tested < 40) {
    long a = dc(rng), b = dc(rng), c = dc(rng), d = dc(rng), e = dc(rng), g = dc(rng);
    Int D = conic_det(a, b, c, d, e, g);
    if (D == 0) continue;
    auto f = conic(a, b, c, d, e, g);
    if (f.degree() != 2) continue;
    ++tested;
    auto rep = bad_primes(Q, f, Int(60), kBadPrimeLemmaC);
    std::vector<Int> got, want;
    for (const auto& p : rep.raw)
      if (p.norm != 2) got.push_back(p.norm);
    for (long p = 3; p <= 60; ++p) {
      bool prime = true;
      for (long k = 2; k * k <= p; ++k) prime = prime && p % k;
      if (!prime) continue;
      // A conic that drops degree mod p is a bad reduction too.
      bool drops = mod_p(f, static_cast<std::uint32_t>(p)).degree() < 2 || mod_p(f, static_cast<std::uint32_t>(p)).is_zero();
      if (D % p == 0 || drops) want.push_back(Int(p));
    }
    CHECK(got == want);
    CHECK(rep.filtered.size() <= rep.raw.size());
    CHECK(rep.b >= 1.0);
    if (rep.filtered.empty()) CHECK(rep.b == 1.0);
  }
}

TEST_CASE("primes where the curve is not geometrically integral") {
  RationalField Q;
  CHECK(pi_X(Q, parse_poly(Q, "x0*x2^2 - x1^3"), Int(100)).empty());
  CHECK(norms(pi_X(Q, parse_poly(Q, "x0^2 + x1^2 - 3*x2^2"), Int(100))) == std::vector<Int>{2, 3});
  FunctionField F5(5);
  CHECK(pi_X(F5, parse_poly(F5, "x0*x2 - x1^2"), Int(25)).empty());
}

TEST_CASE("primes of singular reduction of a point") {
  RationalField Q;
  auto cusp = parse_poly(Q, "x0*x2^2 - x1^3");
  auto r = pi_x(Q, cusp, parse_point(Q, "1:9:27"), Int(100), kPiXKappa, kPiXKappaPrime);
  CHECK(norms(r.primes) == std::vector<Int>{3});
  CHECK(r.ok);
  auto conic = parse_poly(Q, "x0*x2 - x1^2");
  CHECK(pi_x(Q, conic, parse_point(Q, "1:1:1"), Int(100), kPiXKappa, kPiXKappaPrime).primes.empty());
  CHECK(pi_x(Q, conic, parse_point(Q, "1:5:25"), Int(100), kPiXKappa, kPiXKappaPrime).primes.empty());
  CHECK_THROWS_AS(pi_x(Q, conic, parse_point(Q, "1:2:3"), Int(100), kPiXKappa, kPiXKappaPrime), DomainError);
}

TEST_CASE("singular-reduction primes stay within the pinned log bound") {
  RationalField Q;
  auto cusp = parse_poly(Q, "x0*x2^2 - x1^3");
  int seen = 0;
  for (long u = -8; u <= 8; ++u)
    for (long v = -8; v <= 8; ++v) {
      // u = 0 is the cusp itself, singular over Q and so at every prime.
      if (u == 0) continue;
      Int g = gcd(Int(u), Int(v));
      if (g != 1) continue;
      // x1 = u^2 v, x2 = u^3, x0 = v^3 gives x0 x2^2 = u^6 v^3 = x1^3.
      std::vector<Frac<Int>> pt{Frac<Int>(Int(v * v * v)), Frac<Int>(Int(u * u * v)), Frac<Int>(Int(u * u * u))};
      auto h = relative_height_proj(Q, pt).hk;
      if (h > 500) continue;
      ++seen;
      auto r = pi_x(Q, cusp, pt, Int(600), kPiXKappa, kPiXKappaPrime);
      CHECK(r.ok);
    }
  CHECK(seen > 20);
}

TEST_CASE("top-coefficient shift") {
  RationalField Q;
  auto s = shift_for_top_coefficient(Q, parse_poly(Q, "x0*x2 - x1^2"));
  CHECK(s.a == std::vector<long>{0, 2});
  CHECK(abs(s.value) == 4);
  auto t = shift_for_top_coefficient(Q, parse_poly(Q, "x0^3 - x2^3"));
  CHECK(t.a == std::vector<long>{3, 0});
  CHECK(t.value == 26);
  for (int d = 1; d <= 4; ++d) {
    MPoly<Int> f(3);
    f.add_term({0, 0, d}, Int(1));
    auto r = shift_for_top_coefficient(Q, f);
    CHECK(r.a == std::vector<long>{0, 0});
    CHECK(r.value == 1);
  }
  // The coefficient of x_{v-1}^d in f1 is f(a,1).
  auto c = t.f1.coefficient({0, 0, 3});
  CHECK(c == t.value);
}

TEST_CASE("shift certificate holds on random forms") {
  std::mt19937_64 rng(45);
  RationalField Q;
  GaussianField G;
  std::uniform_int_distribution<long> dc(-30, 30);
  for (int i = 0; i < 100; ++i) {
    MPoly<Int> f(3);
    MPoly<GaussInt> g(3);
    int d = 1 + static_cast<int>(rng() % 4);
    for (int a = 0; a <= d; ++a)
      for (int b = 0; a + b <= d; ++b) {
        f.add_term({a, b, d - a - b}, Int(dc(rng)));
        g.add_term({a, b, d - a - b}, GaussInt(Int(dc(rng)), Int(dc(rng))));
      }
    if (!f.is_zero()) CHECK(shift_for_top_coefficient(Q, f).certificate);
    if (!g.is_zero()) CHECK(shift_for_top_coefficient(G, g).certificate);
  }
}

TEST_CASE("nonvanishing points") {
  RationalField Q;
  auto p = nonvanishing_point(Q, parse_poly(Q, "x1*x2", 3), 3);
  CHECK(p[1] != 0);
  CHECK(p[2] != 0);
  CHECK(nonvanishing_point(Q, parse_poly(Q, "x0 - x1"), 2) == std::vector<Int>{1, 0});
  auto r = nonvanishing_point(Q, parse_poly(Q, "(x0 - 1)*(x0 - 2)"), 3);
  CHECK(r[0] == 0);
  std::mt19937_64 rng(46);
  FunctionField F3(3);
  for (int i = 0; i < 50; ++i) {
    MPoly<FpPoly> f(2);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b) f.add_term({a, b}, F3.random(rng, 2));
    if (f.is_zero()) continue;
    auto x = nonvanishing_point(F3, f, f.degree() + 1);
    CHECK_FALSE(f.eval(x).is_zero());
  }
}
