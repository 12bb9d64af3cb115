#include <random>

#include "doctest.h"
#include "detlab/badprimes.hpp"
#include "detlab/field.hpp"
#include "detlab/heights.hpp"
#include "detlab/poly_io.hpp"

using namespace detlab;

TEST_CASE("make_field parses the three field specs") {
  auto q = make_field("Q");
  CHECK(q.kind == FieldKind::Rationals);
  CHECK(q.dK == 1);
  auto f = make_field("Fq(T):q=5");
  CHECK(f.kind == FieldKind::FunctionField);
  CHECK(f.q == 5);
  CHECK(f.dK == 1);
  auto g = make_field("Qi");
  CHECK(g.kind == FieldKind::Gaussian);
  CHECK(g.dK == 2);
  CHECK(g.c1 == 1);
  CHECK(g.c2 == 1);
  CHECK(g.c3 == 1);
  CHECK_THROWS_AS(make_field("Fq(T):q=4"), ParseError);
  CHECK_THROWS_AS(make_field("R"), ParseError);
  CHECK_THROWS_AS(make_field("Fq(T):q="), ParseError);
}

TEST_CASE("valuations at a prime") {
  RationalField Q;
  CHECK(Q.ord(Q.prime_of(Int(2)), Int(12)) == 2);
  FunctionField F3(3);
  auto x = parse_elem(F3, "t^2/(t+1)");
  CHECK(ord_frac(F3, F3.prime_of(F3.t()), x) == 2);
  GaussianField G;
  CHECK(G.ord(G.prime_of(GaussInt(Int(1), Int(1))), GaussInt(2)) == 2);
  CHECK_THROWS_AS(ord_frac(Q, Q.prime_of(Int(2)), Frac<Int>(0)), DomainError);
}

TEST_CASE("valuation is additive") {
  std::mt19937_64 rng(11);
  RationalField Q;
  GaussianField G;
  FunctionField F2(2);
  for (int i = 0; i < 200; ++i) {
    Int a = Q.random(rng, 5000), b = Q.random(rng, 5000);
    if (a == 0 || b == 0) continue;
    for (const auto& p : Q.primes_up_to(Int(20))) CHECK(Q.ord(p, a * b) == Q.ord(p, a) + Q.ord(p, b));
    GaussInt u = G.random(rng, 60), v = G.random(rng, 60);
    if (u.is_zero() || v.is_zero()) continue;
    for (const auto& p : G.primes_up_to(Int(30))) CHECK(G.ord(p, u * v) == G.ord(p, u) + G.ord(p, v));
    FpPoly s = F2.random(rng, 6), t = F2.random(rng, 6);
    if (s.is_zero() || t.is_zero()) continue;
    for (const auto& p : F2.primes_up_to(Int(16))) CHECK(F2.ord(p, s * t) == F2.ord(p, s) + F2.ord(p, t));
  }
}

TEST_CASE("product formula on the listed elements") {
  CHECK(product_formula_check(RationalField{}, Frac<Int>(Int(3), Int(2))) == 1);
  FunctionField F2(2);
  CHECK(product_formula_check(F2, Frac<FpPoly>(F2.t())) == 1);
  CHECK(product_formula_check(GaussianField{}, Frac<GaussInt>(GaussInt(Int(1), Int(1)))) == 1);
  CHECK_THROWS_AS(product_formula_check(RationalField{}, Frac<Int>(0)), DomainError);
}

TEST_CASE("primes up to a bound") {
  RationalField Q;
  std::vector<Int> norms;
  for (const auto& p : Q.primes_up_to(Int(10))) norms.push_back(p.norm);
  CHECK(norms == std::vector<Int>{2, 3, 5, 7});
  CHECK(Q.primes_up_to(Int(1)).empty());

  FunctionField F2(2);
  auto fp = F2.primes_up_to(Int(4));
  REQUIRE(fp.size() == 3);
  CHECK(fp[0].norm == 2);
  CHECK(fp[1].norm == 2);
  CHECK(fp[2].norm == 4);
  // Exhaustive oracle: the irreducible quadratic over F_2 has no root.
  CHECK(RingOps<FpPoly>::to_string(fp[2].gen) == "t^2+t+1");

  GaussianField G;
  std::vector<Int> gn;
  for (const auto& p : G.primes_up_to(Int(5))) gn.push_back(p.norm);
  CHECK(gn == std::vector<Int>{2, 5, 5});
  // Inert primes have norm p^2.
  bool saw9 = false;
  for (const auto& p : G.primes_up_to(Int(10))) saw9 = saw9 || p.norm == 9;
  CHECK(saw9);
}

TEST_CASE("Gaussian primes are pairwise non-associate") {
  GaussianField G;
  auto ps = G.primes_up_to(Int(200));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i].norm != ps[j].norm) continue;
      // Associates divide each other.
      CHECK_FALSE(divides(ps[i].gen, ps[j].gen));
    }
}

TEST_CASE("reduction modulo a prime") {
  RationalField Q;
  auto f = parse_poly(Q, "x0^2 - 5*x1^2");
  CHECK(to_text(reduce_mod(Q, f, Q.prime_of(Int(5)))) == "x0^2");
  auto R3 = Q.residue(Q.prime_of(Int(3)));
  CHECK(R3.reduce(Int(7)).in(R3.field) == GFElem::from_long(R3.field, 1));
  FunctionField F2(2);
  auto g = parse_poly(F2, "(t+1)*x0 + t*x1");
  CHECK(to_text(reduce_mod(F2, g, F2.prime_of(F2.t()))) == "x0");
  // Non-integral input.
  auto R = Q.residue(Q.prime_of(Int(3)));
  CHECK_THROWS_AS(reduce_frac(R, Frac<Int>(Int(1), Int(3))), DomainError);
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(12);
  GaussianField G;
  auto primes = G.primes_up_to(Int(30));
  std::uniform_int_distribution<long> dc(-9, 9);
  auto random_poly = [&]() {
    MPoly<GaussInt> f(2);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b + a <= 2; ++b) f.add_term({a, b}, GaussInt(Int(dc(rng)), Int(dc(rng))));
    return f;
  };
  for (int t = 0; t < 50; ++t) {
    auto f = random_poly(), g = random_poly();
    for (const auto& p : primes) {
      auto sum = reduce_mod(G, MPoly<GaussInt>(f + g), p);
      auto prod = reduce_mod(G, MPoly<GaussInt>(f * g), p);
      CHECK(sum == reduce_mod(G, f, p) + reduce_mod(G, g, p));
      CHECK(prod == reduce_mod(G, f, p) * reduce_mod(G, g, p));
    }
  }
}

TEST_CASE("residue fields of Gaussian primes") {
  GaussianField G;
  for (const auto& p : G.primes_up_to(Int(50))) {
    auto R = G.residue(p);
    CHECK(R.field->size() == p.norm);
  }
}

TEST_CASE("element literals") {
  GaussianField G;
  auto x = parse_elem(G, "(3+2i)/(1-i)");
  // (3+2i)(1+i)/2 = (1+5i)/2
  CHECK(x == Frac<GaussInt>(GaussInt(Int(1), Int(5)), GaussInt(2)));
  RationalField Q;
  CHECK(parse_elem(Q, "6/4") == Frac<Int>(Int(3), Int(2)));
  CHECK_THROWS_AS(parse_elem(Q, "1/0"), ParseError);
  CHECK_THROWS_AS(parse_elem(Q, "2+"), ParseError);
}
