#include <random>

#include "doctest.h"
#include "detlab/field.hpp"
#include "detlab/heights.hpp"
#include "detlab/poly_io.hpp"

using namespace detlab;

namespace {

template <class Field>
Rat hk_point(const Field& F, const std::string& pt) {
  return relative_height_proj(F, parse_point(F, pt)).hk;
}

}  // namespace

TEST_CASE("projective heights") {
  CHECK(hk_point(RationalField{}, "2:4:6") == 3);
  CHECK(hk_point(FunctionField(2), "t:t+1") == 2);
  CHECK(hk_point(GaussianField{}, "1+i:2") == 2);
  CHECK(hk_point(RationalField{}, "1/2:1/3") == 3);
  CHECK_THROWS_AS(hk_point(RationalField{}, "0:0"), DomainError);
  auto h = relative_height_proj(GaussianField{}, parse_point(GaussianField{}, "3:4i"));
  CHECK(h.hk == 16);
  CHECK(h.h == doctest::Approx(4.0));
}

TEST_CASE("polynomial heights") {
  RationalField Q;
  auto conic = parse_poly(Q, "x0*x2 - x1^2");
  CHECK(poly_height(Q, conic, HeightMode::Projective).hk == 1);
  CHECK(poly_height(Q, conic, HeightMode::Affine).hk == 1);
  auto lin = parse_poly(Q, "6*x0 + 10*x1");
  CHECK(poly_height(Q, lin, HeightMode::Projective).hk == 5);
  CHECK(poly_height(Q, lin, HeightMode::Affine).hk == 10);
  CHECK_THROWS_AS(poly_height(Q, MPoly<Int>(2), HeightMode::Projective), DomainError);
}

TEST_CASE("Serre lifts") {
  RationalField Q;
  CHECK(primitive_lift(parse_point(Q, "1/2:1/3")) == std::vector<Int>{3, 2});
  FunctionField F3(3);
  auto l = primitive_lift(parse_point(F3, "1/t:1"));
  REQUIRE(l.size() == 2);
  CHECK(l[0] == FpPoly::constant(3, 1));
  CHECK(l[1] == F3.t());
  GaussianField G;
  auto g = primitive_lift(parse_point(G, "1+i:2"));
  CHECK(g == std::vector<GaussInt>{GaussInt(1), GaussInt(Int(1), Int(-1))});
}

TEST_CASE("height of evaluated forms") {
  RationalField Q;
  auto c1 = eval_height_bound_check(Q, {parse_poly(Q, "x0^2"), parse_poly(Q, "x1^2")}, parse_point(Q, "1:2"));
  CHECK(c1.lhs.hk == 4);
  CHECK(c1.rhs.hk == 4);
  CHECK(c1.ok);
  auto c2 = eval_height_bound_check(Q, {parse_poly(Q, "x0 + x1"), parse_poly(Q, "x0 - x1")}, parse_point(Q, "1:1"));
  CHECK(c2.lhs.hk == 1);  // (2:0) normalizes to (1:0)
  CHECK(c2.rhs.hk == 2);
  CHECK(c2.ok);
  FunctionField F2(2);
  auto c3 = eval_height_bound_check(F2, {parse_poly(F2, "x0*x1")}, parse_point(F2, "t:1"));
  CHECK(c3.lhs.hk == 2);
  CHECK(c3.ok);
  CHECK_THROWS_AS(eval_height_bound_check(Q, {parse_poly(Q, "x0*x1")}, parse_point(Q, "0:1")), DomainError);
}

TEST_CASE("height is invariant under scaling") {
  std::mt19937_64 rng(21);
  RationalField Q;
  GaussianField G;
  FunctionField F5(5);
  // Denominators drawn separately so they are never zero.
  for (int i = 0; i < 200; ++i) {
    std::vector<Frac<Int>> v;
    for (int j = 0; j < 3; ++j) {
      Int d = Q.random(rng, 50);
      if (d == 0) d = 1;
      v.emplace_back(Q.random(rng, 50), d);
    }
    Int a = Q.random(rng, 40), b = Q.random(rng, 40);
    if (a == 0 || b == 0) continue;
    Frac<Int> lam(a, b);
    auto w = v;
    for (auto& x : w) x = x * lam;
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    CHECK(relative_height_proj(Q, v).hk == relative_height_proj(Q, w).hk);
  }
  for (int i = 0; i < 200; ++i) {
    std::vector<Frac<GaussInt>> v;
    for (int j = 0; j < 3; ++j) {
      GaussInt d = G.random(rng, 8);
      if (d.is_zero()) d = GaussInt(1);
      v.emplace_back(G.random(rng, 8), d);
    }
    GaussInt a = G.random(rng, 8), b = G.random(rng, 8);
    if (a.is_zero() || b.is_zero()) continue;
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    Frac<GaussInt> lam(a, b);
    auto w = v;
    for (auto& x : w) x = x * lam;
    CHECK(relative_height_proj(G, v).hk == relative_height_proj(G, w).hk);
  }
  for (int i = 0; i < 200; ++i) {
    std::vector<Frac<FpPoly>> v;
    for (int j = 0; j < 3; ++j) {
      FpPoly d = F5.random(rng, 3);
      if (d.is_zero()) d = FpPoly::constant(5, 1);
      v.emplace_back(F5.random(rng, 3), d);
    }
    FpPoly a = F5.random(rng, 3), b = F5.random(rng, 3);
    if (a.is_zero() || b.is_zero()) continue;
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    Frac<FpPoly> lam(a, b);
    auto w = v;
    for (auto& x : w) x = x * lam;
    auto h = relative_height_proj(F5, v).hk;
    CHECK(h == relative_height_proj(F5, w).hk);
    // Function-field heights are powers of q.
    Int n = h.get_num();
    while (n % 5 == 0) n /= 5;
    CHECK(n == 1);
    CHECK(h.get_den() == 1);
  }
}

TEST_CASE("Gauss lemma for function-field polynomial heights") {
  std::mt19937_64 rng(22);
  FunctionField F3(3);
  auto rp = [&]() {
    MPoly<FpPoly> f(2);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; a + b <= 2; ++b) f.add_term({a, b}, F3.random(rng, 3));
    return f;
  };
  int done = 0;
  while (done < 200) {
    auto f = rp(), h = rp();
    if (f.is_zero() || h.is_zero()) continue;
    ++done;
    auto hf = poly_height(F3, f, HeightMode::Projective).hk;
    auto hh = poly_height(F3, h, HeightMode::Projective).hk;
    CHECK(poly_height(F3, MPoly<FpPoly>(f * h), HeightMode::Projective).hk == hf * hh);
  }
}

TEST_CASE("norm is bounded by height") {
  std::mt19937_64 rng(23);
  RationalField Q;
  GaussianField G;
  FunctionField F2(2);
  for (int i = 0; i < 500; ++i) {
    Int x = Q.random(rng, 100000);
    if (x != 0) CHECK(Rat(Q.norm(x)) <= relative_height_proj(Q, std::vector<Int>{Int(1), x}).hk);
    GaussInt g = G.random(rng, 300);
    if (!g.is_zero()) CHECK(Rat(G.norm(g)) <= relative_height_proj(G, std::vector<GaussInt>{GaussInt(1), g}).hk);
    FpPoly p = F2.random(rng, 10);
    if (!p.is_zero())
      CHECK(Rat(F2.norm(p)) <= relative_height_proj(F2, std::vector<FpPoly>{FpPoly::constant(2, 1), p}).hk);
  }
}

TEST_CASE("affine polynomial height dominates projective height") {
  std::mt19937_64 rng(24);
  GaussianField G;
  for (int i = 0; i < 200; ++i) {
    MPoly<GaussInt> f(3);
    for (int a = 0; a <= 2; ++a) f.add_term({a, 2 - a, 0}, G.random(rng, 20));
    if (f.is_zero()) continue;
    auto p = poly_height(G, f, HeightMode::Projective).hk;
    auto a = poly_height(G, f, HeightMode::Affine).hk;
    CHECK(p >= 1);
    CHECK(a >= p);
  }
}

TEST_CASE("lifts re-normalize to themselves") {
  std::mt19937_64 rng(25);
  GaussianField G;
  for (int i = 0; i < 200; ++i) {
    std::vector<GaussInt> v{G.random(rng, 30), G.random(rng, 30), G.random(rng, 30)};
    if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero()) continue;
    auto l = primitive_lift(v);
    CHECK(primitive_lift(l) == l);
  }
}
