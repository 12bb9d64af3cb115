#include <cmath>
#include <random>

#include "doctest.h"
#include "detlab/badprimes.hpp"
#include "detlab/constants.hpp"
#include "detlab/field.hpp"
#include "detlab/hilbert.hpp"
#include "detlab/poly_io.hpp"

using namespace detlab;
using namespace detlab::constants;

namespace {

using QPoly = MPoly<Frac<Int>>;

QPoly qp(const std::string& s, int v = 3) { return parse_poly_k(RationalField{}, s, v); }

MonomialOrder order(OrderKind k, int v) { return MonomialOrder{k, v}; }

Int binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Standard monomials of degree k in 3 variables, by nested loops.
std::vector<Exponent> standard3(const std::vector<Exponent>& gens, int k) {
  std::vector<Exponent> out;
  for (int a = 0; a <= k; ++a)
    for (int b = 0; a + b <= k; ++b) {
      Exponent e{a, b, k - a - b};
      bool in = false;
      for (const auto& g : gens) in = in || (g[0] <= e[0] && g[1] <= e[1] && g[2] <= e[2]);
      if (!in) out.push_back(e);
    }
  return out;
}

QPoly random_poly(std::mt19937_64& rng, int v, int d, bool homogeneous) {
  std::uniform_int_distribution<long> dc(-5, 5);
  QPoly f(v);
  for (const auto& e : monomials_of_degree(v, d)) f.add_term(e, Frac<Int>(Int(dc(rng))));
  if (!homogeneous)
    for (int k = 0; k < d; ++k)
      for (const auto& e : monomials_of_degree(v, k))
        if (rng() % 3 == 0) f.add_term(e, Frac<Int>(Int(dc(rng))));
  return f;
}

// Every S-polynomial reduces to zero.
template <class C>
bool buchberger_criterion(const std::vector<MPoly<C>>& G, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      auto a = leading_monomial(G[i], ord), b = leading_monomial(G[j], ord);
      Exponent l(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) l[t] = std::max(a[t], b[t]);
      Exponent ua(a.size()), ub(a.size());
      for (std::size_t t = 0; t < a.size(); ++t) {
        ua[t] = l[t] - a[t];
        ub[t] = l[t] - b[t];
      }
      C ca = G[i].coefficient(a), cb = G[j].coefficient(b);
      MPoly<C> s = MPoly<C>::monomial(ua, C(1) / ca) * G[i] - MPoly<C>::monomial(ub, C(1) / cb) * G[j];
      if (!normal_form(s, G, ord).is_zero()) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("Groebner bases of small ideals") {
  auto ord = order(OrderKind::Grevlex, 3);
  auto g = groebner_basis(std::vector<QPoly>{qp("x0*x2 - x1^2")}, ord);
  REQUIRE(g.size() == 1);
  auto f = qp("x0*x2 - x1^2");
  CHECK(g[0] == f.scaled(Frac<Int>(Int(1)) / f.coefficient(leading_monomial(f, ord))));
  auto m = groebner_basis(std::vector<QPoly>{qp("x0^2"), qp("x0*x1")}, ord);
  CHECK(leading_ideal(m, ord).gens.size() == 2);
  auto lin = groebner_basis(std::vector<QPoly>{qp("x0 - x1"), qp("x1 - x2")}, order(OrderKind::Grlex, 3));
  auto lt = leading_ideal(lin, order(OrderKind::Grlex, 3));
  auto want = MonomialIdeal::from(3, {{1, 0, 0}, {0, 1, 0}});
  CHECK(lt.gens.size() == want.gens.size());
  for (const auto& e : want.gens) CHECK(lt.contains(e));
  CHECK(parse_order("grlex") == OrderKind::Grlex);
  CHECK_THROWS_AS(parse_order("lex"), ParseError);
}

TEST_CASE("Groebner caps") {
  auto ord = order(OrderKind::Grevlex, 5);
  CHECK_THROWS_AS(groebner_basis(std::vector<QPoly>{qp("x4 - x0", 5)}, ord), BudgetExceeded);
  auto o3 = order(OrderKind::Grevlex, 3);
  CHECK_THROWS_AS(groebner_basis(std::vector<QPoly>{qp("x0^7 - x1^7")}, o3), BudgetExceeded);
}

TEST_CASE("Hilbert function values") {
  auto ord = order(OrderKind::Grevlex, 3);
  auto conic = leading_ideal(groebner_basis(std::vector<QPoly>{qp("x0*x2 - x1^2")}, ord), ord);
  CHECK(hilbert_function(conic, 3) == 7);
  CHECK(hilbert_function(MonomialIdeal::from(3, {{0, 2, 0}}), 2) == 5);
  CHECK(hilbert_function(MonomialIdeal::from(3, {}), 2) == 6);
}

TEST_CASE("sigma values") {
  auto s = sigma(MonomialIdeal::from(3, {{0, 2, 0}}), 2);
  CHECK(s == std::vector<Int>{4, 2, 4});
  auto t = sigma(MonomialIdeal::from(2, {{2, 0}}), 3);
  CHECK(t == std::vector<Int>{1, 5});
  CHECK(hilbert_function(MonomialIdeal::from(2, {{2, 0}}), 3) == 2);
  CHECK(sigma(MonomialIdeal::from(2, {}), 1) == std::vector<Int>{1, 1});
}

TEST_CASE("staircase sums") {
  CHECK(staircase_A(1, 1, 4) == 6);
  CHECK(staircase_A(2, 1, 5) == 6);
  CHECK(staircase_A(1, 2, 3) == 2);
  for (long s = 1; s <= 200; ++s) CHECK(staircase_A(1, 1, s) == Int(s * (s - 1) / 2));
  // Explicit sequences reproduce the formula.
  for (int mu = 1; mu <= 4; ++mu)
    for (int r = 1; r <= 3; ++r) {
      std::vector<Int> g;
      for (int k = 0; k < 60; ++k) g.push_back(tangent_cone_g(mu, r, k));
      for (long s = 1; s <= 300; s += 7) CHECK(staircase_A(g, s) == staircase_A(mu, r, s));
    }
}

TEST_CASE("staircase lower bound") {
  for (int r = 1; r <= 3; ++r)
    for (int mu = 1; mu <= 4; ++mu) {
      double fact = std::tgamma(r + 1.0);
      double lead = std::pow(fact / mu, 1.0 / r) * r / (r + 1.0);
      for (long s = 1; s <= 2000; s = s * 5 / 4 + 1) {
        double A = staircase_A(mu, r, s).get_d();
        CHECK(A >= lead * std::pow(static_cast<double>(s), 1.0 + 1.0 / r) - kStaircaseC * s);
      }
    }
}

TEST_CASE("sigma identity and enumeration oracle on monomial ideals") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 60; ++i) {
    std::vector<Exponent> gens;
    int ng = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < ng; ++j) gens.push_back({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    auto I = MonomialIdeal::from(3, gens);
    auto rep = hilbert_report(I, 10);
    for (const auto& row : rep.rows) {
      auto std_mons = standard3(gens, row.k);
      CHECK(row.h == Int(static_cast<unsigned long>(std_mons.size())));
      std::vector<Int> sg(3, Int(0));
      for (const auto& e : std_mons)
        for (int m = 0; m < 3; ++m) sg[static_cast<std::size_t>(m)] += e[static_cast<std::size_t>(m)];
      CHECK(row.sigma == sg);
      CHECK(sg[0] + sg[1] + sg[2] == Int(row.k) * row.h);
      if (!row.ratio.empty()) CHECK(row.ratio[0] + row.ratio[1] + row.ratio[2] == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("principal ideals follow the binomial formula") {
  std::mt19937_64 rng(62);
  for (int v = 2; v <= 4; ++v)
    for (int d = 1; d <= 5; ++d) {
      auto f = random_poly(rng, v, d, true);
      if (f.is_zero()) continue;
      auto ord = order(OrderKind::Grevlex, v);
      auto I = leading_ideal(groebner_basis(std::vector<QPoly>{f}, ord), ord);
      for (int k = 0; k <= 12; ++k) CHECK(hilbert_function(I, k) == binom(k + v - 1, v - 1) - binom(k - d + v - 1, v - 1));
    }
}

TEST_CASE("Hilbert function does not depend on the graded order") {
  std::mt19937_64 rng(63);
  for (int i = 0; i < 20; ++i) {
    int v = 3;
    std::vector<QPoly> gens{random_poly(rng, v, 2, true), random_poly(rng, v, 2 + static_cast<int>(rng() % 2), true)};
    auto og = order(OrderKind::Grlex, v), orv = order(OrderKind::Grevlex, v);
    auto Gg = groebner_basis(gens, og);
    auto Gr = groebner_basis(gens, orv);
    CHECK(buchberger_criterion(Gg, og));
    CHECK(buchberger_criterion(Gr, orv));
    for (const auto& g : gens) {
      CHECK(normal_form(g, Gg, og).is_zero());
      CHECK(normal_form(g, Gr, orv).is_zero());
    }
    auto Ig = leading_ideal(Gg, og), Ir = leading_ideal(Gr, orv);
    for (int k = 0; k <= 8; ++k) CHECK(hilbert_function(Ig, k) == hilbert_function(Ir, k));
  }
}

TEST_CASE("Groebner bases over a prime field") {
  RationalField Q;
  auto p = Q.prime_of(Int(7));
  auto ord = order(OrderKind::Grevlex, 3);
  std::vector<MPoly<GFElem>> gens{reduce_mod(Q, parse_poly(Q, "x0*x2 - x1^2"), p), reduce_mod(Q, parse_poly(Q, "x0^2 - x1*x2"), p)};
  auto G = groebner_basis(gens, ord);
  CHECK(buchberger_criterion(G, ord));
  for (const auto& g : gens) CHECK(normal_form(g, G, ord).is_zero());
}
