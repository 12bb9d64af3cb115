#include <random>
#include <set>

#include "doctest.h"
#include "detlab/detmethod.hpp"
#include "detlab/hilbert.hpp"
#include "detlab/poly_io.hpp"

using namespace detlab;

namespace {

std::vector<GFElem> residue(std::uint32_t p, std::vector<long> xs) {
  std::vector<GFElem> out;
  for (long x : xs) out.push_back(GFElem::from_long(GFContext::prime_field(p), x));
  return out;
}

std::vector<Int> ipt(std::vector<long> xs) { return std::vector<Int>(xs.begin(), xs.end()); }

// g vanishes at every point and is not a multiple of f (remainder on division by f).
template <class Field>
void check_aux(const Field& F, const MPoly<typename Field::Elem>& f, const AuxResult<typename Field::Elem>& r) {
  using E = typename Field::Elem;
  using K = typename Field::K;
  REQUIRE_FALSE(r.g.is_zero());
  for (const auto& x : r.points) CHECK(RingOps<E>::is_zero(r.g.eval(x)));
  CHECK(r.g.degree() == r.M);
  auto to_k = [](const MPoly<E>& p) { return p.template map_coeffs<K>([](const E& c) { return K(c); }); };
  MonomialOrder ord{OrderKind::Grevlex, f.nvars()};
  CHECK_FALSE(normal_form(to_k(r.g), std::vector<MPoly<K>>{to_k(f)}, ord).is_zero());
  CHECK_FALSE(r.f_divides_g);
  CHECK(r.vanishes);
  CHECK(r.s == r.points.size());
  (void)F;
}

}  // namespace

TEST_CASE("monomial bases") {
  CHECK(monomial_basis(3, 2).size() == 6);
  for (int v = 1; v <= 5; ++v) CHECK(monomial_basis(v, 0).size() == 1);
  CHECK(monomial_basis(2, 5).size() == 6);
  for (int v = 1; v <= 4; ++v)
    for (int D = 0; D <= 8; ++D) {
      Int b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(D + v - 1), static_cast<unsigned long>(v - 1));
      auto basis = monomial_basis(v, D);
      CHECK(Int(static_cast<unsigned long>(basis.size())) == b);
      CHECK(std::set<Exponent>(basis.begin(), basis.end()).size() == basis.size());
    }
  CHECK(affine_monomial_basis(2, 2).size() == 6);
}

TEST_CASE("evaluation matrices") {
  RationalField Q;
  auto A = evaluation_matrix(Q, {ipt({1, 0, 0}), ipt({0, 0, 1})}, 3, 1);
  CHECK(A.row(0) == ipt({1, 0, 0}));
  CHECK(A.row(1) == ipt({0, 0, 1}));
  auto B = evaluation_matrix(Q, {ipt({1, 1, 1})}, 3, 2);
  CHECK(B.row(0) == std::vector<Int>(6, Int(1)));
  CHECK(evaluation_matrix(Q, {ipt({1, 2, 4})}, 3, 1).row(0) == ipt({1, 2, 4}));
  CHECK_THROWS_AS(evaluation_matrix(Q, {ipt({2, 4, 6})}, 3, 1), DomainError);
}

TEST_CASE("local determinant certificates") {
  RationalField Q;
  auto f = parse_poly(Q, "x0*x2 - x1^2");
  auto p5 = Q.prime_of(Int(5));
  auto P = residue(5, {1, 1, 1});
  std::vector<MPoly<Int>> lin{parse_poly(Q, "x0", 3), parse_poly(Q, "x1", 3), parse_poly(Q, "x2", 3)};
  auto c3 = local_det_check(Q, f, p5, P, {ipt({1, 1, 1}), ipt({1, 6, 36}), ipt({1, 11, 121})}, lin);
  CHECK(c3.det == 250);
  CHECK(c3.ord == 3);
  CHECK(c3.A == 3);
  CHECK(c3.ok);
  auto c2 = local_det_check(Q, f, p5, P, {ipt({1, 1, 1}), ipt({1, 6, 36})}, {lin[0], lin[1]});
  CHECK(abs(c2.det) == 5);
  CHECK(c2.ord == 1);
  CHECK(c2.A == 1);
  CHECK(c2.ok);
  auto c1 = local_det_check(Q, f, p5, P, {ipt({1, 1, 1})}, {lin[0]});
  CHECK(c1.A == 0);
  CHECK(c1.ok);
  CHECK_THROWS_AS(local_det_check(Q, f, p5, P, {ipt({1, 2, 4})}, {lin[0]}), DomainError);
  CHECK_THROWS_AS(local_det_check(Q, f, p5, P, {ipt({1, 1, 2})}, {lin[0]}), DomainError);
  CHECK_THROWS_AS(local_det_check(Q, f, p5, P, {ipt({1, 1, 1})}, {parse_poly(Q, "x0 + 1", 3)}), DomainError);
}

TEST_CASE("local determinant bound on random instances") {
  // Points on the conic (u^2 : u v : v^2) and the cusp (v^3 : u^2 v : u^3) with
  // u = c + k p, v = 1, pushed through a random unimodular change of coordinates.
  std::mt19937_64 rng(71);
  RationalField Q;
  const std::uint32_t primes[] = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  std::uniform_int_distribution<long> small(-2, 2), coef(-4, 4);
  for (int t = 0; t < 100; ++t) {
    bool cusp = t % 2;
    std::uint32_t p = primes[rng() % 13];
    long c = static_cast<long>(rng() % p);
    std::size_t s = 1 + rng() % 5;
    // T = E1 E2 with unipotent elementary factors; T^{-1} is explicit.
    long a = small(rng), b = small(rng);
    auto f0 = parse_poly(Q, cusp ? "x0*x2^2 - x1^3" : "x0*x2 - x1^2");
    // f(x) = f0(T x) with T: x0 += a x1, x1 += b x2.
    std::vector<MPoly<Int>> subs{parse_poly(Q, "x0", 3) + parse_poly(Q, "x1", 3).scaled(Int(a)),
                                 parse_poly(Q, "x1", 3) + parse_poly(Q, "x2", 3).scaled(Int(b)), parse_poly(Q, "x2", 3)};
    auto f = f0.compose(subs);
    auto Tinv = [&](std::vector<Int> y) {
      Int x2 = y[2], x1 = y[1] - b * x2, x0 = y[0] - a * x1;
      return std::vector<Int>{x0, x1, x2};
    };
    std::vector<std::vector<Int>> pts;
    for (std::size_t i = 0; i < s; ++i) {
      Int u = c + Int(static_cast<long>(i)) * p;
      std::vector<Int> y = cusp ? std::vector<Int>{Int(1), u * u, u * u * u} : std::vector<Int>{Int(1), u, u * u};
      pts.push_back(Tinv(y));
    }
    std::vector<long> pr;
    for (const auto& x : pts.front()) pr.push_back(static_cast<long>(mpz_fdiv_ui(x.get_mpz_t(), p)));
    std::vector<MPoly<Int>> forms;
    for (std::size_t j = 0; j < s; ++j) {
      int deg = 1 + static_cast<int>(rng() % 3);
      MPoly<Int> g(3);
      for (const auto& e : monomial_basis(3, deg)) g.add_term(e, Int(coef(rng)));
      if (g.is_zero()) g.add_term(monomial_basis(3, deg).front(), Int(1));
      forms.push_back(g);
    }
    auto cert = local_det_check(Q, f, Q.prime_of(Int(p)), residue(p, pr), pts, forms);
    INFO("p=", p, " c=", c, " s=", s, " cusp=", cusp);
    CHECK(cert.ok);
  }
}

TEST_CASE("projective auxiliary polynomials") {
  RationalField Q;
  auto f = parse_poly(Q, "x0*x2 - x1^2");
  auto r = aux_polynomial_proj(Q, f, Int(2));
  CHECK(r.M == 2);
  CHECK(r.s == 4);
  check_aux(Q, f, r);
  auto r1 = aux_polynomial_proj(Q, f, Int(1));
  CHECK(r1.M <= 2);
  check_aux(Q, f, r1);
  FunctionField F3(3);
  auto ff = parse_poly(F3, "x0*x2 - x1^2");
  auto r3 = aux_polynomial_proj(F3, ff, Int(3));
  check_aux(F3, ff, r3);
  CHECK(r3.below_bound);
}

TEST_CASE("affine auxiliary polynomials") {
  RationalField Q;
  auto hyp = parse_affine_poly(Q, "x1*x2 - 1");
  auto h = aux_polynomial_aff(Q, hyp, Int(3));
  CHECK(h.s == 2);
  check_aux(Q, hyp, h);
  auto par = parse_affine_poly(Q, "x2 - x1^2");
  auto pr = aux_polynomial_aff(Q, par, Int(2));
  std::set<std::vector<Int>> got(pr.points.begin(), pr.points.end());
  CHECK(got == std::set<std::vector<Int>>{ipt({-1, 1}), ipt({0, 0}), ipt({1, 1})});
  CHECK(pr.M <= 2);
  check_aux(Q, par, pr);
  auto line = parse_affine_poly(Q, "x1", 2);
  auto lr = aux_polynomial_aff(Q, line, Int(1));
  CHECK(lr.s == 3);
  check_aux(Q, line, lr);
}

TEST_CASE("kernel bookkeeping and monotone degree") {
  RationalField Q;
  GaussianField G;
  auto f = parse_poly(Q, "x0*x2 - x1^2");
  int prev = 0;
  for (int B = 1; B <= 8; ++B) {
    auto r = aux_polynomial_proj(Q, f, Int(B));
    check_aux(Q, f, r);
    CHECK(r.kernel_dim == monomial_basis(3, r.M).size() - r.rank);
    CHECK(Int(static_cast<unsigned long>(r.kernel_dim)) > r.excluded_dim);
    CHECK(r.M >= prev);
    prev = r.M;
  }
  auto cusp = parse_poly(G, "x0*x2^2 - x1^3");
  for (int B = 1; B <= 10; B += 3) check_aux(G, cusp, aux_polynomial_proj(G, cusp, Int(B)));
}

TEST_CASE("f times lower-degree monomials lies in the kernel") {
  RationalField Q;
  auto f = parse_poly(Q, "x0*x2^2 - x1^3");
  auto r = aux_polynomial_proj(Q, f, Int(30));
  for (const auto& m : monomial_basis(3, std::max(0, r.M - 3))) {
    auto fm = f * MPoly<Int>::monomial(m, Int(1));
    for (const auto& x : r.points) CHECK(fm.eval(x) == 0);
  }
}

TEST_CASE("global valuation experiment") {
  RationalField Q;
  auto conic = parse_poly(Q, "x0*x2 - x1^2");
  auto a = global_valuation_experiment(Q, conic, Int(50), 10);
  CHECK(a.s == 10);
  CHECK(a.weighted_sum >= 0);
  CHECK(a.all_local_ok);
  auto b = global_valuation_experiment(Q, parse_poly(Q, "x0*x2^2 - x1^3"), Int(50), 8);
  CHECK(b.s == 8);
  CHECK(b.all_local_ok);
  auto c = global_valuation_experiment(Q, conic, Int(50), 1);
  CHECK(c.weighted_sum == 0);
}
