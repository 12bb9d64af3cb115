#include <random>

#include "doctest.h"
#include "detlab/constants.hpp"
#include "detlab/field.hpp"
#include "detlab/linalg.hpp"

using namespace detlab;
using namespace detlab::constants;

namespace {

Matrix<Frac<Int>> qmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Frac<Int>>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(Int(x));
  }
  return Matrix<Frac<Int>>::from_rows(r);
}

Matrix<Int> zmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (long x : row) r.back().emplace_back(x);
  }
  return Matrix<Int>::from_rows(r);
}

// Rank modulo a prime by plain elimination.
std::size_t rank_mod(Matrix<Int> A, const Int& p) {
  std::size_t r = 0;
  for (auto& x : A.data) x = ((x % p) + p) % p;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t piv = r;
    while (piv < A.rows && A(piv, c) == 0) ++piv;
    if (piv == A.rows) continue;
    for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(r, j), A(piv, j));
    Int inv;
    mpz_invert(inv.get_mpz_t(), A(r, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r || A(i, c) == 0) continue;
      Int f = A(i, c) * inv % p;
      for (std::size_t j = 0; j < A.cols; ++j) A(i, j) = ((A(i, j) - f * A(r, j)) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Determinant by cofactor expansion (tiny matrices only).
Int cofactor_det(const std::vector<std::vector<Int>>& M) {
  std::size_t n = M.size();
  if (n == 1) return M[0][0];
  Int d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Int>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      sub.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) sub.back().push_back(M[i][k]);
    }
    Int t = M[0][j] * cofactor_det(sub);
    d += (j % 2 ? -t : t);
  }
  return d;
}

std::vector<Int> all_minors(const Matrix<Int>& A) {
  std::vector<Int> out;
  for (const auto& J : combinations(A.cols, A.rows)) {
    std::vector<std::vector<Int>> M(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
      for (auto j : J) M[i].push_back(A(i, j));
    out.push_back(cofactor_det(M));
  }
  return out;
}

Matrix<Int> random_full_rank(std::mt19937_64& rng, std::size_t m, std::size_t n, long box) {
  std::uniform_int_distribution<long> d(-box, box);
  while (true) {
    Matrix<Int> A(m, n);
    for (auto& x : A.data) x = d(rng);
    if (bareiss_rank(A) == m) return A;
  }
}

}  // namespace

TEST_CASE("rank and kernel") {
  RationalField Q;
  auto k = rank_kernel(Q, qmat({{1, 1}}));
  CHECK(k.rank == 1);
  REQUIRE(k.basis.size() == 1);
  CHECK(k.basis[0] == std::vector<Int>{1, -1});
  auto id = rank_kernel(Q, qmat({{1, 0}, {0, 1}}));
  CHECK(id.rank == 2);
  CHECK(id.basis.empty());
  FunctionField F3(3);
  FpPoly t = F3.t();
  Matrix<Frac<FpPoly>> A = Matrix<Frac<FpPoly>>::from_rows({{Frac<FpPoly>(t), Frac<FpPoly>(FpPoly(t * t))}});
  auto fk = rank_kernel(F3, A);
  CHECK(fk.rank == 1);
  REQUIRE(fk.basis.size() == 1);
  // (T, -1) up to a unit: the kernel is spanned by (t, -1).
  CHECK(fk.basis[0][0] * FpPoly(t) + fk.basis[0][1] * FpPoly(t * t) == FpPoly::constant(3, 0));
  CHECK(fk.basis[0][1].degree() == 0);
  CHECK(fk.basis[0][0].degree() == 1);
}

TEST_CASE("gcd of maximal minors") {
  CHECK(maximal_minor_gcd(zmat({{2, 4}})) == 2);
  CHECK(maximal_minor_gcd(zmat({{1, 0, 1}, {0, 1, 1}})) == 1);
  CHECK(abs(maximal_minor_gcd(zmat({{2, 0, 2}, {0, 2, 2}}))) == 4);
}

TEST_CASE("Arakelov heights") {
  CHECK(arakelov_height_sq(zmat({{2, 4}})) == 5);
  CHECK(arakelov_height_sq(zmat({{1, 0}})) == 1);
  FunctionField F2(2);
  Matrix<FpPoly> A = Matrix<FpPoly>::from_rows({{F2.t(), FpPoly::constant(2, 1)}});
  CHECK(arakelov_height_sq(A) == 4);
  Matrix<GaussInt> G = Matrix<GaussInt>::from_rows({{GaussInt(1), GaussInt(2)}});
  CHECK_THROWS_AS(arakelov_height_sq(G), DomainError);
}

TEST_CASE("small kernel solutions") {
  RationalField Q;
  auto a = small_kernel_solution(Q, qmat({{1, 1}}), Rat(kSmallSolutionC));
  CHECK(a.height == 1);
  CHECK(a.ok);
  auto b = small_kernel_solution(Q, qmat({{2, 4}}), Rat(kSmallSolutionC));
  CHECK(b.height == 2);
  CHECK(b.height_of_matrix == 2);
  CHECK(b.ok);
  auto c = small_kernel_solution(Q, qmat({{1, 2, 3}}), Rat(kSmallSolutionC));
  CHECK(c.ok);
  // Brute force: the smallest nonzero kernel vector of (1,2,3) has sup norm 1, e.g. (1,1,-1).
  CHECK(c.height == 1);
  CHECK_THROWS_AS(small_kernel_solution(Q, qmat({{1, 0}, {0, 1}}), Rat(kSmallSolutionC)), DomainError);
}

TEST_CASE("valuation of determinants") {
  RationalField Q;
  CHECK(padic_val_det(Q, zmat({{5, 0}, {0, 5}}), Q.prime_of(Int(5))) == 2);
  CHECK(padic_val_det(Q, zmat({{1, 1, 1}, {1, 6, 36}, {1, 11, 121}}), Q.prime_of(Int(5))) == 3);
  CHECK_FALSE(padic_val_det(Q, zmat({{1, 2}, {2, 4}}), Q.prime_of(Int(5))).has_value());
  FunctionField F3(3);
  Matrix<FpPoly> A = Matrix<FpPoly>::from_rows({{F3.t(), FpPoly::constant(3, 0)}, {FpPoly::constant(3, 0), FpPoly::constant(3, 1)}});
  CHECK(padic_val_det(F3, A, F3.prime_of(F3.t())) == 1);
}

TEST_CASE("Bareiss rank agrees with rank modulo large primes") {
  std::mt19937_64 rng(51);
  std::uniform_int_distribution<long> d(-50, 50), shape(1, 6);
  const Int primes[] = {Int("1000000007"), Int("998244353"), Int("2147483647"), Int("4294967291"), Int("1000000000039")};
  for (int i = 0; i < 500; ++i) {
    std::size_t m = static_cast<std::size_t>(shape(rng)), n = static_cast<std::size_t>(shape(rng));
    Matrix<Int> A(m, n);
    for (auto& x : A.data) x = d(rng);
    // Force some rank deficiency now and then.
    if (m >= 2 && i % 3 == 0)
      for (std::size_t j = 0; j < n; ++j) A(m - 1, j) = A(0, j) * 2 - A(1 % m, j);
    std::size_t r = bareiss_rank(A);
    for (const auto& p : primes) CHECK(rank_mod(A, p) == r);
  }
}

TEST_CASE("kernel bases are exact and primitive") {
  std::mt19937_64 rng(52);
  RationalField Q;
  std::uniform_int_distribution<long> d(-20, 20), shape(1, 5);
  for (int i = 0; i < 200; ++i) {
    std::size_t m = static_cast<std::size_t>(shape(rng)), n = static_cast<std::size_t>(shape(rng)) + 1;
    Matrix<Frac<Int>> A(m, n);
    for (auto& x : A.data) x = Frac<Int>(Int(d(rng)), Int(1 + (rng() % 4)));
    auto k = rank_kernel(Q, A);
    CHECK(k.basis.size() == n - k.rank);
    for (const auto& b : k.basis) {
      Int g = 0;
      for (const auto& x : b) g = gcd(g, x);
      CHECK(g == 1);
      for (std::size_t r = 0; r < m; ++r) {
        Frac<Int> s(Int(0));
        for (std::size_t j = 0; j < n; ++j) s = s + A(r, j) * Frac<Int>(b[j]);
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("maximal-minor gcd divides every minor") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 200; ++i) {
    std::size_t m = 1 + rng() % 3, n = m + 1 + rng() % 3;
    auto A = random_full_rank(rng, m, n, 30);
    Int D = maximal_minor_gcd(A);
    CHECK(D != 0);
    Int g = 0;
    for (const auto& x : all_minors(A)) {
      CHECK(x % D == 0);
      g = gcd(g, x);
    }
    CHECK(abs(D) == g);
  }
}

TEST_CASE("Arakelov height equals the kernel lattice covolume") {
  // Cauchy-Binet for det(A A^T), and the Gram determinant of the saturated kernel.
  std::mt19937_64 rng(54);
  for (int i = 0; i < 200; ++i) {
    std::size_t m = 1 + rng() % 3, n = m + 1 + rng() % 3;
    auto A = random_full_rank(rng, m, n, 50);
    Int ss = 0, g = 0;
    for (const auto& x : all_minors(A)) {
      ss += x * x;
      g = gcd(g, x);
    }
    Rat h2 = arakelov_height_sq(A);
    Rat cb(ss, g * g);
    cb.canonicalize();
    CHECK(h2 == cb);
    auto K = integral_kernel(A);
    std::vector<std::vector<Int>> gram(K.size(), std::vector<Int>(K.size()));
    for (std::size_t a = 0; a < K.size(); ++a)
      for (std::size_t b = 0; b < K.size(); ++b)
        for (std::size_t j = 0; j < n; ++j) gram[a][b] += K[a][j] * K[b][j];
    CHECK(Rat(cofactor_det(gram)) == h2);
  }
}

TEST_CASE("product of reduced kernel heights is bounded by the Arakelov height") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 200; ++i) {
    std::size_t m = 1 + rng() % 3, n = m + 1 + rng() % (6 - m);
    auto A = random_full_rank(rng, m, n, 50);
    auto B = size_reduce(integral_kernel(A));
    REQUIRE(B.size() == n - m);
    Int prod = 1;
    for (const auto& b : B) prod *= height_of_primitive(b);
    Rat lhs = Rat(prod * prod);
    Rat rhs = pow_rat(Rat(kSmallSolutionC), static_cast<long>(2 * (n - m))) * arakelov_height_sq(A);
    CHECK(lhs <= rhs);
    for (const auto& b : B) CHECK(mat_vec(A, b) == std::vector<Int>(m, Int(0)));
  }
}

TEST_CASE("small solutions meet the pinned bound on random systems") {
  std::mt19937_64 rng(56);
  GaussianField G;
  FunctionField F5(5);
  for (int i = 0; i < 100; ++i) {
    std::size_t m = 1 + rng() % 2, n = m + 1 + rng() % 3;
    Matrix<Frac<GaussInt>> A(m, n);
    for (auto& x : A.data) x = Frac<GaussInt>(G.random(rng, 30));
    Matrix<Frac<FpPoly>> B(m, n);
    for (auto& x : B.data) x = Frac<FpPoly>(F5.random(rng, 3));
    bool zero = true;
    for (auto& x : A.data) zero = zero && x.is_zero();
    if (!zero) {
      auto s = small_kernel_solution(G, A, Rat(kSmallSolutionC));
      CHECK(s.ok);
      CHECK(mat_vec(integral_rows(A), s.vector) == std::vector<GaussInt>(m, GaussInt(0)));
    }
    zero = true;
    for (auto& x : B.data) zero = zero && x.is_zero();
    if (!zero) {
      auto s = small_kernel_solution(F5, B, Rat(kSmallSolutionC));
      CHECK(s.ok);
    }
  }
}
