#include "detlab/linalg.hpp"

#include <algorithm>

namespace detlab {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t m) {
  std::vector<std::vector<std::size_t>> out;
  if (m > n) return out;
  std::vector<std::size_t> c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = i;
  while (true) {
    out.push_back(c);
    std::size_t i = m;
    while (i > 0 && c[i - 1] == n - m + i - 1) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < m; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

Rat arakelov_height_sq(const Matrix<Int>& A) {
  Int delta = maximal_minor_gcd(A);
  Matrix<Int> G(A.rows, A.rows, Int(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.rows; ++j)
      for (std::size_t k = 0; k < A.cols; ++k) G(i, j) += A(i, k) * A(j, k);
  Rat r(bareiss_det(G), Int(delta * delta));
  r.canonicalize();
  return r;
}

Rat arakelov_height_sq(const Matrix<FpPoly>& A) {
  FpPoly delta = maximal_minor_gcd(A);
  std::uint32_t q = 0;
  for (const auto& x : A.data)
    if (!x.universal()) q = x.modulus();
  int top = -1;
  for (const auto& J : combinations(A.cols, A.rows)) {
    FpPoly d = bareiss_det(column_submatrix(A, J));
    if (!d.is_zero()) top = std::max(top, d.degree());
  }
  int e = top - delta.degree();
  if (e == 0) return 1;
  if (q == 0) throw DomainError("cannot determine q from constant entries");
  return Rat(pow_int(Int(static_cast<unsigned long>(q)), static_cast<unsigned long>(2 * e)));
}

Rat arakelov_height_sq(const Matrix<GaussInt>&) {
  throw DomainError("arakelov_height_sq is implemented for Q and Fq(T) only");
}

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int round_rat(const Rat& x) {
  Int num = 2 * x.get_num() + x.get_den(), den = 2 * x.get_den(), q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

struct GramSchmidt {
  std::vector<std::vector<Rat>> bstar;
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> B;
};

GramSchmidt gram_schmidt(const std::vector<std::vector<Int>>& b) {
  std::size_t m = b.size();
  GramSchmidt gs;
  gs.bstar.resize(m);
  gs.mu.assign(m, std::vector<Rat>(m, Rat(0)));
  gs.B.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rat> v(b[i].begin(), b[i].end());
    std::vector<Rat> orig = v;
    for (std::size_t j = 0; j < i; ++j) {
      gs.mu[i][j] = dot(orig, gs.bstar[j]) / gs.B[j];
      for (std::size_t k = 0; k < v.size(); ++k) v[k] -= gs.mu[i][j] * gs.bstar[j][k];
    }
    gs.B[i] = dot(v, v);
    gs.bstar[i] = std::move(v);
  }
  return gs;
}

int row_pivot(const std::vector<FpPoly>& r) {
  int best = -1, deg = -1;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (!r[j].is_zero() && r[j].degree() >= deg) {
      deg = r[j].degree();
      best = static_cast<int>(j);
    }
  return best;
}

}  // namespace

std::vector<std::vector<Int>> lll_reduce(std::vector<std::vector<Int>> b, const Rat& delta) {
  std::size_t m = b.size();
  if (m <= 1) return b;
  GramSchmidt gs = gram_schmidt(b);
  std::size_t k = 1;
  std::size_t guard = 0;
  while (k < m) {
    if (++guard > 1000000) throw DomainError("LLL did not terminate");
    for (std::size_t jj = k; jj-- > 0;) {
      Int r = round_rat(gs.mu[k][jj]);
      if (r == 0) continue;
      for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= r * b[jj][c];
      for (std::size_t l = 0; l < jj; ++l) gs.mu[k][l] -= Rat(r) * gs.mu[jj][l];
      gs.mu[k][jj] -= Rat(r);
    }
    Rat mk = gs.mu[k][k - 1];
    if (gs.B[k] >= (delta - mk * mk) * gs.B[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gs = gram_schmidt(b);
      k = std::max<std::size_t>(k - 1, 1);
    }
  }
  return b;
}

std::vector<std::vector<FpPoly>> popov_reduce(std::vector<std::vector<FpPoly>> b) {
  std::uint32_t p = 0;
  for (const auto& r : b)
    for (const auto& x : r)
      if (!x.universal()) p = x.modulus();
  if (p == 0) return b;
  for (auto& r : b)
    for (auto& x : r) x = x.with_modulus(p);
  std::size_t guard = 0;
  while (true) {
    if (++guard > 100000) throw DomainError("weak Popov reduction did not terminate");
    bool changed = false;
    for (std::size_t i = 0; i < b.size() && !changed; ++i) {
      int pi = row_pivot(b[i]);
      if (pi < 0) continue;
      for (std::size_t k = 0; k < b.size() && !changed; ++k) {
        if (k == i || row_pivot(b[k]) != pi) continue;
        // Reduce the row with the larger pivot degree by the other one.
        std::size_t hi = b[i][pi].degree() >= b[k][pi].degree() ? i : k, lo = hi == i ? k : i;
        const FpPoly& a = b[hi][pi];
        const FpPoly& c = b[lo][pi];
        auto coef = static_cast<std::uint32_t>(mulmod(a.lead(), invmod(c.lead(), p), p));
        FpPoly f = FpPoly::monomial(p, coef, a.degree() - c.degree());
        for (std::size_t j = 0; j < b[hi].size(); ++j) b[hi][j] = b[hi][j] - f * b[lo][j];
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (auto& r : b) {
    for (const auto& x : r) {
      if (x.is_zero()) continue;
      FpPoly u = RingOps<FpPoly>::canonical_unit(x);
      for (auto& y : r) y = y * u;
      break;
    }
  }
  return b;
}

std::vector<std::vector<Int>> size_reduce(const std::vector<std::vector<Int>>& b) { return lll_reduce(b); }

std::vector<std::vector<FpPoly>> size_reduce(const std::vector<std::vector<FpPoly>>& b) { return popov_reduce(b); }

std::vector<std::vector<GaussInt>> size_reduce(const std::vector<std::vector<GaussInt>>& b) {
  if (b.empty()) return b;
  std::size_t n = b.front().size();
  std::vector<std::vector<Int>> z;
  for (const auto& v : b) {
    for (int twist = 0; twist < 2; ++twist) {
      std::vector<Int> w(2 * n);
      for (std::size_t j = 0; j < n; ++j) {
        GaussInt x = twist ? GaussInt::i() * v[j] : v[j];
        w[j] = x.re;
        w[n + j] = x.im;
      }
      z.push_back(std::move(w));
    }
  }
  z = lll_reduce(z);
  // Keep the first Z[i]-independent vectors among the reduced Z-basis.
  std::vector<std::vector<GaussInt>> out;
  std::vector<std::vector<Frac<GaussInt>>> rows;
  for (const auto& w : z) {
    std::vector<GaussInt> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = GaussInt(w[j], w[n + j]);
    rows.push_back(to_frac_vec(v));
    if (rank_field(Matrix<Frac<GaussInt>>::from_rows(rows)) == rows.size()) {
      out.push_back(std::move(v));
      if (out.size() == b.size()) break;
    } else {
      rows.pop_back();
    }
  }
  return out;
}

}  // namespace detlab
