#pragma once

#include <optional>
#include <vector>

#include "detlab/field.hpp"
#include "detlab/heights.hpp"

namespace detlab {

template <class T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill = T(0)) : rows(r), cols(c), data(r * c, fill) {}
  static Matrix from_rows(const std::vector<std::vector<T>>& rs) {
    Matrix m(rs.size(), rs.empty() ? 0 : rs.front().size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (rs[i].size() != m.cols) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
    }
    return m;
  }
  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::vector<T> row(std::size_t i) const { return std::vector<T>(data.begin() + i * cols, data.begin() + (i + 1) * cols); }

  template <class U, class Fn>
  Matrix<U> map(Fn fn) const {
    Matrix<U> m(rows, cols, U(0));
    for (std::size_t k = 0; k < data.size(); ++k) m.data[k] = fn(data[k]);
    return m;
  }
};

template <class T>
std::vector<T> mat_vec(const Matrix<T>& A, const std::vector<T>& x) {
  std::vector<T> y(A.rows, T(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = 0; j < A.cols; ++j) y[i] += A(i, j) * x[j];
  return y;
}

// ------------------------------------------------------------------ fields

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t piv = r;
    while (piv < A.rows && A(piv, c) == T(0)) ++piv;
    if (piv == A.rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(piv, j), A(r, j));
    T inv = T(1) / A(r, c);
    for (std::size_t j = c; j < A.cols; ++j) A(r, j) = A(r, j) * inv;
    for (std::size_t i = 0; i < A.rows; ++i) {
      if (i == r || A(i, c) == T(0)) continue;
      T f = A(i, c);
      for (std::size_t j = c; j < A.cols; ++j) A(i, j) -= f * A(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t rank_field(Matrix<T> A) {
  return rref(A).size();
}

/// Basis of the right kernel over a field, one vector per free column
/// (ordered by free column).
template <class T>
std::vector<std::vector<T>> kernel_field(Matrix<T> A) {
  auto piv = rref(A);
  std::vector<bool> is_piv(A.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<T>> out;
  for (std::size_t f = 0; f < A.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<T> v(A.cols, T(0));
    v[f] = T(1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -A(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

// ------------------------------------------------------------------ domains

/// Determinant over an integral domain by fraction-free (Bareiss) elimination.
template <class E>
E bareiss_det(Matrix<E> A) {
  using R = RingOps<E>;
  if (A.rows != A.cols) throw DomainError("determinant of a non-square matrix");
  std::size_t n = A.rows;
  if (n == 0) return E(1);
  E prev(1);
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (R::is_zero(A(k, k))) {
      std::size_t p = k + 1;
      while (p < n && R::is_zero(A(p, k))) ++p;
      if (p == n) return E(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) A(i, j) = exact_div<E>(A(i, j) * A(k, k) - A(i, k) * A(k, j), prev);
      A(i, k) = E(0);
    }
    prev = A(k, k);
  }
  E d = A(n - 1, n - 1);
  return neg ? E(-d) : d;
}

/// Rank over the fraction field via fraction-free elimination.
template <class E>
std::size_t bareiss_rank(Matrix<E> A) {
  using R = RingOps<E>;
  E prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols && r < A.rows; ++c) {
    std::size_t p = r;
    while (p < A.rows && R::is_zero(A(p, c))) ++p;
    if (p == A.rows) continue;
    for (std::size_t j = 0; j < A.cols; ++j) std::swap(A(r, j), A(p, j));
    for (std::size_t i = r + 1; i < A.rows; ++i) {
      for (std::size_t j = c + 1; j < A.cols; ++j) A(i, j) = exact_div<E>(A(i, j) * A(r, c) - A(i, c) * A(r, j), prev);
      A(i, c) = E(0);
    }
    prev = A(r, c);
    ++r;
  }
  return r;
}

/// Extended Euclid in a Euclidean domain: s*a + t*b = g.
template <class E>
E xgcd_ring(const E& a, const E& b, E& s, E& t) {
  using R = RingOps<E>;
  E r0 = a, r1 = b, s0(1), s1(0), t0(0), t1(1);
  while (!R::is_zero(r1)) {
    E q, r;
    R::divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    E ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    E nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  s = s0;
  t = t0;
  return r0;
}

/// Basis of the saturated lattice ker(A) ∩ O_K^n, from a unimodular column
/// transformation bringing A to column echelon form.
template <class E>
std::vector<std::vector<E>> integral_kernel(const Matrix<E>& A0) {
  using R = RingOps<E>;
  Matrix<E> A = A0;
  std::size_t n = A.cols;
  Matrix<E> U(n, n, E(0));
  for (std::size_t i = 0; i < n; ++i) U(i, i) = E(1);
  auto combine = [&](Matrix<E>& M, std::size_t c, std::size_t j, const E& s, const E& t, const E& u, const E& v) {
    for (std::size_t r = 0; r < M.rows; ++r) {
      E x = M(r, c), y = M(r, j);
      M(r, c) = s * x + t * y;
      M(r, j) = u * x + v * y;
    }
  };
  std::size_t c = 0;
  for (std::size_t i = 0; i < A.rows && c < n; ++i) {
    for (std::size_t j = c + 1; j < n; ++j) {
      if (R::is_zero(A(i, j))) continue;
      if (R::is_zero(A(i, c))) {
        for (std::size_t r = 0; r < A.rows; ++r) std::swap(A(r, c), A(r, j));
        for (std::size_t r = 0; r < n; ++r) std::swap(U(r, c), U(r, j));
        continue;
      }
      E a = A(i, c), b = A(i, j), s, t;
      E g = xgcd_ring(a, b, s, t);
      E u = -exact_div(b, g), v = exact_div(a, g);
      combine(A, c, j, s, t, u, v);
      combine(U, c, j, s, t, u, v);
    }
    if (!R::is_zero(A(i, c))) ++c;
  }
  std::vector<std::vector<E>> out;
  for (std::size_t j = c; j < n; ++j) {
    std::vector<E> v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = U(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

/// Combinations of size m out of n, lexicographic.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t m);

template <class E>
Matrix<E> column_submatrix(const Matrix<E>& A, const std::vector<std::size_t>& J) {
  Matrix<E> S(A.rows, J.size(), E(0));
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t k = 0; k < J.size(); ++k) S(i, k) = A(i, J[k]);
  return S;
}

/// gcd of all maximal minors (canonical up to units); A must have full row rank m < n.
template <class E>
E maximal_minor_gcd(const Matrix<E>& A) {
  if (A.rows >= A.cols) throw DomainError("maximal minors need more columns than rows");
  E g(0);
  for (const auto& J : combinations(A.cols, A.rows)) g = RingOps<E>::gcd(g, bareiss_det(column_submatrix(A, J)));
  if (RingOps<E>::is_zero(g)) throw DomainError("matrix is rank-deficient");
  return canonical(g);
}

/// Squared Arakelov height: det(A A^T)/Delta^2 over Q, q^{2(max deg minor - deg Delta)}
/// over F_q(T). Q(i) throws DomainError.
Rat arakelov_height_sq(const Matrix<Int>& A);
Rat arakelov_height_sq(const Matrix<FpPoly>& A);
Rat arakelov_height_sq(const Matrix<GaussInt>& A);

/// Exact LLL reduction (rational Gram-Schmidt, Lovasz parameter delta).
std::vector<std::vector<Int>> lll_reduce(std::vector<std::vector<Int>> basis, const Rat& delta = Rat(3, 4));
/// Weak Popov reduction of a polynomial lattice basis (minimal row degrees).
std::vector<std::vector<FpPoly>> popov_reduce(std::vector<std::vector<FpPoly>> basis);

/// Lattice size reduction per ring: LLL over Z, weak Popov over F_q[T], and
/// LLL on the restriction of scalars to Z^{2n} over Z[i].
std::vector<std::vector<Int>> size_reduce(const std::vector<std::vector<Int>>& b);
std::vector<std::vector<FpPoly>> size_reduce(const std::vector<std::vector<FpPoly>>& b);
std::vector<std::vector<GaussInt>> size_reduce(const std::vector<std::vector<GaussInt>>& b);

/// Clears denominators row by row (each row scaled to a primitive integral vector).
template <class E>
Matrix<E> integral_rows(const Matrix<Frac<E>>& A) {
  Matrix<E> M(A.rows, A.cols, E(0));
  for (std::size_t i = 0; i < A.rows; ++i) {
    auto r = A.row(i);
    bool zero = true;
    for (const auto& x : r) zero = zero && x.is_zero();
    if (zero) continue;
    auto v = primitive_lift(r);
    for (std::size_t j = 0; j < A.cols; ++j) M(i, j) = v[j];
  }
  return M;
}

template <class E>
std::vector<Frac<E>> to_frac_vec(const std::vector<E>& v) {
  std::vector<Frac<E>> r;
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

template <class E>
Matrix<Frac<E>> to_frac(const Matrix<E>& A) {
  return A.template map<Frac<E>>([](const E& x) { return Frac<E>(x); });
}

/// H_K(1:x) of an integral vector.
template <class E>
Int affine_height(const std::vector<E>& x) {
  Int h = 1;
  for (const auto& c : x) h = std::max(h, RingOps<E>::size(c));
  return h;
}

template <class E>
struct KernelBasis {
  std::size_t rank = 0;
  std::vector<std::vector<E>> basis;  // primitive, canonical unit
  std::vector<Int> heights;           // H_K of each basis vector
  Int height_product = 1;
};

/// Rank and a primitive O_K basis of the kernel (each K-kernel vector lifted).
template <class Field>
KernelBasis<typename Field::Elem> rank_kernel(const Field&, const Matrix<typename Field::K>& A) {
  using E = typename Field::Elem;
  KernelBasis<E> kb;
  Matrix<typename Field::K> R = A;
  kb.rank = rref(R).size();
  for (const auto& v : kernel_field(A)) {
    auto w = primitive_lift(v);
    Int h = height_of_primitive(w);
    kb.heights.push_back(h);
    kb.height_product *= h;
    kb.basis.push_back(std::move(w));
  }
  return kb;
}

template <class E>
struct SmallSolution {
  std::vector<E> vector;
  Int height;        // H_K(1:x)
  std::size_t rank = 0;
  Rat height_of_matrix;  // H_K(A)
  Rat C;
  bool ok = false;
  std::vector<std::vector<E>> reduced_basis;
};

/// Small nonzero kernel vector: saturated integral kernel, size reduction,
/// then the smallest of the reduced vectors and their +-1 combinations.
/// ok <=> (H/C)^{2(n-r)} <= n^{d_K r} H_K(A)^{2r}.
template <class Field>
SmallSolution<typename Field::Elem> small_kernel_solution(const Field& F, const Matrix<typename Field::K>& A, const Rat& C) {
  using E = typename Field::Elem;
  SmallSolution<E> out;
  Matrix<E> M = integral_rows(A);
  out.rank = bareiss_rank(M);
  std::size_t n = A.cols;
  if (out.rank >= n) throw DomainError("matrix has full column rank; no kernel");
  auto basis = size_reduce(integral_kernel(M));
  out.reduced_basis = basis;
  std::vector<std::vector<E>> cands = basis;
  std::size_t k = basis.size();
  if (k >= 2 && k <= 6) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) total *= 3;
    for (std::size_t code = 1; code < total; ++code) {
      std::vector<E> v(n, E(0));
      std::size_t c = code;
      int nz = 0;
      for (std::size_t i = 0; i < k; ++i, c /= 3) {
        int coef = static_cast<int>(c % 3) - 1;
        if (!coef) continue;
        ++nz;
        for (std::size_t j = 0; j < n; ++j) v[j] += E(coef) * basis[i][j];
      }
      if (nz >= 2) cands.push_back(std::move(v));
    }
  }
  bool first = true;
  for (const auto& v : cands) {
    bool zero = true;
    for (const auto& x : v) zero = zero && RingOps<E>::is_zero(x);
    if (zero) continue;
    Int h = affine_height(v);
    if (first || h < out.height) {
      out.height = h;
      out.vector = v;
      first = false;
    }
  }
  std::vector<typename Field::K> entries(A.data.begin(), A.data.end());
  out.height_of_matrix = relative_height_proj(F, entries).hk;
  out.C = C;
  std::size_t r = out.rank;
  Rat lhs = pow_rat(Rat(out.height) / C, static_cast<long>(2 * (n - r)));
  Rat rhs = pow_rat(Rat(static_cast<long>(n)), static_cast<long>(F.dK() * r)) * pow_rat(out.height_of_matrix, static_cast<long>(2 * r));
  out.ok = lhs <= rhs;
  return out;
}

/// ord_p(det A); nullopt when det A = 0.
template <class Field>
std::optional<int> padic_val_det(const Field& F, const Matrix<typename Field::Elem>& A, const PrimeId<typename Field::Elem>& p) {
  auto d = bareiss_det(A);
  if (RingOps<typename Field::Elem>::is_zero(d)) return std::nullopt;
  return F.ord(p, d);
}

}  // namespace detlab
