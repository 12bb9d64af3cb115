#include "detlab/irreducible.hpp"

#include <algorithm>
#include <optional>

#include "detlab/linalg.hpp"

namespace detlab {

IrredMethod parse_irred_method(const std::string& s) {
  if (s == "ruppert") return IrredMethod::Ruppert;
  if (s == "extension_factor" || s == "extension") return IrredMethod::ExtensionFactor;
  throw ParseError("unknown irreducibility method '" + s + "'", 0);
}

namespace {

// Dense bivariate polynomial: c[i][j] is the coefficient of x^i y^j.
using Dense = std::vector<std::vector<GFElem>>;

MPoly<GFElem> as_plane_form(const MPoly<GFElem>& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  MPoly<GFElem> g = f;
  if (!g.is_homogeneous()) {
    if (g.nvars() > 2) throw DomainError("non-homogeneous input must have at most 2 variables");
    g = g.with_nvars(2).homogenize();
  }
  if (g.nvars() > 3) throw DomainError("only plane curves (forms in at most 3 variables) are supported");
  return g.with_nvars(3);
}

struct Prepared {
  const GFContext* L = nullptr;
  Dense h;  // monic of degree d in x, h(x,0) squarefree
  int d = 0, n = 0;
};

GFElem det3(const std::vector<std::vector<GFElem>>& M) {
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

GFPoly specialize_y(const MPoly<GFElem>& g, int d, const GFElem& a) {
  std::vector<GFElem> c(static_cast<std::size_t>(d) + 1, GFElem(0));
  for (const auto& [e, v] : g.terms()) {
    GFElem t = v;
    for (int k = 0; k < e[1]; ++k) t *= a;
    c[static_cast<std::size_t>(e[0])] += t;
  }
  return GFPoly(std::move(c));
}

/// Finds a linear change of coordinates over F_{Q^m} and a shift making the
/// dehomogenized form monic in x with a squarefree fibre at y = 0.
std::optional<Prepared> prepare(const MPoly<GFElem>& form, const GFContext* base, int m) {
  const GFContext* L = base;
  std::optional<GFExtension> ext;
  if (m > 1) {
    ext = extend(base, m);
    L = ext->field;
  }
  auto emb = [&](const GFElem& x) { return ext ? ext->embed(x) : x.in(L); };
  MPoly<GFElem> F = form.map_coeffs<GFElem>(emb);
  int d = F.degree();
  std::mt19937_64 rng(0x5eed1234ULL + static_cast<unsigned long long>(m));
  const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<GFElem> shifts;
  bool small = L->size() <= 64;
  if (small) {
    for (unsigned long i = 0; Int(i) < L->size(); ++i) shifts.push_back(GFElem::from_index(L, Int(i)));
  }
  const int kTries = 48;
  for (int t = 0; t < kTries; ++t) {
    std::vector<std::vector<GFElem>> M(3, std::vector<GFElem>(3, GFElem::from_long(L, 0)));
    if (t < 6) {
      for (int i = 0; i < 3; ++i) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(perms[t][i])] = GFElem::from_long(L, 1);
    } else {
      for (auto& r : M)
        for (auto& x : r) x = GFElem::random(L, rng);
      if (det3(M).is_zero()) continue;
    }
    std::vector<MPoly<GFElem>> subs;
    for (int i = 0; i < 3; ++i) {
      MPoly<GFElem> s(3);
      for (int j = 0; j < 3; ++j) s += MPoly<GFElem>::variable(3, j, M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      subs.push_back(std::move(s));
    }
    MPoly<GFElem> G = F.compose(subs);
    GFElem c = G.coefficient(Exponent{d, 0, 0});
    if (c.is_zero()) continue;
    MPoly<GFElem> g = G.specialize(2, GFElem::from_long(L, 1)).scaled(GFElem::from_long(L, 1) / c);
    std::vector<GFElem> cand = shifts;
    if (!small) {
      cand.push_back(GFElem::from_long(L, 0));
      for (int k = 0; k < 24; ++k) cand.push_back(GFElem::random(L, rng));
    }
    for (const auto& a : cand) {
      GFPoly u = specialize_y(g, d, a);
      if (u.degree() != d || !is_squarefree(u)) continue;
      MPoly<GFElem> hp = g.compose({MPoly<GFElem>::variable(3, 0, GFElem::from_long(L, 1)),
                                    MPoly<GFElem>::variable(3, 1, GFElem::from_long(L, 1)) + MPoly<GFElem>::constant(3, a),
                                    MPoly<GFElem>::variable(3, 2, GFElem::from_long(L, 1))});
      Prepared P;
      P.L = L;
      P.d = d;
      P.n = hp.degree_in(1);
      P.h.assign(static_cast<std::size_t>(d) + 1, std::vector<GFElem>(static_cast<std::size_t>(P.n) + 1, GFElem::from_long(L, 0)));
      for (const auto& [e, v] : hp.terms()) P.h[static_cast<std::size_t>(e[0])][static_cast<std::size_t>(e[1])] = v.in(L);
      return P;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Hensel

// Polynomial in x with coefficients truncated power series in y:
// s[j] is the coefficient of y^j.
using Series = std::vector<GFPoly>;

Series series_mul(const Series& a, const Series& b, std::size_t N) {
  Series r(N);
  for (std::size_t i = 0; i < N && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < N && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

std::pair<Series, Series> lift_pair(const Series& F, const GFPoly& a0, const GFPoly& b0, std::size_t N) {
  GFPoly s, t;
  xgcd(a0, b0, s, t);
  Series a(N), b(N);
  a[0] = a0;
  b[0] = b0;
  for (std::size_t k = 1; k < N; ++k) {
    GFPoly e = F[k];
    for (std::size_t i = 1; i < k; ++i) e -= a[i] * b[k - i];
    GFPoly ak = divmod(e * t, a0).second;
    GFPoly bk = divmod(e - b0 * ak, a0).first;
    a[k] = std::move(ak);
    b[k] = std::move(bk);
  }
  return {a, b};
}

std::vector<Series> lift_all(const Series& F, const std::vector<GFPoly>& gs, std::size_t N) {
  if (gs.size() == 1) return {F};
  std::size_t half = gs.size() / 2;
  GFPoly a0 = gs[0], b0 = gs[half];
  for (std::size_t i = 1; i < half; ++i) a0 = a0 * gs[i];
  for (std::size_t i = half + 1; i < gs.size(); ++i) b0 = b0 * gs[i];
  auto [A, B] = lift_pair(F, a0, b0, N);
  auto left = lift_all(A, std::vector<GFPoly>(gs.begin(), gs.begin() + static_cast<long>(half)), N);
  auto right = lift_all(B, std::vector<GFPoly>(gs.begin() + static_cast<long>(half), gs.end()), N);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

/// Exact test: does the x-monic candidate divide h in L[y][x]?
bool divides(const Dense& h, const Series& cand, const GFContext* L) {
  // Rearrange both as polynomials in x with coefficients in L[y].
  int dh = static_cast<int>(h.size()) - 1;
  int dc = cand[0].degree();
  std::vector<GFPoly> R(static_cast<std::size_t>(dh) + 1), P(static_cast<std::size_t>(dc) + 1);
  for (int i = 0; i <= dh; ++i) R[static_cast<std::size_t>(i)] = GFPoly(h[static_cast<std::size_t>(i)]);
  for (int i = 0; i <= dc; ++i) {
    std::vector<GFElem> c;
    for (const auto& s : cand) c.push_back(s.coeff(i).in(L));
    P[static_cast<std::size_t>(i)] = GFPoly(std::move(c));
  }
  for (int i = dh; i >= dc; --i) {
    GFPoly c = R[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    for (int l = 0; l <= dc; ++l) R[static_cast<std::size_t>(i - dc + l)] -= c * P[static_cast<std::size_t>(l)];
  }
  for (int i = 0; i < dc; ++i)
    if (!R[static_cast<std::size_t>(i)].is_zero()) return false;
  return true;
}

bool irreducible_dense(const Prepared& P) {
  std::size_t N = static_cast<std::size_t>(P.n) + 1;
  Series F(N);
  for (std::size_t j = 0; j < N; ++j) {
    std::vector<GFElem> c;
    for (const auto& row : P.h) c.push_back(row[j]);
    F[j] = GFPoly(std::move(c));
  }
  auto fac = factor_upoly(F[0]);
  std::vector<GFPoly> gs;
  for (const auto& [g, e] : fac) {
    if (e != 1) throw InvariantViolation("specialization is not squarefree");
    gs.push_back(g);
  }
  if (gs.size() <= 1) return true;
  auto lifted = lift_all(F, gs, N);
  std::size_t r = lifted.size();
  // A proper factor or its cofactor uses at most half of the local factors.
  for (std::size_t k = 1; 2 * k <= r; ++k) {
    for (const auto& S : combinations(r, k)) {
      Series prod = lifted[S[0]];
      for (std::size_t i = 1; i < S.size(); ++i) prod = series_mul(prod, lifted[S[i]], N);
      if (divides(P.h, prod, P.L)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- Ruppert

int ruppert_nullity(const Prepared& P) {
  int m = P.d, n = P.n;
  const GFContext* L = P.L;
  if (n == 0) return m;  // product of m distinct linear factors in x
  auto at = [&](int i, int j) -> GFElem {
    if (i < 0 || j < 0 || i > m || j > n) return GFElem::from_long(L, 0);
    return P.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  int rows_x = 2 * m, rows_y = 2 * n;
  auto row_of = [&](int i, int j) { return static_cast<std::size_t>(i * rows_y + j); };
  std::size_t ng = static_cast<std::size_t>(m * (n + 1)), nh = static_cast<std::size_t>((m + 1) * n);
  Matrix<GFElem> A(static_cast<std::size_t>(rows_x * rows_y), ng + nh, GFElem::from_long(L, 0));
  auto lf = [&](long v) { return GFElem::from_long(L, v); };
  std::size_t col = 0;
  // g = x^a y^b contributes f*b*x^a y^{b-1} - x^a y^b * f_y.
  for (int a = 0; a < m; ++a)
    for (int b = 0; b <= n; ++b, ++col) {
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
          GFElem c = at(i, j);
          if (c.is_zero()) continue;
          if (b > 0) A(row_of(i + a, j + b - 1), col) += c * lf(b);
          if (j > 0) A(row_of(i + a, j - 1 + b), col) -= c * lf(j);
        }
    }
  // h = x^a y^b contributes -f*a*x^{a-1} y^b + x^a y^b * f_x.
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b < n; ++b, ++col) {
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) {
          GFElem c = at(i, j);
          if (c.is_zero()) continue;
          if (a > 0) A(row_of(i + a - 1, j + b), col) -= c * lf(a);
          if (i > 0) A(row_of(i - 1 + a, j + b), col) += c * lf(i);
        }
    }
  return static_cast<int>(A.cols - rank_field(A));
}

std::optional<Prepared> prepare_growing(const MPoly<GFElem>& form, const GFContext* field, int min_m, int step) {
  int d = form.degree();
  Int cap = Int(4) * pow_int(Int(d), 4);
  if (cap < 4096) cap = 4096;
  for (int m = min_m;; m += step) {
    if (auto P = prepare(form, field, m)) return P;
    if (pow_int(field->size(), static_cast<unsigned long>(m)) >= cap) return std::nullopt;
  }
}

}  // namespace

int ruppert_factor_count(const GFContext* field, const MPoly<GFElem>& f) {
  MPoly<GFElem> form = as_plane_form(f);
  int d = form.degree();
  if (d < 1) throw DomainError("constant polynomial");
  auto P = prepare_growing(form, field, 1, 1);
  if (!P) return -1;
  return ruppert_nullity(*P);
}

bool abs_irreducible(const GFContext* field, const MPoly<GFElem>& f, IrredMethod method, int max_degree) {
  MPoly<GFElem> form = as_plane_form(f);
  int d = form.degree();
  if (d < 1) throw DomainError("constant polynomial");
  if (d == 1) return true;
  if (method == IrredMethod::Ruppert) {
    std::uint64_t p = field->p();
    if (p <= static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d - 1))
      throw DomainError("ruppert method needs char > d(d-1)");
    return ruppert_factor_count(field, form) == 1;
  }
  if (d > max_degree) throw DomainError("degree exceeds the extension_factor cap");
  // Irreducible over F_{Q^{d j}} for some j implies irreducible over F_{Q^d}.
  auto P = prepare_growing(form, field, d, d);
  if (!P) return false;  // no squarefree fibre in any tried extension: not reduced
  return irreducible_dense(*P);
}

}  // namespace detlab
