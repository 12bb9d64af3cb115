#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "detlab/badprimes.hpp"
#include "detlab/constants.hpp"
#include "detlab/enumeration.hpp"
#include "detlab/heights.hpp"
#include "detlab/hilbert.hpp"
#include "detlab/linalg.hpp"

namespace detlab {

/// Degree-D monomials in v variables, grevlex descending (|B[D]| = C(D+v-1, v-1)).
inline std::vector<Exponent> monomial_basis(int v, int D) {
  if (v < 1 || D < 0) throw DomainError("monomial basis needs v >= 1 and D >= 0");
  return monomials_of_degree(v, D);
}

/// Monomials of degree <= D in v variables (dehomogenized degree-D basis).
inline std::vector<Exponent> affine_monomial_basis(int v, int D) {
  std::vector<Exponent> out;
  for (const auto& e : monomial_basis(v + 1, D)) out.emplace_back(e.begin() + 1, e.end());
  return out;
}

template <class E>
E eval_monomial(const Exponent& e, const std::vector<E>& x) {
  E t(1);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (int r = 0; r < e[i]; ++r) t *= x[i];
  return t;
}

template <class E>
Matrix<E> evaluation_matrix(const std::vector<std::vector<E>>& points, const std::vector<Exponent>& basis) {
  Matrix<E> M(points.size(), basis.size(), E(0));
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) M(i, j) = eval_monomial(basis[j], points[i]);
  return M;
}

/// s x |B[D]| matrix of the degree-D monomials at primitive points.
template <class Field>
Matrix<typename Field::Elem> evaluation_matrix(const Field&, const std::vector<std::vector<typename Field::Elem>>& points, int v,
                                               int D) {
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != v) throw DomainError("point has the wrong number of coordinates");
    if (!detail::is_primitive(p)) throw DomainError("point is not primitive");
  }
  return evaluation_matrix(points, monomial_basis(v, D));
}

// --------------------------------------------------------- local check

/// Multiplicity of the form g (over a finite field) at the projective point
/// P: lowest total degree in the Taylor expansion of a dehomogenization.
int multiplicity_at(const MPoly<GFElem>& g, const std::vector<GFElem>& P);

template <class E>
struct LocalDetCertificate {
  PrimeId<E> prime;
  std::vector<GFElem> residue_point;
  std::vector<std::vector<E>> points;
  std::vector<std::string> forms;
  E det;
  std::optional<int> ord;  // empty when det = 0
  int mu = 1;
  int r = 1;
  Int A = 0;
  bool ok = false;
};

template <class E>
bool same_projective_point(const std::vector<GFElem>& a, const std::vector<GFElem>& b) {
  bool nz = false;
  for (const auto& x : a) nz = nz || !x.is_zero();
  if (!nz) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

/// Determinant of (F_j(xi_i)) for points reducing to P, checked against
/// ord_p(det) >= A(s) with A the staircase sum for the multiplicity of P.
template <class Field>
LocalDetCertificate<typename Field::Elem> local_det_check(const Field& F, const MPoly<typename Field::Elem>& f,
                                                          const PrimeId<typename Field::Elem>& prime,
                                                          const std::vector<GFElem>& residue_point,
                                                          const std::vector<std::vector<typename Field::Elem>>& points,
                                                          const std::vector<MPoly<typename Field::Elem>>& forms) {
  using E = typename Field::Elem;
  using R = RingOps<E>;
  if (!f.is_homogeneous() || f.is_zero()) throw DomainError("f must be a nonzero form");
  if (points.size() != forms.size()) throw DomainError("the system must be square (as many forms as points)");
  if (points.empty()) throw DomainError("no points");
  int v = f.nvars();
  auto res = F.residue(prime);
  std::vector<GFElem> P;
  for (const auto& c : residue_point) P.push_back(c.in(res.field));
  if (static_cast<int>(P.size()) != v) throw DomainError("residue point has the wrong length");
  auto fb = reduce_mod(F, f, prime);
  if (fb.is_zero()) throw DomainError("f vanishes identically modulo the prime");
  if (!fb.eval(P).in(res.field).is_zero()) throw DomainError("residue point is not on the reduction");
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != v) throw DomainError("point has the wrong number of coordinates");
    if (!R::is_zero(f.eval(x))) throw DomainError("point is not on Z(f)");
    if (!detail::is_primitive(x)) throw DomainError("point is not primitive");
    std::vector<GFElem> rx;
    for (const auto& c : x) rx.push_back(res.reduce(c));
    if (!same_projective_point<E>(rx, P)) throw DomainError("point does not reduce to the residue point");
  }
  for (const auto& g : forms)
    if (!g.is_homogeneous()) throw DomainError("forms must be homogeneous");
  LocalDetCertificate<E> c;
  c.prime = prime;
  c.residue_point = P;
  c.points = points;
  for (const auto& g : forms) c.forms.push_back(to_text(g));
  std::size_t s = points.size();
  Matrix<E> M(s, s, E(0));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) M(i, j) = forms[j].with_nvars(v).eval(points[i]);
  c.det = bareiss_det(M);
  if (!R::is_zero(c.det)) c.ord = F.ord(prime, c.det);
  c.mu = multiplicity_at(fb, P);
  c.r = v - 2;
  c.A = staircase_A(c.mu, c.r, static_cast<long>(s));
  c.ok = !c.ord || Int(*c.ord) >= c.A;
  return c;
}

// ------------------------------------------------------ auxiliary polynomial

template <class E>
struct AuxResult {
  MPoly<E> g;
  int M = 0;
  std::size_t s = 0;
  std::vector<std::vector<E>> points;
  std::size_t kernel_dim = 0;
  Int excluded_dim = 0;  // dim of f * B[M - d]
  std::size_t rank = 0;
  bool f_divides_g = false;
  bool vanishes = false;
  bool projective = true;
  int degree = 0;
  double b_f = 1;
  bool b_computed = false;
  bool absolutely_irreducible = false;
  double bound = 0;
  bool below_bound = false;
  std::string note;
};

struct AuxOptions {
  int max_degree = constants::kAuxMaxDegree;
  CountOptions count;
};

namespace detail {

inline Int binom_int(long n, long k) {
  if (k < 0 || n < k) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

template <class E>
std::vector<Frac<E>> coefficient_vector(const MPoly<E>& p, const std::vector<Exponent>& basis,
                                        const std::map<Exponent, std::size_t>& where) {
  std::vector<Frac<E>> v(basis.size(), Frac<E>(E(0)));
  for (const auto& [e, c] : p.terms()) {
    auto it = where.find(e);
    if (it == where.end()) throw InvariantViolation("product left the monomial basis");
    v[it->second] = Frac<E>(c);
  }
  return v;
}

/// log b(f) via the bad-prime report where the polynomial is a plane curve.
template <class Field>
void fill_b(const Field& F, const MPoly<typename Field::Elem>& f, AuxResult<typename Field::Elem>& out) {
  out.absolutely_irreducible = f.degree() <= 1;
  try {
    if (f.degree() >= 2) {
      auto rep = bad_primes(F, f, Int(constants::kAuxBadPrimeCutoff), constants::kBadPrimeLemmaC);
      out.b_f = rep.b;
      out.b_computed = true;
      out.absolutely_irreducible = true;
    }
  } catch (const DomainError&) {
    out.b_f = 1;
    out.b_computed = false;
  }
}

/// Kernel search shared by the projective and affine constructors.
template <class Field>
void kernel_search(const Field&, const MPoly<typename Field::Elem>& f, AuxResult<typename Field::Elem>& out,
                   const std::function<std::vector<Exponent>(int)>& basis_of, const AuxOptions& opt) {
  using E = typename Field::Elem;
  using K = typename Field::K;
  int d = f.degree();
  for (int M = 1; M <= opt.max_degree; ++M) {
    auto basis = basis_of(M);
    std::map<Exponent, std::size_t> where;
    for (std::size_t j = 0; j < basis.size(); ++j) where[basis[j]] = j;
    Matrix<K> A = to_frac(evaluation_matrix(out.points, basis));
    Matrix<K> Rm = A;
    std::size_t rank = rref(Rm).size();
    std::size_t kdim = basis.size() - rank;
    // The multiples f * B[M - d] always lie in the kernel.
    std::vector<std::vector<K>> fmult;
    if (M >= d)
      for (const auto& m : basis_of(M - d)) {
        auto v = coefficient_vector(f * MPoly<E>::monomial(m, E(1)), basis, where);
        for (const auto& y : mat_vec(A, v))
          if (!y.is_zero()) throw InvariantViolation("a multiple of f does not vanish at the points");
        fmult.push_back(std::move(v));
      }
    std::size_t excl = fmult.empty() ? 0 : rank_field(Matrix<K>::from_rows(fmult));
    if (kdim <= excl) continue;
    for (const auto& kv : kernel_field(A)) {
      auto rows = fmult;
      rows.push_back(kv);
      if (rank_field(Matrix<K>::from_rows(rows)) == excl) continue;
      auto lift = primitive_lift(kv);
      MPoly<E> g(f.nvars());
      for (std::size_t j = 0; j < basis.size(); ++j) g.add_term(basis[j], lift[j]);
      out.g = g;
      out.M = M;
      out.kernel_dim = kdim;
      out.excluded_dim = static_cast<unsigned long>(excl);
      out.rank = rank;
      out.vanishes = true;
      for (const auto& x : out.points) out.vanishes = out.vanishes && RingOps<E>::is_zero(g.eval(x));
      // f | g  <=>  the normal form of g modulo the principal ideal is zero.
      MonomialOrder ord{OrderKind::Grevlex, f.nvars()};
      auto fk = to_k(f), gk = to_k(g);
      out.f_divides_g = normal_form(gk, std::vector<MPoly<K>>{fk}, ord).is_zero();
      if (!out.vanishes) throw InvariantViolation("auxiliary polynomial does not vanish at an interpolated point");
      if (out.f_divides_g) throw InvariantViolation("auxiliary polynomial is divisible by f");
      return;
    }
    throw InvariantViolation("kernel exceeds f*B[M-d] but no vector outside it was found");
  }
  throw InvariantViolation("no auxiliary polynomial up to the degree cap");
}

template <class Field, class E>
double constraint_norm(const Field&, const std::vector<Constraint<E>>& cons) {
  double q = 1;
  for (const auto& c : cons) q *= c.prime.norm.get_d();
  return q;
}

}  // namespace detail

/// Projective degree bound shape, n = dimension of X, pinned prefactor.
template <class Field>
double aux_bound_proj(const Field& F, int d, int n, double B, double Hf, double b, double Nq) {
  auto sel = make_selector(F.characteristic(), d);
  double dn = static_cast<double>(d), nn = static_cast<double>(n);
  double L = std::max(std::log(Nq), 1.0);
  double t1 = std::pow(B, (nn + 1) / (nn * std::pow(dn, 1 / nn))) *
              std::pow(dn, sel.pick(4.0, 14.0 / 3, 14.0 / 3, 0.0) - 1 / nn) * b * L /
              (std::pow(Hf, 1 / (nn * std::pow(dn, 1 + 1 / nn))) * Nq);
  double t2 = std::pow(dn, 1 - 1 / nn) * std::log(B * Nq);
  double t3 = std::pow(dn, 2 - 1 / nn) * std::log(Nq);
  double t4 = std::pow(dn, sel.pick(4 - 1 / nn, 7.0, 14.0 / 3 - 1 / nn, 3.0)) * (L / Nq + 1);
  return constants::kAuxBoundC * (t1 + t2 + t3 + t4);
}

/// Affine degree bound shape (n + 1 affine variables).
template <class Field>
double aux_bound_aff(const Field& F, int d, int n, double B, double Hfd, double b, double Nq) {
  auto sel = make_selector(F.characteristic(), d);
  double dn = static_cast<double>(d), nn = static_cast<double>(n);
  double L = std::max(std::log(Nq), 1.0);
  double inner = std::min(std::log(Hfd) + dn * std::log(B) + std::pow(dn, sel.pick(2.0, 1 + 1 / nn, 8.0 / 3, 1 + 1 / nn)),
                          std::pow(dn, sel.pick(2.0, -4.0 / 3, 8.0 / 3, -2.0)) * b);
  double t1 = std::pow(B, 1 / std::pow(dn, 1 / nn)) * std::pow(dn, sel.pick(2.0, 6.0, 2.0, 2.0) - 1 / nn) * inner * L /
              (std::pow(Hfd, 1 / (nn * std::pow(dn, 1 + 1 / nn))) * Nq);
  double t2 = std::pow(dn, 1 - 1 / nn) * std::log(B * Nq);
  double t3 = std::pow(dn, 2 - 1 / nn) * std::log(Nq);
  double t4 = std::pow(dn, sel.pick(4 - 1 / nn, 7.0, 14.0 / 3 - 1 / nn, 3.0)) * (L / Nq + 1);
  return constants::kAuxBoundC * (t1 + t2 + t3 + t4);
}

/// Smallest-degree form g, not divisible by f, vanishing on all points of
/// Z(f) of height <= B that reduce to the given residue points.
template <class Field>
AuxResult<typename Field::Elem> aux_polynomial_proj(const Field& F, const MPoly<typename Field::Elem>& f, const Int& B,
                                                    const std::vector<Constraint<typename Field::Elem>>& cons = {},
                                                    const AuxOptions& opt = {}) {
  using E = typename Field::Elem;
  if (f.is_zero() || !f.is_homogeneous()) throw DomainError("f must be a nonzero form");
  int v = f.nvars(), d = f.degree();
  if (v < 3) throw DomainError("projective auxiliary polynomials need at least 3 variables");
  if (d < 2) throw DomainError("degree must be at least 2");
  AuxResult<E> out;
  out.projective = true;
  out.degree = d;
  CountOptions co = opt.count;
  co.collect = true;
  out.points = count_points(F, f, B, CountMode::Projective, cons, co).points;
  out.s = out.points.size();
  detail::fill_b(F, f, out);
  detail::kernel_search(F, f, out, [v](int M) { return monomial_basis(v, M); }, opt);
  double Hf = to_double(poly_height(F, f, HeightMode::Projective).hk);
  out.bound = aux_bound_proj(F, d, v - 2, B.get_d(), Hf, out.b_f, detail::constraint_norm(F, cons));
  out.below_bound = out.M <= out.bound;
  return out;
}

/// Affine variant: interpolation by all monomials of degree <= M directly
/// (no auxiliary homogenization).
template <class Field>
AuxResult<typename Field::Elem> aux_polynomial_aff(const Field& F, const MPoly<typename Field::Elem>& f, const Int& B,
                                                   const std::vector<Constraint<typename Field::Elem>>& cons = {},
                                                   const AuxOptions& opt = {}) {
  using E = typename Field::Elem;
  if (f.is_zero()) throw DomainError("f must be nonzero");
  int v = f.nvars(), d = f.degree();
  if (d < 1) throw DomainError("degree must be at least 1");
  AuxResult<E> out;
  out.projective = false;
  out.degree = d;
  out.note = "direct interpolation by monomials of degree <= M";
  CountOptions co = opt.count;
  co.collect = true;
  out.points = count_points(F, f, B, CountMode::Affine, cons, co).points;
  out.s = out.points.size();
  detail::fill_b(F, f, out);
  detail::kernel_search(F, f, out, [v](int M) { return affine_monomial_basis(v, M); }, opt);
  double Hfd = to_double(poly_height(F, f.top_form(), HeightMode::Projective).hk);
  int n = std::max(1, v - 1);
  out.bound = aux_bound_aff(F, d, n, B.get_d(), Hfd, out.b_f, detail::constraint_norm(F, cons));
  out.below_bound = out.M <= out.bound;
  return out;
}

// ------------------------------------------------ global valuation report

template <class E>
struct PrimeValuation {
  PrimeId<E> prime;
  int e = 0;        // ord_p(Delta)
  Int local_floor;  // sum over residue points of A(s_P)
  bool good = true;
  bool ok = true;   // e >= local_floor (checked for good primes)
};

template <class E>
struct GlobalValuationReport {
  std::size_t s = 0;
  int degree_D = 0;
  E det;
  std::vector<PrimeValuation<E>> primes;
  double weighted_sum = 0;  // sum over good primes N(p) <= s of e log N(p)
  double main_term = 0;
  bool all_local_ok = true;
};

/// One nonzero s x s evaluation minor and its prime valuations.
template <class Field>
GlobalValuationReport<typename Field::Elem> global_valuation_experiment(const Field& F, const MPoly<typename Field::Elem>& f,
                                                                        const Int& B, std::size_t s_cap) {
  using E = typename Field::Elem;
  using K = typename Field::K;
  if (!f.is_homogeneous() || f.nvars() != 3) throw DomainError("global valuation experiment needs a plane curve form");
  CountOptions co;
  co.collect = true;
  auto pts = count_points(F, f, B, CountMode::Projective, {}, co).points;
  if (pts.empty() || s_cap == 0) throw DomainError("insufficient points");
  if (pts.size() > s_cap) pts.resize(s_cap);
  GlobalValuationReport<E> rep;
  rep.s = pts.size();
  std::size_t s = rep.s;
  // Smallest degree with full row rank, then the first independent columns.
  for (int D = 0;; ++D) {
    auto basis = monomial_basis(3, D);
    Matrix<E> M = evaluation_matrix(pts, basis);
    Matrix<K> T = to_frac(M);
    Matrix<K> Tt(T.cols, T.rows, K(E(0)));
    for (std::size_t i = 0; i < T.rows; ++i)
      for (std::size_t j = 0; j < T.cols; ++j) Tt(j, i) = T(i, j);
    // Pivot rows of the transpose pick independent columns greedily.
    std::vector<std::size_t> cols;
    std::vector<std::vector<K>> acc;
    for (std::size_t j = 0; j < basis.size() && cols.size() < s; ++j) {
      acc.push_back(Tt.row(j));
      if (rank_field(Matrix<K>::from_rows(acc)) == acc.size())
        cols.push_back(j);
      else
        acc.pop_back();
    }
    if (cols.size() < s) {
      if (D > 64) throw DomainError("could not reach full rank");
      continue;
    }
    rep.degree_D = D;
    rep.det = bareiss_det(column_submatrix(M, cols));
    break;
  }
  if (RingOps<E>::is_zero(rep.det)) throw InvariantViolation("selected minor vanishes");
  Int cutoff = std::max<Int>(Int(static_cast<unsigned long>(s)), Int(2));
  for (const auto& p : F.primes_up_to(cutoff)) {
    PrimeValuation<E> pv;
    pv.prime = p;
    pv.e = F.ord(p, rep.det);
    pv.good = !reduction_is_bad(F, f, p);
    auto res = F.residue(p);
    auto fb = reduce_mod(F, f, p);
    // Group the points by residue point.
    std::vector<std::pair<std::vector<GFElem>, long>> groups;
    for (const auto& x : pts) {
      std::vector<GFElem> r;
      for (const auto& c : x) r.push_back(res.reduce(c));
      bool found = false;
      for (auto& [P, n] : groups)
        if (same_projective_point<E>(P, r)) {
          ++n;
          found = true;
          break;
        }
      if (!found) groups.emplace_back(r, 1);
    }
    pv.local_floor = 0;
    if (!fb.is_zero())
      for (const auto& [P, n] : groups) pv.local_floor += staircase_A(multiplicity_at(fb, P), 1, n);
    pv.ok = !pv.good || Int(pv.e) >= pv.local_floor;
    rep.all_local_ok = rep.all_local_ok && pv.ok;
    if (pv.good) rep.weighted_sum += pv.e * std::log(p.norm.get_d());
    rep.primes.push_back(pv);
  }
  auto sel = make_selector(F.characteristic(), f.degree());
  double sd = static_cast<double>(s);
  rep.main_term = 0.5 * sd * sd * (std::log(sd) - std::log(sel.beta()));
  return rep;
}

}  // namespace detlab
