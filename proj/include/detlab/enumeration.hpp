#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "detlab/badprimes.hpp"
#include "detlab/constants.hpp"
#include "detlab/field.hpp"
#include "detlab/heights.hpp"
#include "detlab/linalg.hpp"
#include "detlab/mpoly.hpp"

namespace detlab {

enum class CountMode { Projective, Affine };

inline std::string mode_name(CountMode m) { return m == CountMode::Projective ? "proj" : "aff"; }

/// A prime together with the residue point the counted points must reduce to.
template <class E>
struct Constraint {
  PrimeId<E> prime;
  std::vector<GFElem> point;
};

struct CountOptions {
  unsigned threads = 0;  // 0: DETLAB_THREADS or hardware concurrency
  bool collect = false;  // keep the points (in deterministic order)
  double budget = constants::kEnumerationBudget;
};

template <class E>
struct CountRecord {
  std::string field;
  std::string poly;
  Int B;
  CountMode mode = CountMode::Projective;
  Int N = 0;
  double seconds = 0;
  std::uint64_t checksum = 0;
  std::vector<std::vector<E>> points;
};

unsigned resolve_threads(unsigned requested);

/// FNV-1a of the text of a point; the record checksum is the sum of these
/// (mod 2^64), so it does not depend on the visiting order.
std::uint64_t point_hash(const std::vector<std::string>& coords);

template <class E>
std::uint64_t point_hash(const std::vector<E>& x) {
  std::vector<std::string> s;
  for (const auto& c : x) s.push_back(RingOps<E>::to_string(c));
  return point_hash(s);
}

namespace detail {

template <class E>
bool is_primitive(const std::vector<E>& x) {
  E g(0);
  for (const auto& c : x) g = RingOps<E>::gcd(g, c);
  return RingOps<E>::is_unit(g);
}

/// First nonzero coordinate in canonical form (positive, monic, first quadrant).
template <class E>
bool is_canonical_rep(const std::vector<E>& x) {
  for (const auto& c : x) {
    if (RingOps<E>::is_zero(c)) continue;
    return RingOps<E>::is_unit(RingOps<E>::canonical_unit(c)) && canonical(c) == c;
  }
  return false;
}

/// Polynomial in one distinguished variable with coefficients that are
/// polynomials in the remaining ones; evaluated on flattened term lists.
template <class E>
struct Solver {
  int nvars = 0;
  int var = 0;
  std::vector<int> others;
  // coeff[j] = list of (exponents over `others`, coefficient)
  std::vector<std::vector<std::pair<std::vector<int>, E>>> coeff;

  static Solver make(const MPoly<E>& f) {
    Solver s;
    s.nvars = f.nvars();
    int best = -1;
    for (int v = 0; v < s.nvars; ++v) {
      int dv = f.degree_in(v);
      if (dv > 0 && (best < 0 || dv < f.degree_in(best))) best = v;
    }
    s.var = best < 0 ? 0 : best;
    for (int v = 0; v < s.nvars; ++v)
      if (v != s.var) s.others.push_back(v);
    int k = std::max(0, f.degree_in(s.var));
    s.coeff.resize(static_cast<std::size_t>(k) + 1);
    for (const auto& [e, c] : f.terms()) {
      std::vector<int> oe;
      for (int v : s.others) oe.push_back(e[static_cast<std::size_t>(v)]);
      s.coeff[static_cast<std::size_t>(e[static_cast<std::size_t>(s.var)])].emplace_back(std::move(oe), c);
    }
    return s;
  }

  int degree() const { return static_cast<int>(coeff.size()) - 1; }

  E eval_coeff(std::size_t j, const std::vector<E>& y) const {
    E s(0);
    for (const auto& [oe, c] : coeff[j]) {
      E t = c;
      for (std::size_t i = 0; i < oe.size(); ++i)
        for (int r = 0; r < oe[i]; ++r) t *= y[i];
      s += t;
    }
    return s;
  }
};

template <class E>
E horner(const std::vector<E>& c, const E& x) {
  E v(0);
  for (std::size_t j = c.size(); j-- > 0;) v = v * x + c[j];
  return v;
}

inline bool perfect_sqrt(const Int& n, Int& r) {
  if (n < 0) return false;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r * r == n;
}

/// Values X in the box with sum c_j X^j = 0. `all` is set when every
/// coefficient vanishes.
template <class Field>
void box_roots(const Field& F, const std::vector<typename Field::Elem>& c, const std::vector<typename Field::Elem>& box,
               const Int& B, std::vector<typename Field::Elem>& out, bool& all) {
  using E = typename Field::Elem;
  using R = RingOps<E>;
  out.clear();
  all = false;
  int k = static_cast<int>(c.size()) - 1;
  while (k >= 0 && R::is_zero(c[static_cast<std::size_t>(k)])) --k;
  if (k < 0) {
    all = true;
    return;
  }
  if (k == 0) return;
  if (k == 1) {
    E q, r;
    R::divmod(E(-c[0]), c[1], q, r);
    if (R::is_zero(r) && F.in_box(q, B)) out.push_back(q);
    return;
  }
  if constexpr (std::is_same_v<E, Int>) {
    if (k == 2) {
      Int disc = c[1] * c[1] - 4 * c[2] * c[0], s;
      if (!perfect_sqrt(disc, s)) return;
      for (int sign : {-1, 1}) {
        Int num = -c[1] + sign * s, den = 2 * c[2];
        if (num % den != 0) continue;
        Int x = num / den;
        if (F.in_box(x, B) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
        if (s == 0) break;
      }
      std::sort(out.begin(), out.end());
      return;
    }
  }
  std::vector<E> cc(c.begin(), c.begin() + k + 1);
  for (const auto& x : box)
    if (R::is_zero(horner(cc, x))) out.push_back(x);
}

template <class Field>
bool needs_brute_force(const Field&, int degree) {
  if (degree <= 1) return false;
  return !(std::is_same_v<typename Field::Elem, Int> && degree == 2);
}

}  // namespace detail

/// Points of [B]_{O_K}^n: each coordinate in F.box(B), last coordinate fastest.
template <class Field>
std::vector<std::vector<typename Field::Elem>> enumerate_box(const Field& F, const Int& B, int n,
                                                             double budget = constants::kEnumerationBudget) {
  using E = typename Field::Elem;
  auto box = F.box(B);
  if (std::pow(static_cast<double>(box.size()), n) > budget) throw BudgetExceeded("box enumeration exceeds the budget");
  std::vector<std::vector<E>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  if (n == 0) return {{}};
  while (true) {
    std::vector<E> x;
    for (auto i : idx) x.push_back(box[i]);
    out.push_back(std::move(x));
    int j = n - 1;
    while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == box.size()) idx[static_cast<std::size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return out;
}

/// Points of P^n(K) with H_K <= B as primitive tuples with canonical unit.
template <class Field>
std::vector<std::vector<typename Field::Elem>> enumerate_proj(const Field& F, int n, const Int& B,
                                                              double budget = constants::kEnumerationBudget) {
  std::vector<std::vector<typename Field::Elem>> out;
  for (auto& x : enumerate_box(F, B, n + 1, budget))
    if (detail::is_canonical_rep(x) && detail::is_primitive(x)) out.push_back(std::move(x));
  return out;
}

namespace detail {

template <class Field>
bool satisfies_constraints(const Field& F, const std::vector<typename Field::Elem>& x,
                           const std::vector<Constraint<typename Field::Elem>>& cons, CountMode mode,
                           const std::vector<Residue<typename Field::Elem>>& res) {
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const auto& P = cons[i].point;
    std::vector<GFElem> r;
    for (const auto& c : x) r.push_back(res[i].reduce(c));
    if (mode == CountMode::Affine) {
      for (std::size_t j = 0; j < r.size(); ++j)
        if (!(r[j] - P[j].in(res[i].field)).is_zero()) return false;
    } else {
      bool nz = false;
      for (const auto& v : r) nz = nz || !v.is_zero();
      if (!nz) return false;
      for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = a + 1; b < r.size(); ++b)
          if (!(r[a] * P[b].in(res[i].field) - r[b] * P[a].in(res[i].field)).is_zero()) return false;
    }
  }
  (void)F;
  return true;
}

}  // namespace detail

/// Exact count of zeros of f among box points (affine) or among projective
/// points of height <= B (primitive canonical tuples), optionally restricted
/// to points reducing to given residue points. One variable is solved for;
/// the others are enumerated, split across workers by the first coordinate.
template <class Field>
CountRecord<typename Field::Elem> count_points(const Field& F, const MPoly<typename Field::Elem>& f, const Int& B,
                                               CountMode mode, const std::vector<Constraint<typename Field::Elem>>& cons = {},
                                               const CountOptions& opt = {}) {
  using E = typename Field::Elem;
  auto t0 = std::chrono::steady_clock::now();
  if (f.is_zero()) throw DomainError("cannot count zeros of the zero polynomial");
  if (mode == CountMode::Projective && !f.is_homogeneous()) throw DomainError("projective counting needs a form");
  std::vector<Residue<E>> res;
  for (const auto& c : cons) {
    res.push_back(F.residue(c.prime));
    if (static_cast<int>(c.point.size()) != f.nvars()) throw DomainError("residue point has the wrong length");
    std::vector<GFElem> P;
    for (const auto& v : c.point) P.push_back(v.in(res.back().field));
    auto fb = reduce_mod(F, f, c.prime);
    if (!fb.is_zero()) {
      GFElem val = fb.eval(P);
      if (!val.is_zero() && !val.universal()) throw DomainError("residue point is not on the reduced variety");
      if (val.universal() && val.universal_value() != 0) throw DomainError("residue point is not on the reduced variety");
    }
  }
  auto box = F.box(B);
  auto S = detail::Solver<E>::make(f);
  std::size_t m = S.others.size();
  double cost = std::pow(static_cast<double>(box.size()), static_cast<double>(m));
  if (detail::needs_brute_force(F, S.degree())) cost *= static_cast<double>(box.size());
  if (cost > opt.budget) throw BudgetExceeded("point count exceeds the enumeration budget");

  std::size_t outer = m == 0 ? 1 : box.size();
  struct Chunk {
    Int N = 0;
    std::uint64_t sum = 0;
    std::vector<std::vector<E>> pts;
  };
  std::vector<Chunk> chunks(outer);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    std::vector<E> y(m), cvals(static_cast<std::size_t>(S.degree()) + 1), roots, x(static_cast<std::size_t>(S.nvars));
    std::vector<std::size_t> idx(m, 0);
    bool all = false;
    while (true) {
      std::size_t o = next.fetch_add(1);
      if (o >= outer) break;
      Chunk& ch = chunks[o];
      std::fill(idx.begin(), idx.end(), 0);
      if (m > 0) idx[0] = o;
      while (true) {
        for (std::size_t i = 0; i < m; ++i) y[i] = box[idx[i]];
        for (std::size_t j = 0; j < cvals.size(); ++j) cvals[j] = S.eval_coeff(j, y);
        detail::box_roots(F, cvals, box, B, roots, all);
        const std::vector<E>& cand = all ? box : roots;
        for (const auto& r : cand) {
          for (std::size_t i = 0; i < m; ++i) x[static_cast<std::size_t>(S.others[i])] = y[i];
          x[static_cast<std::size_t>(S.var)] = r;
          if (mode == CountMode::Projective && !(detail::is_canonical_rep(x) && detail::is_primitive(x))) continue;
          if (!cons.empty() && !detail::satisfies_constraints(F, x, cons, mode, res)) continue;
          ++ch.N;
          ch.sum += point_hash(x);
          if (opt.collect) ch.pts.push_back(x);
        }
        // Odometer over coordinates 1..m-1 (coordinate 0 is fixed per chunk).
        std::size_t j = m;
        while (j > 1 && ++idx[j - 1] == box.size()) idx[--j] = 0;
        if (j <= 1) break;
      }
    }
  };
  unsigned nt = std::min<unsigned>(resolve_threads(opt.threads), static_cast<unsigned>(outer));
  if (nt <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  CountRecord<E> rec;
  rec.field = F.name();
  rec.poly = to_text(f);
  rec.B = B;
  rec.mode = mode;
  for (auto& ch : chunks) {
    rec.N += ch.N;
    rec.checksum += ch.sum;
    for (auto& p : ch.pts) rec.points.push_back(std::move(p));
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

/// Independent single-threaded reference: evaluates f at every candidate.
template <class Field>
CountRecord<typename Field::Elem> count_points_reference(const Field& F, const MPoly<typename Field::Elem>& f, const Int& B,
                                                         CountMode mode) {
  using E = typename Field::Elem;
  CountRecord<E> rec;
  rec.field = F.name();
  rec.poly = to_text(f);
  rec.B = B;
  rec.mode = mode;
  auto pts = mode == CountMode::Affine ? enumerate_box(F, B, f.nvars()) : enumerate_proj(F, f.nvars() - 1, B);
  for (const auto& x : pts) {
    if (!RingOps<E>::is_zero(f.eval(x))) continue;
    ++rec.N;
    rec.checksum += point_hash(x);
  }
  return rec;
}

template <class Field>
CountRecord<typename Field::Elem> count_with_reductions(const Field& F, const MPoly<typename Field::Elem>& f, const Int& B,
                                                        const std::vector<Constraint<typename Field::Elem>>& cons,
                                                        const CountOptions& opt = {}) {
  return count_points(F, f, B, CountMode::Affine, cons, opt);
}

// ------------------------------------------------------------------ lines

struct LineCount {
  Int count = 0;
  Rat height_w;
  double bound = 0;
  bool ok = false;
};

template <class Field>
long line_constant(const Field&) {
  if constexpr (std::is_same_v<Field, FunctionField>) return 0;
  if constexpr (std::is_same_v<Field, GaussianField>) return constants::kLineCGaussian;
  return constants::kLineCRationals;
}

/// |{a + lambda w : lambda in O_K} ∩ [B]^n| against c B / H_K(w) + 1.
template <class Field>
LineCount line_count(const Field& F, const std::vector<typename Field::Elem>& a, const std::vector<typename Field::Elem>& w,
                     const Int& B) {
  using E = typename Field::Elem;
  using R = RingOps<E>;
  if (a.size() != w.size()) throw DomainError("base point and direction differ in length");
  bool zero = true;
  for (const auto& c : w) zero = zero && R::is_zero(c);
  if (zero) throw DomainError("zero direction");
  for (const auto& c : a)
    if (!F.in_box(c, B)) throw DomainError("base point outside the box");
  LineCount out;
  out.height_w = relative_height_proj(F, w).hk;
  if constexpr (std::is_same_v<E, Int>) {
    // Intersect the intervals -B <= a_i + lambda w_i <= B.
    Int lo, hi;
    bool first = true;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == 0) continue;
      Int l, h;
      Int p = w[i] > 0 ? w[i] : Int(-w[i]);
      Int u = w[i] > 0 ? Int(-B - a[i]) : Int(a[i] - B);
      Int v = w[i] > 0 ? Int(B - a[i]) : Int(a[i] + B);
      mpz_cdiv_q(l.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
      mpz_fdiv_q(h.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
      if (first || l > lo) lo = l;
      if (first || h < hi) hi = h;
      first = false;
    }
    out.count = hi >= lo ? Int(hi - lo + 1) : Int(0);
  } else {
    // lambda w_i must itself be small; enumerate the candidate lambdas.
    Int maxw = 0;
    for (const auto& c : w) maxw = std::max<Int>(maxw, R::size(c));
    Int LB;
    if constexpr (std::is_same_v<Field, FunctionField>)
      LB = B;
    else
      LB = (4 * B) / maxw + 1;
    for (const auto& lam : F.box(LB)) {
      bool in = true;
      for (std::size_t i = 0; i < w.size() && in; ++i) in = F.in_box(E(a[i] + lam * w[i]), B);
      if (in) ++out.count;
    }
  }
  long c = line_constant(F);
  if constexpr (std::is_same_v<Field, FunctionField>) c = static_cast<long>(F.q());
  out.bound = static_cast<double>(c) * B.get_d() / to_double(out.height_w) + 1.0;
  out.ok = out.count.get_d() <= out.bound;
  return out;
}

template <class E>
struct LinesOnSurface {
  Int union_count = 0;
  std::size_t lines = 0;
  bool all_on_surface = true;
  double bound = 0;
  bool ok = false;
};

/// Points of [B]^3 on the union of the given lines (each checked to lie on
/// Z(f)) against c d^6 B + |I|.
template <class Field>
LinesOnSurface<typename Field::Elem> lines_on_surface(const Field& F, const MPoly<typename Field::Elem>& f,
                                                      const std::vector<std::pair<std::vector<typename Field::Elem>,
                                                                                  std::vector<typename Field::Elem>>>& lines,
                                                      const Int& B) {
  using E = typename Field::Elem;
  LinesOnSurface<E> out;
  out.lines = lines.size();
  int d = f.degree();
  std::map<std::vector<std::string>, bool> seen;
  for (const auto& [a, w] : lines) {
    if (static_cast<int>(a.size()) != f.nvars() || w.size() != a.size()) throw DomainError("line has the wrong dimension");
    // A degree-d restriction vanishing at d+1 parameters vanishes identically.
    for (long t = 0; t <= d; ++t) {
      std::vector<E> x;
      for (std::size_t i = 0; i < a.size(); ++i) x.push_back(a[i] + F.from_long(t) * w[i]);
      if (!RingOps<E>::is_zero(f.eval(x))) out.all_on_surface = false;
    }
    Int LB;
    Int maxw = 0;
    for (const auto& c : w) maxw = std::max<Int>(maxw, RingOps<E>::size(c));
    if (maxw == 0) throw DomainError("zero direction");
    if constexpr (std::is_same_v<Field, FunctionField>)
      LB = B;
    else
      LB = (4 * B) / maxw + 1;
    bool a_in = true;
    for (const auto& c : a) a_in = a_in && F.in_box(c, B);
    if (!a_in) throw DomainError("base point outside the box");
    for (const auto& lam : F.box(LB)) {
      std::vector<std::string> key;
      bool in = true;
      for (std::size_t i = 0; i < a.size() && in; ++i) {
        E c = a[i] + lam * w[i];
        in = F.in_box(c, B);
        key.push_back(RingOps<E>::to_string(c));
      }
      if (in) seen[key] = true;
    }
  }
  out.union_count = static_cast<unsigned long>(seen.size());
  out.bound = static_cast<double>(constants::kLinesOnSurfaceC) * std::pow(static_cast<double>(d), 6) * B.get_d() +
              static_cast<double>(lines.size());
  out.ok = out.all_on_surface && out.union_count.get_d() <= out.bound;
  return out;
}

// ------------------------------------------------------------ exponent fit

struct FitResult {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // root mean square
  std::size_t points = 0;
};

/// Ordinary least squares of log N against log B.
FitResult fit_exponent(const std::vector<std::pair<double, double>>& B_and_N);

// -------------------------------------------------------- dimension growth

template <class E>
struct SliceTrace {
  std::vector<E> direction;
  bool gate_passed = false;
  std::size_t candidates_tried = 0;
  std::string section;  // the section curve through the origin that was gated
  std::vector<std::pair<E, Int>> slices;  // nonempty slices (k, count)
  Int sliced_total = 0;
};

template <class E>
struct GrowthRecord {
  CountRecord<E> direct;
  SliceTrace<E> trace;
  int degree = 0;
  int exponent = 0;
  double ratio = 0;   // N / B
  double target = 0;  // d^e B
};

/// Brute-force count over [B]^3 plus a recount hyperplane by hyperplane.
/// The slicing direction is the first a in {0..d^2}^3 whose section through
/// the origin is absolutely irreducible.
template <class Field>
GrowthRecord<typename Field::Elem> dimension_growth_count(const Field& F, const MPoly<typename Field::Elem>& f, const Int& B,
                                                          const CountOptions& opt = {}) {
  using E = typename Field::Elem;
  using R = RingOps<E>;
  if (f.nvars() != 3) throw DomainError("dimension growth counting needs 3 affine variables");
  GrowthRecord<E> g;
  g.degree = f.degree();
  int d = g.degree;
  g.direct = count_points(F, f, B, CountMode::Affine, {}, opt);
  g.exponent = std::is_same_v<Field, FunctionField> ? constants::kGrowthExponentFunction : constants::kGrowthExponentNumber;
  g.ratio = g.direct.N.get_d() / B.get_d();
  g.target = std::pow(static_cast<double>(d), g.exponent) * B.get_d();

  // Search the slicing direction.
  unsigned long side = static_cast<unsigned long>(d) * static_cast<unsigned long>(d) + 1;
  std::vector<E> A;
  std::vector<unsigned long> code(3, 0);
  auto& tr = g.trace;
  while (true) {
    // first coordinate fastest
    std::size_t j = 0;
    while (j < 3 && ++code[j] == side) code[j++] = 0;
    if (j == 3) break;
    std::vector<E> a;
    for (auto c : code) a.push_back(element_by_index(F, c));
    ++tr.candidates_tried;
    Matrix<E> row(1, 3, E(0));
    for (std::size_t i = 0; i < 3; ++i) row(0, i) = a[i];
    auto ker = integral_kernel(row);
    if (ker.size() != 2) continue;
    // Section curve f(u v1 + w v2) in the two lattice coordinates.
    std::vector<MPoly<E>> subs;
    for (std::size_t i = 0; i < 3; ++i)
      subs.push_back(MPoly<E>::variable(2, 0, E(1)).scaled(ker[0][i]) + MPoly<E>::variable(2, 1, E(1)).scaled(ker[1][i]));
    MPoly<E> sec = f.compose(subs);
    if (sec.is_zero() || sec.degree() != d) continue;
    bool ok = d <= 1 || absolute_irreducibility_gate(F, sec).absolutely_irreducible;
    if (!ok) continue;
    A = a;
    tr.gate_passed = true;
    tr.section = to_text(sec);
    break;
  }
  if (A.empty()) {
    A = {F.from_long(0), F.from_long(0), F.from_long(1)};
    tr.gate_passed = false;
  }
  tr.direction = A;

  // Recount slice by slice, solving the hyperplane equation for the first
  // coordinate with a nonzero coefficient.
  std::size_t piv = 0;
  for (std::size_t i = 0; i < 3; ++i)
    if (!R::is_zero(A[i])) {
      piv = i;
      break;
    }
  std::vector<std::size_t> fr;
  for (std::size_t i = 0; i < 3; ++i)
    if (i != piv) fr.push_back(i);
  auto box = F.box(B);
  Int Bk;
  if constexpr (std::is_same_v<Field, FunctionField>) {
    Int m = 1;
    for (const auto& c : A) m = std::max<Int>(m, R::size(c));
    Bk = B * m;
  } else {
    double s = 0;
    for (const auto& c : A) s += std::pow(R::size(c).get_d(), 1.0 / F.dK());
    Int si(static_cast<long>(std::ceil(s)));
    Bk = B * pow_int(si, static_cast<unsigned long>(F.dK()));
  }
  if (static_cast<double>(F.box(Bk).size()) * static_cast<double>(box.size()) * static_cast<double>(box.size()) > opt.budget)
    throw BudgetExceeded("sliced recount exceeds the enumeration budget");
  for (const auto& k : F.box(Bk)) {
    Int n = 0;
    std::vector<E> x(3);
    for (const auto& u : box)
      for (const auto& v : box) {
        x[fr[0]] = u;
        x[fr[1]] = v;
        E rest = k - A[fr[0]] * u - A[fr[1]] * v;
        E q, r;
        R::divmod(rest, A[piv], q, r);
        if (!R::is_zero(r) || !F.in_box(q, B)) continue;
        x[piv] = q;
        if (R::is_zero(f.eval(x))) ++n;
      }
    if (n != 0) tr.slices.emplace_back(k, n);
    tr.sliced_total += n;
  }
  return g;
}

}  // namespace detlab
