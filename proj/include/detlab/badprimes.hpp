#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "detlab/heights.hpp"
#include "detlab/irreducible.hpp"

namespace detlab {

// ------------------------------------------------------------ reduction

template <class Field>
MPoly<GFElem> reduce_mod(const Field& F, const MPoly<typename Field::Elem>& f, const PrimeId<typename Field::Elem>& p) {
  auto R = F.residue(p);
  return f.template map_coeffs<GFElem>([&](const typename Field::Elem& c) { return R.reduce(c).in(R.field); });
}

template <class Field>
MPoly<GFElem> reduce_mod(const Field& F, const MPoly<typename Field::K>& f, const PrimeId<typename Field::Elem>& p) {
  auto R = F.residue(p);
  return f.template map_coeffs<GFElem>([&](const typename Field::K& c) { return reduce_frac(R, c).in(R.field); });
}

template <class E>
std::string prime_label(const PrimeId<E>& p) {
  return RingOps<E>::to_string(p.gen);
}

/// The first `count` primes by norm (at least), starting above `floor`.
template <class Field>
std::vector<PrimeId<typename Field::Elem>> primes_after(const Field& F, const Int& floor, std::size_t count) {
  Int Q = std::max<Int>(Int(16), Int(2 * floor));
  while (true) {
    std::vector<PrimeId<typename Field::Elem>> out;
    for (auto& p : F.primes_up_to(Q))
      if (p.norm > floor) out.push_back(std::move(p));
    if (out.size() >= count) return out;
    Q *= 4;
  }
}

// ------------------------------------------------------------ selector

/// The characteristic bracket [a1,a2,a3,a4] and the threshold beta (c2 = 1).
struct MultiCharSelector {
  int d = 0;
  std::uint64_t characteristic = 0;
  int index = 0;  // 0..3 for a1..a4

  template <class T>
  T pick(const T& a1, const T& a2, const T& a3, const T& a4) const {
    switch (index) {
      case 0: return a1;
      case 1: return a2;
      case 2: return a3;
      default: return a4;
    }
  }
  /// beta: 27 d^4 (char 0), d^{14/3} (char <= 27 d^4), 1 otherwise.
  double beta() const {
    if (characteristic == 0) return 27.0 * std::pow(d, 4);
    if (index <= 2) return std::pow(static_cast<double>(d), 14.0 / 3.0);
    return 1.0;
  }
  std::string beta_text() const {
    if (characteristic == 0) return "27*d^4";
    if (index <= 2) return "d^(14/3)";
    return "1";
  }
  /// Exact test N > max{beta, c2}.
  bool above_floor(const Int& N) const {
    Int D(d);
    if (characteristic == 0) return N > Int(27) * pow_int(D, 4) && N > 1;
    if (index <= 2) return N * N * N > pow_int(D, 14) && N > 1;
    return N > 1;
  }
};

inline MultiCharSelector make_selector(std::uint64_t characteristic, int d) {
  MultiCharSelector s;
  s.d = d;
  s.characteristic = characteristic;
  Int ch(static_cast<unsigned long>(characteristic));
  Int top = std::max<Int>(Int(27) * pow_int(Int(d), 4), Int(1));
  if (characteristic == 0)
    s.index = 0;
  else if (ch <= Int(d) * Int(d - 1))
    s.index = 1;
  else if (ch <= top)
    s.index = 2;
  else
    s.index = 3;
  return s;
}

// ------------------------------------------------------------ gates

/// f as a plane form over O_K: homogenized if needed, at most 3 variables.
template <class E>
MPoly<E> as_projective_form(const MPoly<E>& f) {
  if (f.is_zero()) throw DomainError("zero polynomial");
  MPoly<E> g = f.is_homogeneous() ? f : f.homogenize();
  if (g.nvars() > 3) throw DomainError("only plane curves (forms in at most 3 variables) are supported");
  return g.with_nvars(3);
}

struct IrreducibilityGate {
  bool absolutely_irreducible = false;
  std::string witness;  // prime with an absolutely irreducible reduction
  int primes_tested = 0;
};

/// Absolute irreducibility over K, decided through reductions: an
/// absolutely irreducible reduction of the same degree certifies it; if none
/// of `tries` primes gives one, f is reported as not absolutely irreducible.
template <class Field>
IrreducibilityGate absolute_irreducibility_gate(const Field& F, const MPoly<typename Field::Elem>& f0, int tries = 16) {
  auto f = as_projective_form(f0);
  IrreducibilityGate g;
  int d = f.degree();
  if (d < 1) return g;
  if (d == 1) {
    g.absolutely_irreducible = true;
    g.witness = "linear";
    return g;
  }
  std::size_t want = static_cast<std::size_t>(tries) * 2;
  for (const auto& p : primes_after(F, Int(d * (d - 1)), want)) {
    auto fb = reduce_mod(F, f, p);
    if (fb.is_zero() || fb.degree() != d) continue;
    ++g.primes_tested;
    if (abs_irreducible(F.residue(p).field, fb, IrredMethod::ExtensionFactor)) {
      g.absolutely_irreducible = true;
      g.witness = prime_label(p);
      return g;
    }
    if (g.primes_tested >= tries) break;
  }
  return g;
}

// ------------------------------------------------------------ bad primes

template <class E>
struct BadPrimeReport {
  std::string poly;
  Int cutoff;
  int degree = 0;
  MultiCharSelector selector;
  std::vector<PrimeId<E>> raw;       // all tested primes with a bad reduction
  std::vector<PrimeId<E>> filtered;  // those with N(p) > max{beta, c2}
  double log_b = 0;                  // sum over filtered of ln N / N (truncated at cutoff)
  double b = 1;
  bool b_exactly_one = true;
  double log_height = 0;  // log H_{K,aff}(f)
  double lemma_bound = 0;
  bool lemma_ok = false;
};

template <class Field>
bool reduction_is_bad(const Field& F, const MPoly<typename Field::Elem>& form, const PrimeId<typename Field::Elem>& p) {
  auto fb = reduce_mod(F, form, p);
  if (fb.is_zero() || fb.degree() != form.degree()) return true;
  return !abs_irreducible(F.residue(p).field, fb, IrredMethod::ExtensionFactor);
}

/// Raw and filtered bad primes up to `cutoff`, b(f), and the
/// b(f) <= C max{d^{[-2,4/3,-8/3,2]} log H_{K,aff}(f), 1} check.
template <class Field>
BadPrimeReport<typename Field::Elem> bad_primes(const Field& F, const MPoly<typename Field::Elem>& f0, const Int& cutoff, double C) {
  using E = typename Field::Elem;
  auto f = as_projective_form(f0);
  int d = f.degree();
  if (d < 2) throw DomainError("bad primes need degree >= 2");
  auto gate = absolute_irreducibility_gate(F, f);
  if (!gate.absolutely_irreducible) throw DomainError("f is not absolutely irreducible over K");
  BadPrimeReport<E> r;
  r.poly = to_text(f0);
  r.cutoff = cutoff;
  r.degree = d;
  r.selector = make_selector(F.characteristic(), d);
  for (const auto& p : F.primes_up_to(cutoff)) {
    if (!reduction_is_bad(F, f, p)) continue;
    r.raw.push_back(p);
    if (r.selector.above_floor(p.norm)) r.filtered.push_back(p);
  }
  for (const auto& p : r.filtered) r.log_b += log_of(p.norm) / p.norm.get_d();
  r.b_exactly_one = r.filtered.empty();
  r.b = std::exp(r.log_b);
  r.log_height = F.log(Int(poly_height(F, f0, HeightMode::Affine).hk.get_num()));
  double a = r.selector.pick(-2.0, 4.0 / 3.0, -8.0 / 3.0, 2.0);
  r.lemma_bound = C * std::max(std::pow(static_cast<double>(d), a) * r.log_height, 1.0);
  r.lemma_ok = r.b <= r.lemma_bound;
  return r;
}

/// Primes of norm <= cutoff where the reduction is not geometrically integral.
template <class Field>
std::vector<PrimeId<typename Field::Elem>> pi_X(const Field& F, const MPoly<typename Field::Elem>& f0, const Int& cutoff) {
  auto f = as_projective_form(f0);
  if (!absolute_irreducibility_gate(F, f).absolutely_irreducible) throw DomainError("f is not geometrically integral over K");
  std::vector<PrimeId<typename Field::Elem>> out;
  for (const auto& p : F.primes_up_to(cutoff))
    if (reduction_is_bad(F, f, p)) out.push_back(p);
  return out;
}

template <class E>
struct PiXReport {
  std::vector<E> point;  // primitive lift
  std::vector<PrimeId<E>> primes;
  double sum_log = 0;  // sum of log N(p)
  double log_B = 0;    // log H_K(x)
  double bound = 0;    // kappa log B + kappa'
  bool ok = false;
};

/// Primes p <= cutoff at which x reduces to a singular point of f mod p.
template <class Field>
PiXReport<typename Field::Elem> pi_x(const Field& F, const MPoly<typename Field::Elem>& f, const std::vector<typename Field::K>& point,
                                     const Int& cutoff, double kappa, double kappa2) {
  using E = typename Field::Elem;
  PiXReport<E> r;
  r.point = primitive_lift(point);
  if (static_cast<int>(r.point.size()) != f.nvars()) throw DomainError("point dimension does not match the polynomial");
  if (!RingOps<E>::is_zero(f.eval(r.point))) throw DomainError("point is not on Z(f)");
  std::vector<E> grad;
  for (int i = 0; i < f.nvars(); ++i) grad.push_back(f.derivative(i).eval(r.point));
  for (const auto& p : F.primes_up_to(cutoff)) {
    bool singular = true;
    for (const auto& g : grad)
      if (!RingOps<E>::is_zero(g) && F.ord(p, g) == 0) singular = false;
    if (!singular) continue;
    r.primes.push_back(p);
    r.sum_log += F.log(p.norm);
  }
  r.log_B = F.log(height_of_primitive(r.point));
  r.bound = kappa * r.log_B + kappa2;
  r.ok = r.sum_log <= r.bound;
  return r;
}

// ------------------------------------------------------------ coordinates

template <class E>
struct ShiftResult {
  std::vector<long> a;
  E value;       // f(a, 1), the coefficient of X_{v-1}^d in f1
  MPoly<E> f1;   // f(X_0 + a_0 X_{v-1}, ..., X_{v-1})
  Rat lhs, rhs;  // size(f(a,1)) and 3^{-(v-1)d} 2^{-d d_K} max size(c)
  bool certificate = false;
};

/// Exhaustive search over a in {0..d}^{v-1} for the largest |f(a,1)|
/// (first maximum in odometer order, first coordinate fastest).
template <class Field>
ShiftResult<typename Field::Elem> shift_for_top_coefficient(const Field& F, const MPoly<typename Field::Elem>& f) {
  using E = typename Field::Elem;
  static_assert(!std::is_same_v<Field, FunctionField>, "number fields only");
  if (f.is_zero() || !f.is_homogeneous()) throw DomainError("f must be a nonzero form");
  int v = f.nvars(), d = f.degree();
  if (v < 1 || d < 1) throw DomainError("f must have positive degree");
  ShiftResult<E> best;
  Int best_size = -1;
  std::vector<long> a(static_cast<std::size_t>(v - 1), 0);
  while (true) {
    std::vector<E> x;
    for (long ai : a) x.push_back(E(ai));
    x.push_back(E(1));
    E val = f.eval(x);
    Int sz = RingOps<E>::size(val);
    if (sz > best_size) {
      best_size = sz;
      best.a = a;
      best.value = val;
    }
    std::size_t i = 0;
    while (i < a.size() && a[i] == d) a[i++] = 0;
    if (i == a.size()) break;
    ++a[i];
  }
  std::vector<MPoly<E>> subs;
  for (int i = 0; i < v; ++i) {
    MPoly<E> s = MPoly<E>::variable(v, i);
    if (i + 1 < v) s += MPoly<E>::variable(v, v - 1, E(best.a[static_cast<std::size_t>(i)]));
    subs.push_back(std::move(s));
  }
  best.f1 = f.compose(subs);
  Int cmax = 0;
  for (const auto& [e, c] : f.terms()) cmax = std::max(cmax, RingOps<E>::size(c));
  best.lhs = Rat(best_size);
  best.rhs = Rat(cmax, pow_int(Int(3), static_cast<unsigned long>((v - 1) * d)) * pow_int(Int(2), static_cast<unsigned long>(d * F.dK())));
  best.rhs.canonicalize();
  best.certificate = best.lhs >= best.rhs;
  if (!best.certificate) throw InvariantViolation("top-coefficient bound failed");
  return best;
}

/// The i-th element of a fixed enumeration of O_K: 0,1,2,... for number
/// fields, base-q digit polynomials for F_q[T].
template <class Field>
typename Field::Elem element_by_index(const Field& F, unsigned long i) {
  if constexpr (std::is_same_v<Field, FunctionField>) {
    std::vector<std::uint32_t> c;
    while (i) {
      c.push_back(static_cast<std::uint32_t>(i % F.q()));
      i /= F.q();
    }
    return FpPoly(F.q(), c);
  } else {
    return F.from_long(static_cast<long>(i));
  }
}

/// A point with coordinates in a fixed set of `side` elements where f != 0
/// (exists when side > deg f by the Combinatorial Nullstellensatz).
template <class Field>
std::vector<typename Field::Elem> nonvanishing_point(const Field& F, const MPoly<typename Field::Elem>& f, int side) {
  using E = typename Field::Elem;
  if (f.is_zero()) throw DomainError("zero polynomial vanishes everywhere");
  if (side < 1) throw DomainError("box side must be positive");
  std::vector<E> S;
  for (int i = 0; i < side; ++i) S.push_back(element_by_index(F, static_cast<unsigned long>(i)));
  int v = f.nvars();
  std::vector<int> idx(static_cast<std::size_t>(v), 0);
  while (true) {
    std::vector<E> x;
    for (int k : idx) x.push_back(S[static_cast<std::size_t>(k)]);
    if (!RingOps<E>::is_zero(f.eval(x))) return x;
    std::size_t i = 0;
    while (i < idx.size() && idx[i] == side - 1) idx[i++] = 0;
    if (i == idx.size()) break;
    ++idx[i];
  }
  throw InvariantViolation("no nonvanishing point in the grid (box side too small?)");
}

}  // namespace detlab
