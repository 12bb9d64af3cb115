#pragma once

#include <cmath>
#include <vector>

#include "detlab/field.hpp"
#include "detlab/mpoly.hpp"
#include "detlab/poly_io.hpp"

namespace detlab {

/// Exact relative height H_K and the absolute height H = H_K^{1/d_K} as a float.
struct HeightValue {
  Rat hk;
  double h = 0;
};

template <class Field>
HeightValue make_height(const Field& F, const Rat& hk) {
  return {hk, std::pow(to_double(hk), 1.0 / F.dK())};
}

/// |x|_inf^{d_K} for x in K (exact rational: |x|, q^deg, Nm).
template <class E>
Rat archimedean_size(const Frac<E>& x) {
  if (x.is_zero()) return 0;
  Rat r(RingOps<E>::size(x.num), RingOps<E>::size(x.den));
  r.canonicalize();
  return r;
}

/// Primitive integral vector with canonical unit: the Serre lift of a
/// projective point (with c1 = c2 = c3 = 1 for these PIDs).
template <class E>
std::vector<E> primitive_lift(const std::vector<Frac<E>>& coords) {
  using R = RingOps<E>;
  bool nonzero = false;
  E L(1);
  for (const auto& c : coords) {
    if (!c.is_zero()) nonzero = true;
    L = exact_div<E>(L * c.den, R::gcd(L, c.den));
  }
  if (!nonzero) throw DomainError("projective point with all coordinates zero");
  std::vector<E> v;
  for (const auto& c : coords) v.push_back((c * Frac<E>(L)).as_integral());
  E g(0);
  for (const auto& x : v) g = R::gcd(g, x);
  for (auto& x : v) x = exact_div(x, g);
  for (const auto& x : v) {
    if (R::is_zero(x)) continue;
    E u = R::canonical_unit(x);
    for (auto& y : v) y *= u;
    break;
  }
  return v;
}

template <class E>
std::vector<E> primitive_lift(const std::vector<E>& coords) {
  std::vector<Frac<E>> k;
  for (const auto& c : coords) k.emplace_back(c);
  return primitive_lift(k);
}

/// H_K of a primitive integral vector: the largest Euclidean size.
template <class E>
Int height_of_primitive(const std::vector<E>& v) {
  Int h = 0;
  for (const auto& x : v) h = std::max(h, RingOps<E>::size(x));
  return h;
}

template <class Field>
HeightValue relative_height_proj(const Field& F, const std::vector<typename Field::K>& coords) {
  return make_height(F, Rat(height_of_primitive(primitive_lift(coords))));
}

template <class Field>
HeightValue relative_height_proj(const Field& F, const std::vector<typename Field::Elem>& coords) {
  return make_height(F, Rat(height_of_primitive(primitive_lift(coords))));
}

enum class HeightMode { Projective, Affine };

/// Height of a polynomial over K. Projective: H_K of the coefficient vector.
/// Affine: prod_v max{1, |f|_v}^{d_K}; the finite places contribute the norm
/// of the common denominator, the archimedean place max{1, max |a_I|^{d_K}}.
template <class Field>
HeightValue poly_height(const Field& F, const MPoly<typename Field::K>& f, HeightMode mode) {
  using E = typename Field::Elem;
  if (f.is_zero()) throw DomainError("height of the zero polynomial");
  if (mode == HeightMode::Projective) {
    std::vector<typename Field::K> c;
    for (const auto& [e, a] : f.terms()) c.push_back(a);
    return relative_height_proj(F, c);
  }
  E L = common_denominator(f);
  Rat arch = 1;
  for (const auto& [e, a] : f.terms()) arch = std::max(arch, archimedean_size(a));
  return make_height(F, arch * Rat(F.norm(L)));
}

template <class Field>
HeightValue poly_height(const Field& F, const MPoly<typename Field::Elem>& f, HeightMode mode) {
  return poly_height(F, to_k(f), mode);
}

/// prod_v |x|_v^{d_K}, computed from the archimedean size and the valuations
/// at the primes dividing numerator and denominator. Equals 1 for x != 0.
template <class Field>
Rat product_formula_check(const Field& F, const typename Field::K& x) {
  if (x.is_zero()) throw DomainError("product formula of zero");
  Rat prod = archimedean_size(x);
  auto visit = [&](const typename Field::Elem& part) {
    for (const auto& [p, e] : F.factor(part)) {
      (void)e;
      int v = ord_frac(F, p, x);
      if (v > 0)
        prod /= Rat(pow_int(p.norm, static_cast<unsigned long>(v)));
      else if (v < 0)
        prod *= Rat(pow_int(p.norm, static_cast<unsigned long>(-v)));
    }
  };
  visit(x.num);
  visit(x.den);
  prod.canonicalize();
  return prod;
}

struct HeightBoundCheck {
  HeightValue lhs, rhs;
  bool ok = false;
};

/// Checks H_K(phi_0(x):...:phi_r(x)) <= R^{d_K} H_K(c) H_K(x)^m for forms of
/// common degree m (R = most monomials in one form, c = all coefficients).
/// With a single polynomial the affine variant H_K(1:phi(x)) <=
/// R^{d_K} H_K(1:c) H_K(1:x)^m is used.
template <class Field>
HeightBoundCheck eval_height_bound_check(const Field& F, const std::vector<MPoly<typename Field::Elem>>& polys,
                                         const std::vector<typename Field::K>& point) {
  using E = typename Field::Elem;
  if (polys.empty()) throw DomainError("no polynomials given");
  int m = polys.front().degree();
  std::size_t R = 0;
  std::vector<E> coeffs;
  for (const auto& p : polys) {
    if (p.is_zero() || !p.is_homogeneous() || p.degree() != m) throw DomainError("polynomials must be forms of a common degree");
    R = std::max(R, p.size());
    for (const auto& [e, c] : p.terms()) coeffs.push_back(c);
  }
  std::vector<E> x = primitive_lift(point);
  std::vector<E> vals;
  bool any = false;
  for (const auto& p : polys) {
    vals.push_back(p.eval(x));
    if (!RingOps<E>::is_zero(vals.back())) any = true;
  }
  if (!any) throw DomainError("all polynomials vanish at the point");
  Rat Rd = Rat(pow_int(Int(static_cast<unsigned long>(R)), static_cast<unsigned long>(F.dK())));
  HeightBoundCheck out;
  if (polys.size() == 1) {
    auto with_one = [](std::vector<E> v) {
      v.insert(v.begin(), E(1));
      return v;
    };
    out.lhs = relative_height_proj(F, with_one(vals));
    Rat hc = relative_height_proj(F, with_one(coeffs)).hk;
    Rat hx = relative_height_proj(F, with_one(x)).hk;
    out.rhs = make_height(F, Rd * hc * pow_rat(hx, m));
  } else {
    out.lhs = relative_height_proj(F, vals);
    Rat hc = relative_height_proj(F, coeffs).hk;
    Rat hx = relative_height_proj(F, x).hk;
    out.rhs = make_height(F, Rd * hc * pow_rat(hx, m));
  }
  out.ok = out.lhs.hk <= out.rhs.hk;
  return out;
}

}  // namespace detlab
