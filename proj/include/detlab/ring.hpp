#pragma once

#include <string>
#include <utility>

#include "detlab/errors.hpp"
#include "detlab/fp_poly.hpp"
#include "detlab/gauss_int.hpp"
#include "detlab/integer.hpp"

namespace detlab {

/// Euclidean-domain operations for the three rings of integers
/// Z, F_p[T] and Z[i]. Specialized below.
template <class E>
struct RingOps;

template <>
struct RingOps<Int> {
  static bool is_zero(const Int& x) { return x == 0; }
  static bool is_unit(const Int& x) { return x == 1 || x == -1; }
  static void divmod(const Int& a, const Int& b, Int& q, Int& r) {
    if (b == 0) throw DomainError("integer division by zero");
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  static Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  /// Unit u with u*x canonical (nonnegative).
  static Int canonical_unit(const Int& x) { return x < 0 ? Int(-1) : Int(1); }
  static Int unit_inverse(const Int& u) { return u; }
  /// Euclidean size |x|; for x != 0 it equals the norm and H_K(1:x) of an integer.
  static Int size(const Int& x) { return abs(x); }
  static int compare(const Int& a, const Int& b) { return cmp(a, b) < 0 ? -1 : (cmp(a, b) > 0 ? 1 : 0); }
  static std::string to_string(const Int& x) { return x.get_str(); }
  static bool needs_parens(const Int&) { return false; }
};

template <>
struct RingOps<FpPoly> {
  static bool is_zero(const FpPoly& x) { return x.is_zero(); }
  static bool is_unit(const FpPoly& x) { return !x.is_zero() && x.degree() == 0; }
  static void divmod(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    auto qr = detlab::divmod(a, b);
    q = std::move(qr.first);
    r = std::move(qr.second);
  }
  static FpPoly gcd(const FpPoly& a, const FpPoly& b) {
    if (a.universal() && b.universal()) return (a.is_zero() && b.is_zero()) ? FpPoly(0) : FpPoly(1);
    return detlab::gcd(a, b);
  }
  static FpPoly canonical_unit(const FpPoly& x) {
    if (x.is_zero() || x.universal()) return FpPoly(x.universal() && x.universal_value() < 0 ? -1 : 1);
    return FpPoly::constant(x.modulus(), static_cast<long>(invmod(x.lead(), x.modulus())));
  }
  static FpPoly unit_inverse(const FpPoly& u) {
    if (u.universal()) return u;
    return FpPoly::constant(u.modulus(), static_cast<long>(invmod(u.lead(), u.modulus())));
  }
  /// p^deg (0 for zero).
  static Int size(const FpPoly& x) {
    if (x.is_zero()) return 0;
    if (x.universal()) return 1;
    return pow_int(Int(x.modulus()), static_cast<unsigned long>(x.degree()));
  }
  static int compare(const FpPoly& a, const FpPoly& b) { return FpPoly::compare(a, b); }
  static std::string to_string(const FpPoly& x) { return x.to_string('t'); }
  static bool needs_parens(const FpPoly& x) {
    if (x.universal() || x.degree() < 1) return false;
    int terms = 0;
    for (auto c : x.coeffs()) terms += c != 0;
    return terms > 1 || x.lead() != 1;
  }
};

template <>
struct RingOps<GaussInt> {
  static bool is_zero(const GaussInt& x) { return x.is_zero(); }
  static bool is_unit(const GaussInt& x) { return x.norm() == 1; }
  static void divmod(const GaussInt& a, const GaussInt& b, GaussInt& q, GaussInt& r) { gauss_divmod(a, b, q, r); }
  static GaussInt gcd(GaussInt a, GaussInt b) {
    while (!b.is_zero()) {
      GaussInt q, r;
      gauss_divmod(a, b, q, r);
      a = std::move(b);
      b = std::move(r);
    }
    return a * canonical_unit(a);
  }
  /// Unit u with u*x in {re > 0, im >= 0}.
  static GaussInt canonical_unit(const GaussInt& x) {
    if (x.is_zero()) return GaussInt(1);
    GaussInt u(1);
    for (int k = 0; k < 4; ++k) {
      GaussInt y = x * u;
      if (y.re > 0 && y.im >= 0) return u;
      u *= GaussInt::i();
    }
    throw InvariantViolation("no canonical Gaussian associate");
  }
  static GaussInt unit_inverse(const GaussInt& u) { return u.conj(); }
  static Int size(const GaussInt& x) { return x.norm(); }
  static int compare(const GaussInt& a, const GaussInt& b) {
    if (a.re != b.re) return a.re < b.re ? -1 : 1;
    if (a.im != b.im) return a.im < b.im ? -1 : 1;
    return 0;
  }
  static std::string to_string(const GaussInt& x) { return x.to_string(); }
  static bool needs_parens(const GaussInt& x) { return x.re != 0 && x.im != 0; }
};

template <class E>
E canonical(const E& x) {
  return x * RingOps<E>::canonical_unit(x);
}

/// a / b, which must be exact.
template <class E>
E exact_div(const E& a, const E& b) {
  E q, r;
  RingOps<E>::divmod(a, b, q, r);
  if (!RingOps<E>::is_zero(r)) throw DomainError("inexact division in ring of integers");
  return q;
}

template <class E>
bool divides(const E& b, const E& a) {
  if (RingOps<E>::is_zero(b)) return RingOps<E>::is_zero(a);
  E q, r;
  RingOps<E>::divmod(a, b, q, r);
  return RingOps<E>::is_zero(r);
}

/// Element of the fraction field of E: den canonical, gcd(num, den) a unit.
template <class E>
struct Frac {
  E num, den;

  Frac() : num(0), den(1) {}
  Frac(long n) : num(n), den(1) {}  // NOLINT(google-explicit-constructor)
  Frac(E n) : num(std::move(n)), den(1) {}  // NOLINT(google-explicit-constructor)
  Frac(E n, E d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    using R = RingOps<E>;
    if (R::is_zero(den)) throw DomainError("zero denominator");
    if (R::is_zero(num)) {
      num = E(0);
      den = E(1);
      return;
    }
    E g = R::gcd(num, den);
    if (!R::is_unit(g)) {
      num = exact_div(num, g);
      den = exact_div(den, g);
    }
    E u = R::canonical_unit(den);
    num *= u;
    den *= u;
  }

  bool is_zero() const { return RingOps<E>::is_zero(num); }
  bool is_integral() const { return RingOps<E>::is_unit(den); }
  /// Numerator scaled so the denominator is 1 (requires is_integral()).
  E as_integral() const { return num * RingOps<E>::unit_inverse(den); }

  Frac operator-() const { return Frac(-num, den, true); }
  Frac& operator+=(const Frac& o) { return *this = Frac(num * o.den + o.num * den, den * o.den); }
  Frac& operator-=(const Frac& o) { return *this = Frac(num * o.den - o.num * den, den * o.den); }
  Frac& operator*=(const Frac& o) { return *this = Frac(num * o.num, den * o.den); }
  Frac& operator/=(const Frac& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    return *this = Frac(num * o.den, den * o.num);
  }
  friend Frac operator+(Frac a, const Frac& b) { return a += b; }
  friend Frac operator-(Frac a, const Frac& b) { return a -= b; }
  friend Frac operator*(Frac a, const Frac& b) { return a *= b; }
  friend Frac operator/(Frac a, const Frac& b) { return a /= b; }
  friend bool operator==(const Frac& a, const Frac& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }

  std::string to_string() const {
    using R = RingOps<E>;
    if (R::is_unit(den)) {
      return R::to_string(as_integral());
    }
    std::string n = R::to_string(num), d = R::to_string(den);
    if (R::needs_parens(num)) n = "(" + n + ")";
    if (R::needs_parens(den) || R::to_string(den).find_first_of("+-*^") != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  Frac(E n, E d, bool) : num(std::move(n)), den(std::move(d)) {}
};

}  // namespace detlab
