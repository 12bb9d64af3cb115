#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "detlab/errors.hpp"
#include "detlab/integer.hpp"

namespace detlab {

/// Finite field F_p[x]/(m(x)) with m monic irreducible of degree k.
/// Contexts are interned: equal (p, m) yield the same pointer, which lives
/// for the whole process.
class GFContext {
 public:
  static const GFContext* get(std::uint32_t p, const std::vector<std::uint32_t>& monic_modulus);
  static const GFContext* prime_field(std::uint32_t p);
  /// Field of size p^k built from the smallest monic irreducible of degree k.
  static const GFContext* of_degree(std::uint32_t p, int k);

  std::uint32_t p() const { return p_; }
  int k() const { return static_cast<int>(mod_.size()) - 1; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  Int size() const { return pow_int(Int(p_), static_cast<unsigned long>(k())); }
  std::string describe() const;

  GFContext(std::uint32_t p, std::vector<std::uint32_t> mod) : p_(p), mod_(std::move(mod)) {}

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> mod_;
};

/// Element of a GFContext, or a context-free integer constant that adopts
/// the context of the other operand.
class GFElem {
 public:
  GFElem() = default;
  GFElem(long c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  GFElem(const GFContext* ctx, std::vector<std::uint32_t> coeffs);

  static GFElem from_u64(const GFContext* ctx, std::uint64_t c);
  static GFElem from_long(const GFContext* ctx, long c);
  /// The class of x in F_p[x]/(m).
  static GFElem generator(const GFContext* ctx);
  static GFElem random(const GFContext* ctx, std::mt19937_64& rng);

  const GFContext* ctx() const { return ctx_; }
  bool universal() const { return ctx_ == nullptr; }
  long universal_value() const { return value_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint32_t coeff(int i) const;
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  GFElem in(const GFContext* ctx) const;
  GFElem operator-() const;
  GFElem& operator+=(const GFElem& o);
  GFElem& operator-=(const GFElem& o);
  GFElem& operator*=(const GFElem& o);
  GFElem& operator/=(const GFElem& o) { return *this *= o.inverse(); }
  friend GFElem operator+(GFElem a, const GFElem& b) { return a += b; }
  friend GFElem operator-(GFElem a, const GFElem& b) { return a -= b; }
  friend GFElem operator*(GFElem a, const GFElem& b) { return a *= b; }
  friend GFElem operator/(GFElem a, const GFElem& b) { return a /= b; }
  friend bool operator==(const GFElem& a, const GFElem& b);
  friend bool operator!=(const GFElem& a, const GFElem& b) { return !(a == b); }

  GFElem inverse() const;
  GFElem pow(const Int& e) const;
  /// Index in [0, q) used for enumeration and ordering.
  Int index() const;
  static GFElem from_index(const GFContext* ctx, Int idx);

  std::string to_string() const;

 private:
  static const GFContext* common(const GFElem& a, const GFElem& b);

  const GFContext* ctx_ = nullptr;
  std::vector<std::uint32_t> c_;
  long value_ = 0;
};

/// Dense univariate polynomial over a field type F (coefficients low first).
template <class F>
struct UPoly {
  std::vector<F> coeffs;

  UPoly() = default;
  explicit UPoly(std::vector<F> c) : coeffs(std::move(c)) { trim(); }
  static UPoly constant(const F& c) { return UPoly(std::vector<F>{c}); }
  static UPoly x() { return UPoly(std::vector<F>{F(0), F(1)}); }

  void trim() {
    while (!coeffs.empty() && coeffs.back() == F(0)) coeffs.pop_back();
  }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  const F& lead() const { return coeffs.back(); }
  F coeff(int i) const { return i >= 0 && i <= degree() ? coeffs[static_cast<std::size_t>(i)] : F(0); }

  UPoly monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / lead();
    UPoly r = *this;
    for (auto& c : r.coeffs) c *= inv;
    return r;
  }
  UPoly derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * F(static_cast<long>(i)));
    return UPoly(std::move(d));
  }
  F eval(const F& x) const {
    F r(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
  }

  UPoly& operator+=(const UPoly& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (coeffs.size() < o.coeffs.size()) coeffs.resize(o.coeffs.size(), F(0));
    for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<F> r(a.coeffs.size() + b.coeffs.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (a.coeffs[i] == F(0)) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) r[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const F& s, const UPoly& a) {
    UPoly r = a;
    for (auto& c : r.coeffs) c *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
      if (a.coeffs[i] != b.coeffs[i]) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
};

template <class F>
std::pair<UPoly<F>, UPoly<F>> divmod(const UPoly<F>& a, const UPoly<F>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly<F>(), a};
  std::vector<F> r = a.coeffs;
  int db = b.degree();
  std::vector<F> q(static_cast<std::size_t>(a.degree() - db) + 1, F(0));
  F inv = F(1) / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    F c = r[static_cast<std::size_t>(i)];
    if (c == F(0)) continue;
    F f = c * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly<F>(std::move(q)), UPoly<F>(std::move(r))};
}

template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns g = gcd(a, b) (monic) and s, t with s*a + t*b = g.
template <class F>
UPoly<F> xgcd(const UPoly<F>& a, const UPoly<F>& b, UPoly<F>& s, UPoly<F>& t) {
  UPoly<F> r0 = a, r1 = b, s0 = UPoly<F>::constant(F(1)), s1, t0, t1 = UPoly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<F> ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    UPoly<F> nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  F inv = F(1) / r0.lead();
  s = inv * s0;
  t = inv * t0;
  return inv * r0;
}

template <class F>
UPoly<F> powmod(const UPoly<F>& base, const Int& e, const UPoly<F>& mod) {
  UPoly<F> r = UPoly<F>::constant(F(1));
  UPoly<F> b = divmod(base, mod).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return divmod(r, mod).second;
  for (std::size_t i = bits; i-- > 0;) {
    r = divmod(r * r, mod).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(r * b, mod).second;
  }
  return r;
}

using GFPoly = UPoly<GFElem>;

/// Complete factorization over the coefficient field into monic irreducibles
/// with multiplicities. All coefficients must share one context.
std::vector<std::pair<GFPoly, int>> factor_upoly(const GFPoly& f);
/// Distinct roots in the coefficient field, ascending by index.
std::vector<GFElem> roots(const GFPoly& f);
/// Squarefree test (gcd with derivative is constant).
bool is_squarefree(const GFPoly& f);

/// Extension L of `base` with [L : base] = m, together with the image of the
/// generator of `base` inside L (so base elements can be embedded).
struct GFExtension {
  const GFContext* field = nullptr;
  GFElem base_generator_image;
  GFElem embed(const GFElem& x) const;
};
GFExtension extend(const GFContext* base, int m);

}  // namespace detlab
