#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "detlab/errors.hpp"

namespace detlab {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

/// Graded reverse lexicographic comparison: true if a > b.
inline bool grevlex_greater(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// Graded lexicographic comparison: true if a > b.
inline bool grlex_greater(const Exponent& a, const Exponent& b) {
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

/// Sparse multivariate polynomial with coefficients in C. Zero coefficients
/// are never stored.
template <class C>
class MPoly {
 public:
  using Coeff = C;
  using Terms = std::map<Exponent, C>;

  MPoly() = default;
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const C& c) {
    MPoly p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
  }
  static MPoly variable(int nvars, int i, const C& one = C(1)) {
    MPoly p(nvars);
    Exponent e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, one);
    return p;
  }
  static MPoly monomial(const Exponent& e, const C& c) {
    MPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }
  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
  }
  bool is_homogeneous() const {
    int d = -2;
    for (const auto& [e, c] : terms_) {
      int t = total_degree(e);
      if (d == -2) d = t;
      if (t != d) return false;
    }
    return true;
  }
  bool uses_var(int var) const { return degree_in(var) > 0; }

  C coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add_term(const Exponent& e, const C& c) {
    if (static_cast<int>(e.size()) != nvars_) throw DomainError("exponent length mismatch");
    if (c == C(0)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second == C(0)) terms_.erase(it);
  }

  /// Same polynomial in more variables (new ones appended, unused).
  MPoly with_nvars(int n) const {
    if (n < nvars_) {
      for (const auto& [e, c] : terms_)
        for (int i = n; i < nvars_; ++i)
          if (e[static_cast<std::size_t>(i)]) throw DomainError("cannot drop a used variable");
    }
    MPoly r(n);
    for (const auto& [e, c] : terms_) {
      Exponent f(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < std::min(n, nvars_); ++i) f[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)];
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MPoly& operator+=(const MPoly& o) {
    unify(o);
    for (const auto& [e, c] : o.terms_) add_term(pad(e), c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    unify(o);
    for (const auto& [e, c] : o.terms_) add_term(pad(e), -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    int n = std::max(a.nvars_, b.nvars_);
    MPoly r(n);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < a.nvars_; ++i) e[static_cast<std::size_t>(i)] += ea[static_cast<std::size_t>(i)];
        for (int i = 0; i < b.nvars_; ++i) e[static_cast<std::size_t>(i)] += eb[static_cast<std::size_t>(i)];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  MPoly scaled(const C& s) const {
    MPoly r(nvars_);
    if (s == C(0)) return r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }
  MPoly pow(unsigned k) const {
    MPoly r = constant(nvars_, C(1));
    MPoly b = *this;
    while (k) {
      if (k & 1) r *= b;
      k >>= 1;
      if (k) b *= b;
    }
    return r;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
    int n = std::max(a.nvars_, b.nvars_);
    return a.with_nvars(n).terms_ == b.with_nvars(n).terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// Evaluation at a point whose coordinates live in T (C must convert to T).
  template <class T>
  T eval(const std::vector<T>& x, const std::function<T(const C&)>& conv) const {
    T acc = T(0);
    for (const auto& [e, c] : terms_) {
      T term = conv(c);
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) term *= x[static_cast<std::size_t>(i)];
      acc += term;
    }
    return acc;
  }
  C eval(const std::vector<C>& x) const {
    return eval<C>(x, [](const C& c) { return c; });
  }

  MPoly derivative(int var) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      int k = e[static_cast<std::size_t>(var)];
      if (!k) continue;
      Exponent f = e;
      --f[static_cast<std::size_t>(var)];
      r.add_term(f, c * C(static_cast<long>(k)));
    }
    return r;
  }

  /// Substitutes polynomials for the variables (all in a common ring).
  MPoly compose(const std::vector<MPoly>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw DomainError("substitution arity mismatch");
    int n = 0;
    for (const auto& s : subs) n = std::max(n, s.nvars());
    MPoly r(n);
    for (const auto& [e, c] : terms_) {
      MPoly term = constant(n, c);
      for (int i = 0; i < nvars_; ++i)
        if (e[static_cast<std::size_t>(i)]) term *= subs[static_cast<std::size_t>(i)].with_nvars(n).pow(static_cast<unsigned>(e[static_cast<std::size_t>(i)]));
      r += term;
    }
    return r;
  }

  /// Degree-k homogeneous part.
  MPoly homogeneous_part(int k) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) == k) r.terms_.emplace(e, c);
    return r;
  }
  MPoly top_form() const { return homogeneous_part(degree()); }

  /// Sets variable `var` to `value`, keeping the variable count.
  MPoly specialize(int var, const C& value) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      C cc = c;
      for (int k = 0; k < e[static_cast<std::size_t>(var)]; ++k) cc *= value;
      f[static_cast<std::size_t>(var)] = 0;
      r.add_term(f, cc);
    }
    return r;
  }

  /// Homogenizes with a new last variable.
  MPoly homogenize() const {
    int d = degree();
    MPoly r(nvars_ + 1);
    for (const auto& [e, c] : terms_) {
      Exponent f = e;
      f.push_back(d - total_degree(e));
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  template <class D, class Fn>
  MPoly<D> map_coeffs(Fn fn) const {
    MPoly<D> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  /// Terms sorted in descending grevlex order.
  std::vector<std::pair<Exponent, C>> sorted_terms() const {
    std::vector<std::pair<Exponent, C>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return grevlex_greater(a.first, b.first); });
    return v;
  }

 private:
  void unify(const MPoly& o) {
    if (o.nvars_ > nvars_) *this = with_nvars(o.nvars_);
  }
  Exponent pad(const Exponent& e) const {
    if (static_cast<int>(e.size()) == nvars_) return e;
    Exponent f(static_cast<std::size_t>(nvars_), 0);
    std::copy(e.begin(), e.end(), f.begin());
    return f;
  }

  int nvars_ = 0;
  Terms terms_;
};

/// Textual monomial such as `x0^2*x1` (empty for the constant monomial).
inline std::string format_monomial(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

/// Canonical text: grevlex-descending terms, coefficients rendered by `fmt`,
/// which must return either a plain (optionally signed) literal or a
/// parenthesized expression.
template <class C>
std::string format_poly(const MPoly<C>& f, const std::function<std::string(const C&)>& fmt) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.sorted_terms()) {
    std::string cs = fmt(c);
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    std::string mono = format_monomial(e);
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + "*" + mono;
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += neg ? " - " + term : " + " + term;
  }
  return out;
}

}  // namespace detlab
