#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "detlab/field.hpp"
#include "detlab/mpoly.hpp"

namespace detlab {

inline Int elem_from_int(const RationalField&, const Int& n) { return n; }
inline FpPoly elem_from_int(const FunctionField& F, const Int& n) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), F.q());
  return F.from_long(static_cast<long>(r.get_ui()));
}
inline GaussInt elem_from_int(const GaussianField&, const Int& n) { return GaussInt(n); }

namespace detail {

/// Recursive-descent parser for polynomial expressions over a field K.
/// Atoms: integers, `t` (function fields), `i` (Gaussian field), x0..x9.
template <class Field>
class ExprParser {
 public:
  using K = typename Field::K;
  using P = MPoly<K>;
  static constexpr int kMaxVars = 10;

  ExprParser(const Field& F, const std::string& s, bool allow_vars) : F_(F), s_(s), allow_vars_(allow_vars) {}

  P parse() {
    P r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return r;
  }
  int max_var() const { return max_var_; }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  P constant(const K& c) const { return P::constant(kMaxVars, c); }

  P expr() {
    P r = term();
    while (true) {
      if (accept('+'))
        r += term();
      else if (accept('-'))
        r -= term();
      else
        return r;
    }
  }

  P term() {
    P r = unary();
    while (true) {
      if (accept('*')) {
        r *= unary();
      } else if (accept('/')) {
        std::size_t at = pos_;
        P d = unary();
        if (d.degree() > 0) throw ParseError("division by a non-constant", at);
        if (d.is_zero()) throw ParseError("division by zero", at);
        K inv = K(1) / d.terms().begin()->second;
        r = r.scaled(inv);
      } else {
        return r;
      }
    }
  }

  P unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  P power() {
    P base = primary();
    if (accept('^')) {
      skip();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected a nonnegative integer exponent", at);
      unsigned long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (e > 1000) throw ParseError("exponent too large", at);
        ++pos_;
      }
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  P primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      P r = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Int n(s_.substr(start, pos_ - start));
      P r = constant(K(elem_from_int(F_, n)));
      // Implicit product such as 2i, 3t or 2x0.
      if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) r *= power();
      return r;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  P identifier() {
    std::size_t start = pos_;
    char c = s_[pos_++];
    if (c == 'x' || c == 'X') {
      if (!allow_vars_) throw ParseError("variables are not allowed here", start);
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected variable index after 'x'", pos_);
      int idx = s_[pos_++] - '0';
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("unknown variable (only x0..x9)", start);
      max_var_ = std::max(max_var_, idx);
      return P::variable(kMaxVars, idx, K(1));
    }
    bool alnum_follows = pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]));
    if (!alnum_follows) {
      if constexpr (std::is_same_v<Field, FunctionField>) {
        if (c == 't' || c == 'T') return constant(K(F_.t()));
      }
      if constexpr (std::is_same_v<Field, GaussianField>) {
        if (c == 'i' || c == 'I') return constant(K(GaussInt::i()));
      }
    }
    throw ParseError("unknown identifier '" + std::string(1, c) + "' for field " + F_.name(), start);
  }

  const Field& F_;
  const std::string& s_;
  bool allow_vars_;
  std::size_t pos_ = 0;
  int max_var_ = -1;
};

}  // namespace detail

/// Parses a polynomial with coefficients in K. The variable count is one more
/// than the largest index used, but at least `min_vars`.
template <class Field>
MPoly<typename Field::K> parse_poly_k(const Field& F, const std::string& text, int min_vars = 0) {
  detail::ExprParser<Field> p(F, text, true);
  auto r = p.parse();
  int n = std::max(p.max_var() + 1, min_vars);
  if (n > detail::ExprParser<Field>::kMaxVars) throw ParseError("at most 10 variables are supported", 0);
  return r.with_nvars(n);
}

/// Least common multiple (canonical) of the coefficient denominators.
template <class E>
E common_denominator(const MPoly<Frac<E>>& f) {
  E L(1);
  for (const auto& [e, c] : f.terms()) {
    E g = RingOps<E>::gcd(L, c.den);
    L = exact_div<E>(L * c.den, g);
  }
  return canonical(L);
}

/// Parses a polynomial and clears denominators so that coefficients lie in
/// O_K. Integral inputs are kept as written (no content division).
template <class Field>
MPoly<typename Field::Elem> parse_poly(const Field& F, const std::string& text, int min_vars = 0) {
  using E = typename Field::Elem;
  auto fk = parse_poly_k(F, text, min_vars);
  if (fk.is_zero()) return MPoly<E>(fk.nvars());
  E L = common_denominator(fk);
  MPoly<E> r(fk.nvars());
  for (const auto& [e, c] : fk.terms()) {
    Frac<E> v = c * Frac<E>(L);
    r.add_term(e, v.as_integral());
  }
  return r;
}

/// Affine inputs are written in x1..xn. When x0 does not occur, the
/// variables are shifted down so that coordinate i is x_{i+1}.
template <class C>
MPoly<C> affine_variables(const MPoly<C>& f) {
  if (f.nvars() <= 1 || f.uses_var(0)) return f;
  MPoly<C> r(f.nvars() - 1);
  for (const auto& [e, c] : f.terms()) r.add_term(Exponent(e.begin() + 1, e.end()), c);
  return r;
}

template <class Field>
MPoly<typename Field::Elem> parse_affine_poly(const Field& F, const std::string& text, int nvars = 0) {
  return affine_variables(parse_poly(F, text, nvars > 0 ? nvars + 1 : 0));
}

/// Parses a single field element such as `3/2`, `(t^2+1)/(t+1)` or `(3+2i)/(1-i)`.
template <class Field>
typename Field::K parse_elem(const Field& F, const std::string& text) {
  detail::ExprParser<Field> p(F, text, false);
  auto r = p.parse();
  if (r.is_zero()) return typename Field::K(0);
  return r.terms().begin()->second;
}

/// Splits on top-level separators (outside parentheses).
inline std::vector<std::string> split_top_level(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && seps.find(c) != std::string::npos) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

/// Parses a point `a:b:c` or `a,b,c` with coordinates in K.
template <class Field>
std::vector<typename Field::K> parse_point(const Field& F, const std::string& text) {
  std::vector<typename Field::K> pt;
  for (const auto& part : split_top_level(text, ":,")) pt.push_back(parse_elem(F, part));
  return pt;
}

template <class E>
std::string format_coeff(const E& c) {
  std::string s = RingOps<E>::to_string(c);
  if (RingOps<E>::needs_parens(c)) return "(" + s + ")";
  return s;
}

template <class E>
std::string format_coeff(const Frac<E>& c) {
  std::string s = c.to_string();
  if (c.is_integral()) return format_coeff(c.as_integral());
  if (s.find_first_of("+*^()") != std::string::npos || s.find('-', 1) != std::string::npos) return "(" + s + ")";
  return s;
}

inline std::string format_coeff(const Rat& c) { return c.get_str(); }

inline std::string format_coeff(const GFElem& c) {
  std::string s = c.to_string();
  if (s.find_first_of("+*^ ") != std::string::npos) return "(" + s + ")";
  return s;
}

template <class C>
std::string to_text(const MPoly<C>& f) {
  return format_poly<C>(f, [](const C& c) { return format_coeff(c); });
}

/// Integral polynomial as a polynomial over K.
template <class E>
MPoly<Frac<E>> to_k(const MPoly<E>& f) {
  return f.template map_coeffs<Frac<E>>([](const E& c) { return Frac<E>(c); });
}

}  // namespace detlab
