#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "detlab/errors.hpp"
#include "detlab/integer.hpp"
#include "detlab/mpoly.hpp"

namespace detlab {

enum class OrderKind { Grlex, Grevlex };

struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  int nvars = 0;

  bool greater(const Exponent& a, const Exponent& b) const {
    return kind == OrderKind::Grlex ? grlex_greater(a, b) : grevlex_greater(a, b);
  }
  std::string name() const { return kind == OrderKind::Grlex ? "grlex" : "grevlex"; }
};

OrderKind parse_order(const std::string& s);

struct GroebnerCaps {
  int max_vars = 4;
  int max_degree = 6;
  std::size_t max_basis = 400;
};

/// Minimal generators of a monomial ideal (an antichain under divisibility).
struct MonomialIdeal {
  int nvars = 0;
  std::vector<Exponent> gens;

  static MonomialIdeal from(int nvars, std::vector<Exponent> mons);
  bool contains(const Exponent& e) const;
};

bool divides_monomial(const Exponent& a, const Exponent& b);

/// All exponents of total degree k in v variables, largest first in grevlex.
std::vector<Exponent> monomials_of_degree(int v, int k);

/// Number of degree-k monomials outside the ideal.
Int hilbert_function(const MonomialIdeal& I, int k);
/// sigma_m(k): sum of the m-th exponent over degree-k standard monomials.
std::vector<Int> sigma(const MonomialIdeal& I, int k);

struct HilbertRow {
  int k = 0;
  Int h;
  std::vector<Int> sigma;
  std::vector<double> ratio;  // sigma_m / (k h); empty when k h = 0
};

struct HilbertReport {
  MonomialIdeal lt;
  std::vector<HilbertRow> rows;
};

/// Rows for k = 0..kmax. Throws InvariantViolation if the sigma identity fails.
HilbertReport hilbert_report(const MonomialIdeal& I, int kmax);

/// Hilbert function of a hypersurface of degree mu in P^r:
/// C(r+k, r) - C(r+k-mu, r).
Int tangent_cone_g(int mu, int r, int k);

/// n_1 + ... + n_s where k occurs g(k) times, with g the tangent-cone formula.
Int staircase_A(int mu, int r, long s);
/// Same with an explicit multiplicity sequence g(0), g(1), ...; past the end
/// the last value repeats.
Int staircase_A(const std::vector<Int>& g, long s);

template <class C>
Exponent leading_monomial(const MPoly<C>& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw DomainError("leading monomial of zero");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : f.terms())
    if (!best || ord.greater(e, *best)) best = &e;
  return *best;
}

namespace detail {

inline Exponent lcm_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Exponent sub_exp(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <class C>
C leading_coefficient(const MPoly<C>& f, const MonomialOrder& ord) {
  return f.coefficient(leading_monomial(f, ord));
}

template <class C>
MPoly<C> make_monic(const MPoly<C>& f, const MonomialOrder& ord) {
  C inv = C(1) / leading_coefficient(f, ord);
  return f.scaled(inv);
}

}  // namespace detail

/// Full reduction of f modulo G (G with nonzero elements).
template <class C>
MPoly<C> normal_form(MPoly<C> f, const std::vector<MPoly<C>>& G, const MonomialOrder& ord) {
  MPoly<C> rem(f.nvars());
  std::vector<Exponent> lms;
  std::vector<C> lcs;
  for (const auto& g : G) {
    lms.push_back(leading_monomial(g, ord));
    lcs.push_back(g.coefficient(lms.back()));
  }
  while (!f.is_zero()) {
    Exponent lm = leading_monomial(f, ord);
    C lc = f.coefficient(lm);
    bool reduced = false;
    for (std::size_t i = 0; i < G.size(); ++i) {
      if (!divides_monomial(lms[i], lm)) continue;
      MPoly<C> t = MPoly<C>::monomial(detail::sub_exp(lm, lms[i]), lc / lcs[i]);
      f -= t * G[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.add_term(lm, lc);
      f.add_term(lm, -lc);
    }
  }
  return rem;
}

/// Reduced Groebner basis by Buchberger's algorithm (normal pair selection,
/// coprime criterion), over a field of coefficients C.
template <class C>
std::vector<MPoly<C>> groebner_basis(const std::vector<MPoly<C>>& gens, const MonomialOrder& ord,
                                     const GroebnerCaps& caps = {}) {
  if (ord.nvars > caps.max_vars) throw BudgetExceeded("Groebner basis: too many variables");
  std::vector<MPoly<C>> G;
  for (const auto& g : gens) {
    if (g.nvars() > caps.max_vars) throw BudgetExceeded("Groebner basis: too many variables");
    if (g.degree() > caps.max_degree) throw BudgetExceeded("Groebner basis: generator degree above cap");
    if (!g.is_zero()) G.push_back(detail::make_monic(g.with_nvars(ord.nvars), ord));
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    // Normal strategy: smallest lcm of leading monomials first.
    std::size_t pick = 0;
    Exponent best;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      Exponent l = detail::lcm_exp(leading_monomial(G[pairs[t].first], ord), leading_monomial(G[pairs[t].second], ord));
      if (t == 0 || ord.greater(best, l)) {
        best = l;
        pick = t;
      }
    }
    auto [i, j] = pairs[pick];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(pick));
    Exponent li = leading_monomial(G[i], ord), lj = leading_monomial(G[j], ord);
    Exponent l = detail::lcm_exp(li, lj);
    if (l == [&] {
          Exponent s(li.size());
          for (std::size_t k = 0; k < s.size(); ++k) s[k] = li[k] + lj[k];
          return s;
        }())
      continue;
    MPoly<C> s = MPoly<C>::monomial(detail::sub_exp(l, li), C(1)) * G[i] -
                 MPoly<C>::monomial(detail::sub_exp(l, lj), C(1)) * G[j];
    MPoly<C> r = normal_form(s, G, ord);
    if (r.is_zero()) continue;
    G.push_back(detail::make_monic(r, ord));
    if (G.size() > caps.max_basis) throw BudgetExceeded("Groebner basis: basis size above cap");
    for (std::size_t k = 0; k + 1 < G.size(); ++k) pairs.emplace_back(k, G.size() - 1);
  }
  // Minimalize, then interreduce.
  std::vector<MPoly<C>> M;
  for (std::size_t i = 0; i < G.size(); ++i) {
    Exponent li = leading_monomial(G[i], ord);
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      Exponent lj = leading_monomial(G[j], ord);
      if (divides_monomial(lj, li) && (lj != li || j < i)) redundant = true;
    }
    if (!redundant) M.push_back(G[i]);
  }
  for (std::size_t i = 0; i < M.size(); ++i) {
    std::vector<MPoly<C>> others;
    for (std::size_t j = 0; j < M.size(); ++j)
      if (j != i) others.push_back(M[j]);
    Exponent lm = leading_monomial(M[i], ord);
    MPoly<C> tail = M[i];
    C lc = tail.coefficient(lm);
    tail.add_term(lm, -lc);
    MPoly<C> head = MPoly<C>::monomial(lm, lc);
    M[i] = detail::make_monic(head + normal_form(tail, others, ord), ord);
  }
  std::sort(M.begin(), M.end(), [&](const MPoly<C>& a, const MPoly<C>& b) {
    return ord.greater(leading_monomial(b, ord), leading_monomial(a, ord));
  });
  return M;
}

template <class C>
MonomialIdeal leading_ideal(const std::vector<MPoly<C>>& basis, const MonomialOrder& ord) {
  std::vector<Exponent> lms;
  for (const auto& g : basis) lms.push_back(leading_monomial(g, ord));
  return MonomialIdeal::from(ord.nvars, lms);
}

}  // namespace detlab
