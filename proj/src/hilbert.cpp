#include "detlab/hilbert.hpp"

#include <algorithm>

namespace detlab {

OrderKind parse_order(const std::string& s) {
  if (s == "grlex") return OrderKind::Grlex;
  if (s == "grevlex") return OrderKind::Grevlex;
  throw ParseError("unknown monomial order '" + s + "'", 0);
}

bool divides_monomial(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MonomialIdeal MonomialIdeal::from(int nvars, std::vector<Exponent> mons) {
  MonomialIdeal I;
  I.nvars = nvars;
  std::sort(mons.begin(), mons.end(), [](const Exponent& a, const Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a < b;
  });
  mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
  for (auto& m : mons) {
    if (static_cast<int>(m.size()) != nvars) throw DomainError("monomial has the wrong number of variables");
    bool redundant = false;
    for (const auto& g : I.gens)
      if (divides_monomial(g, m)) redundant = true;
    if (!redundant) I.gens.push_back(m);
  }
  return I;
}

bool MonomialIdeal::contains(const Exponent& e) const {
  for (const auto& g : gens)
    if (divides_monomial(g, e)) return true;
  return false;
}

std::vector<Exponent> monomials_of_degree(int v, int k) {
  std::vector<Exponent> out;
  if (v <= 0) return out;
  Exponent e(static_cast<std::size_t>(v), 0);
  // Recursive fill: first variable takes the largest share first.
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == v - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int a = left; a >= 0; --a) {
      e[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, k);
  std::stable_sort(out.begin(), out.end(), [](const Exponent& a, const Exponent& b) { return grevlex_greater(a, b); });
  return out;
}

Int hilbert_function(const MonomialIdeal& I, int k) {
  Int h = 0;
  for (const auto& e : monomials_of_degree(I.nvars, k))
    if (!I.contains(e)) ++h;
  return h;
}

std::vector<Int> sigma(const MonomialIdeal& I, int k) {
  std::vector<Int> s(static_cast<std::size_t>(I.nvars), Int(0));
  for (const auto& e : monomials_of_degree(I.nvars, k))
    if (!I.contains(e))
      for (int m = 0; m < I.nvars; ++m) s[static_cast<std::size_t>(m)] += e[static_cast<std::size_t>(m)];
  return s;
}

HilbertReport hilbert_report(const MonomialIdeal& I, int kmax) {
  HilbertReport rep;
  rep.lt = I;
  for (int k = 0; k <= kmax; ++k) {
    HilbertRow row;
    row.k = k;
    row.h = hilbert_function(I, k);
    row.sigma = sigma(I, k);
    Int total = 0;
    for (const auto& x : row.sigma) total += x;
    if (total != k * row.h) throw InvariantViolation("sigma identity failed at k=" + std::to_string(k));
    if (total != 0)
      for (const auto& x : row.sigma) row.ratio.push_back(Rat(x, total).get_d());
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace {

Int binom(long n, long r) {
  if (r < 0 || n < r) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return b;
}

}  // namespace

Int tangent_cone_g(int mu, int r, int k) {
  if (mu < 1 || r < 0 || k < 0) throw DomainError("tangent_cone_g: need mu >= 1, r >= 0, k >= 0");
  return binom(r + k, r) - binom(r + k - mu, r);
}

Int staircase_A(int mu, int r, long s) {
  if (mu < 1 || r < 1) throw DomainError("staircase_A: need mu >= 1 and r >= 1");
  Int A = 0;
  long left = s;
  for (int k = 0; left > 0; ++k) {
    Int g = tangent_cone_g(mu, r, k);
    long take = g < left ? g.get_si() : left;
    A += Int(take) * k;
    left -= take;
  }
  return A;
}

Int staircase_A(const std::vector<Int>& g, long s) {
  if (g.empty()) throw DomainError("staircase_A: empty multiplicity sequence");
  if (g.back() <= 0) throw DomainError("staircase_A: the sequence must end with a positive value");
  Int A = 0;
  long left = s;
  for (std::size_t k = 0; left > 0; ++k) {
    const Int& gk = g[std::min(k, g.size() - 1)];
    long take = gk < left ? gk.get_si() : left;
    A += Int(take) * static_cast<long>(k);
    left -= take;
  }
  return A;
}

}  // namespace detlab
