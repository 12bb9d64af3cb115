#include "detlab/fp_poly.hpp"

#include <algorithm>

#include "detlab/errors.hpp"
#include "detlab/gf.hpp"

namespace detlab {

namespace {

std::uint32_t reduce_long(long c, std::uint32_t p) {
  long r = c % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(invmod(a, p));
}

}  // namespace

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  if (p_ == 0) throw DomainError("FpPoly modulus must be prime");
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, long c) { return FpPoly(p, {reduce_long(c, p)}); }

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, int deg) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(deg) + 1, 0);
  v[static_cast<std::size_t>(deg)] = c % p;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int FpPoly::degree() const {
  if (universal()) return value_ == 0 ? -1 : 0;
  return static_cast<int>(c_.size()) - 1;
}

std::uint32_t FpPoly::coeff(int i) const {
  if (universal()) throw DomainError("coefficient of a modulus-free constant");
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

FpPoly FpPoly::with_modulus(std::uint32_t p) const {
  if (!universal()) {
    if (p != p_) throw DomainError("mixing polynomials over different primes");
    return *this;
  }
  return constant(p, value_);
}

std::uint32_t FpPoly::common_modulus(const FpPoly& a, const FpPoly& b) {
  if (a.p_ && b.p_ && a.p_ != b.p_) throw DomainError("mixing polynomials over different primes");
  return a.p_ ? a.p_ : b.p_;
}

FpPoly FpPoly::monic() const {
  if (universal() || c_.empty()) return *this;
  std::uint32_t inv = inv_mod(c_.back(), p_);
  FpPoly r = *this;
  for (auto& c : r.c_) c = static_cast<std::uint32_t>(std::uint64_t(c) * inv % p_);
  return r;
}

FpPoly FpPoly::derivative() const {
  if (universal()) return FpPoly(0);
  std::vector<std::uint32_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(static_cast<std::uint32_t>(std::uint64_t(c_[i]) * (i % p_) % p_));
  return FpPoly(p_, std::move(d));
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
  if (universal()) throw DomainError("evaluating a modulus-free constant");
  std::uint64_t r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = (r * x + c_[i]) % p_;
  return static_cast<std::uint32_t>(r);
}

FpPoly FpPoly::operator-() const {
  if (universal()) return FpPoly(-value_);
  FpPoly r = *this;
  for (auto& c : r.c_) c = c ? p_ - c : 0;
  return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    value_ += o.value_;
    return *this;
  }
  *this = with_modulus(p);
  FpPoly b = o.with_modulus(p);
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), 0);
  for (std::size_t i = 0; i < b.c_.size(); ++i) {
    std::uint32_t s = c_[i] + b.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  trim();
  return *this;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) { return *this += -o; }

FpPoly& FpPoly::operator*=(const FpPoly& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    value_ *= o.value_;
    return *this;
  }
  FpPoly a = with_modulus(p), b = o.with_modulus(p);
  if (a.c_.empty() || b.c_.empty()) {
    *this = FpPoly(p, {});
    return *this;
  }
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p;
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  *this = FpPoly(p, std::move(out));
  return *this;
}

bool operator==(const FpPoly& a, const FpPoly& b) {
  if (a.universal() && b.universal()) return a.value_ == b.value_;
  std::uint32_t p = a.universal() ? b.p_ : a.p_;
  if (!a.universal() && !b.universal() && a.p_ != b.p_) return false;
  return a.with_modulus(p).c_ == b.with_modulus(p).c_;
}

int FpPoly::compare(const FpPoly& a0, const FpPoly& b0) {
  std::uint32_t p = common_modulus(a0, b0);
  if (p == 0) return a0.value_ < b0.value_ ? -1 : (a0.value_ > b0.value_ ? 1 : 0);
  FpPoly a = a0.with_modulus(p), b = b0.with_modulus(p);
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i) ? -1 : 1;
  }
  return 0;
}

std::string FpPoly::to_string(char var) const {
  if (universal()) return std::to_string(value_);
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = c_[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a0, const FpPoly& b0) {
  if (b0.is_zero()) throw DomainError("division by zero polynomial");
  std::uint32_t p = a0.modulus() ? a0.modulus() : b0.modulus();
  if (p == 0) {
    // Only unit divisors make sense without a modulus.
    long bv = b0.universal_value();
    if (bv != 1 && bv != -1) throw DomainError("division of modulus-free constants");
    return {FpPoly(a0.universal_value() * bv), FpPoly(0)};
  }
  FpPoly a = a0.with_modulus(p), b = b0.with_modulus(p);
  std::vector<std::uint32_t> r = a.coeffs();
  const auto& bc = b.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {FpPoly(p, {}), a};
  std::vector<std::uint32_t> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  std::uint64_t inv = inv_mod(bc.back(), p);
  for (int i = a.degree(); i >= db; --i) {
    std::uint32_t c = r[static_cast<std::size_t>(i)];
    if (!c) continue;
    std::uint64_t f = c * inv % p;
    q[static_cast<std::size_t>(i - db)] = static_cast<std::uint32_t>(f);
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(i - db + j)];
      x = static_cast<std::uint32_t>((x + (p - f) * bc[static_cast<std::size_t>(j)]) % p);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly gcd(const FpPoly& a0, const FpPoly& b0) {
  FpPoly a = a0, b = b0;
  while (!b.is_zero()) {
    FpPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
  FpPoly r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FpPoly ns = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(ns);
    FpPoly nt = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  if (r0.universal()) {
    s = s0 * FpPoly(r0.universal_value());
    t = t0 * FpPoly(r0.universal_value());
    return FpPoly(1);
  }
  FpPoly lc = FpPoly::constant(r0.modulus(), static_cast<long>(invmod(r0.lead(), r0.modulus())));
  s = s0 * lc;
  t = t0 * lc;
  return r0 * lc;
}

FpPoly powmod(const FpPoly& base, const Int& exp, const FpPoly& mod) {
  std::uint32_t p = mod.modulus();
  FpPoly result = FpPoly::constant(p, 1);
  FpPoly b = divmod(base.with_modulus(p), mod).second;
  std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, mod).second;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = divmod(result * b, mod).second;
  }
  return divmod(result, mod).second;
}

bool is_irreducible(const FpPoly& f0) {
  if (f0.universal() || f0.degree() < 1) return false;
  FpPoly f = f0.monic();
  std::uint32_t p = f.modulus();
  int n = f.degree();
  if (n == 1) return true;
  FpPoly x = FpPoly::variable(p);
  // xp[i] = x^(p^i) mod f
  std::vector<FpPoly> xp{x};
  for (int i = 1; i <= n; ++i) xp.push_back(powmod(xp.back(), Int(p), f));
  if (xp[static_cast<std::size_t>(n)] != divmod(x, f).second) return false;
  for (const auto& [r, e] : factor_int(Int(n))) {
    int k = n / static_cast<int>(r.get_si());
    if (gcd(xp[static_cast<std::size_t>(k)] - x, f).degree() != 0) return false;
  }
  return true;
}

std::vector<FpPoly> monic_irreducibles(std::uint32_t p, int degree) {
  std::vector<FpPoly> out;
  if (degree < 1) return out;
  // Iterate over all monic polynomials of the degree in ascending coefficient order.
  std::vector<std::uint32_t> lower(static_cast<std::size_t>(degree), 0);
  while (true) {
    std::vector<std::uint32_t> c = lower;
    c.push_back(1);
    FpPoly f(p, std::move(c));
    if (is_irreducible(f)) out.push_back(std::move(f));
    // Odometer with the top coefficient most significant, so output is ascending.
    std::size_t i = 0;
    for (; i < lower.size(); ++i) {
      if (++lower[i] < p) break;
      lower[i] = 0;
    }
    if (i == lower.size()) return out;
  }
}

Int count_monic_irreducibles(const Int& q, int n) {
  if (n < 1) return 0;
  Int total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d) continue;
    int m = n / d;
    // Moebius of m
    int mu = 1;
    int mm = m;
    for (int r = 2; r * r <= mm; ++r) {
      if (mm % r) continue;
      mm /= r;
      if (mm % r == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu != 0 && mm > 1) mu = -mu;
    if (mu) total += mu * pow_int(q, static_cast<unsigned long>(d));
  }
  return total / n;
}

std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f) {
  if (f.is_zero() || f.universal()) throw DomainError("factor needs a nonzero polynomial with modulus");
  std::uint32_t p = f.modulus();
  const GFContext* base = GFContext::prime_field(p);
  UPoly<GFElem> g;
  for (int i = 0; i <= f.degree(); ++i) g.coeffs.push_back(GFElem::from_u64(base, f.coeff(i)));
  g.trim();
  std::vector<std::pair<FpPoly, int>> out;
  for (const auto& [h, e] : factor_upoly(g)) {
    std::vector<std::uint32_t> c;
    for (const auto& x : h.coeffs) c.push_back(static_cast<std::uint32_t>(x.coeff(0)));
    out.emplace_back(FpPoly(p, std::move(c)), e);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return FpPoly::compare(a.first, b.first) < 0; });
  return out;
}

}  // namespace detlab
