#include "detlab/field.hpp"

#include <algorithm>
#include <cctype>

namespace detlab {

std::string FieldSpec::name() const {
  switch (kind) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::FunctionField:
      return "Fq(T):q=" + std::to_string(q);
    case FieldKind::Gaussian:
    default:
      return "Qi";
  }
}

FieldSpec make_field(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  FieldSpec s;
  if (text == "Q") return s;
  if (text == "Qi") {
    s.kind = FieldKind::Gaussian;
    s.dK = 2;
    return s;
  }
  const std::string prefix = "Fq(T):q=";
  if (text.rfind(prefix, 0) == 0) {
    std::string num = text.substr(prefix.size());
    if (num.empty() || num.size() > 9 || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad field modulus '" + num + "'", prefix.size());
    unsigned long q = std::stoul(num);
    if (!is_prime_u64(q)) throw ParseError("q must be prime, got " + num, prefix.size());
    s.kind = FieldKind::FunctionField;
    s.q = static_cast<std::uint32_t>(q);
    return s;
  }
  throw ParseError("unknown field spec '" + raw + "' (expected Q, Fq(T):q=<p> or Qi)", 0);
}

// ---------------------------------------------------------------- residues

GFElem Residue<Int>::reduce(const Int& x) const {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), prime.gen.get_mpz_t());
  return GFElem::from_u64(field, r.get_ui());
}

GFElem Residue<FpPoly>::reduce(const FpPoly& x) const {
  if (x.universal()) return GFElem::from_long(field, x.universal_value());
  if (prime.degree == 1) {
    // P = T - a: evaluate at a.
    std::uint32_t p = prime.gen.modulus();
    std::uint32_t a = (p - prime.gen.coeff(0)) % p;
    return GFElem::from_u64(field, x.eval(a));
  }
  FpPoly r = divmod(x, prime.gen).second;
  std::vector<std::uint32_t> c(static_cast<std::size_t>(prime.degree), 0);
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
  return GFElem(field, std::move(c));
}

GFElem Residue<GaussInt>::reduce(const GaussInt& x) const {
  auto mod = [&](const Int& v) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return static_cast<std::uint64_t>(r.get_ui());
  };
  switch (type) {
    case Type::Ramified:
      return GFElem::from_u64(field, (mod(x.re) + mod(x.im)) % 2);
    case Type::Split:
      return GFElem::from_u64(field, (mod(x.re) + mulmod(mod(x.im), iota, p)) % p);
    case Type::Inert:
    default:
      return GFElem(field, {static_cast<std::uint32_t>(mod(x.re)), static_cast<std::uint32_t>(mod(x.im))});
  }
}

namespace {

template <class E>
int ord_generic(const E& gen, const E& x) {
  if (RingOps<E>::is_zero(x)) throw DomainError("valuation of zero");
  E y = x;
  int v = 0;
  while (true) {
    E q, r;
    RingOps<E>::divmod(y, gen, q, r);
    if (!RingOps<E>::is_zero(r)) return v;
    y = std::move(q);
    ++v;
  }
}

}  // namespace

// ---------------------------------------------------------------- rationals

std::vector<PrimeId<Int>> RationalField::primes_up_to(const Int& Q) const {
  std::vector<PrimeId<Int>> out;
  if (Q < 2) return out;
  for (auto p : sieve_primes(Q.get_ui())) out.push_back({Int(p), Int(p), 1});
  return out;
}

Residue<Int> RationalField::residue(const PrimeId<Int>& p) const {
  return {p, GFContext::prime_field(static_cast<std::uint32_t>(p.gen.get_ui()))};
}

int RationalField::ord(const PrimeId<Int>& p, const Int& x) const { return valuation(x, p.gen); }

std::vector<std::pair<PrimeId<Int>, int>> RationalField::factor(const Int& x) const {
  std::vector<std::pair<PrimeId<Int>, int>> out;
  for (const auto& [p, e] : factor_int(x)) out.push_back({{p, p, 1}, e});
  return out;
}

PrimeId<Int> RationalField::prime_of(const Int& gen) const {
  if (!is_prime(abs(gen))) throw DomainError(gen.get_str() + " is not a prime");
  return {abs(gen), abs(gen), 1};
}

std::vector<Int> RationalField::box(const Int& B) const {
  std::vector<Int> out;
  for (Int x = -B; x <= B; ++x) out.push_back(x);
  return out;
}

Int RationalField::random(std::mt19937_64& rng, long bound) const {
  std::uniform_int_distribution<long> d(-bound, bound);
  return Int(d(rng));
}

// ---------------------------------------------------------------- F_q(T)

FieldSpec FunctionField::spec() const { return make_field("Fq(T):q=" + std::to_string(q_)); }

Int FunctionField::snap(const Int& Q) const {
  Int r = 1;
  while (r * q_ <= Q) r *= q_;
  return r;
}

int FunctionField::log_floor(const Int& B) const {
  if (B < 1) throw DomainError("log_floor of bound < 1");
  int h = 0;
  Int r = q_;
  while (r <= B) {
    r *= q_;
    ++h;
  }
  return h;
}

std::vector<PrimeId<FpPoly>> FunctionField::primes_up_to(const Int& Q) const {
  std::vector<PrimeId<FpPoly>> out;
  if (Q < q_) return out;
  int h = log_floor(Q);
  for (int d = 1; d <= h; ++d) {
    Int n = pow_int(Int(q_), static_cast<unsigned long>(d));
    for (auto& f : monic_irreducibles(q_, d)) out.push_back({std::move(f), n, d});
  }
  return out;
}

Residue<FpPoly> FunctionField::residue(const PrimeId<FpPoly>& p) const {
  if (p.degree == 1) return {p, GFContext::prime_field(q_)};
  return {p, GFContext::get(q_, p.gen.monic().coeffs())};
}

int FunctionField::ord(const PrimeId<FpPoly>& p, const FpPoly& x) const { return ord_generic(p.gen, x); }

std::vector<std::pair<PrimeId<FpPoly>, int>> FunctionField::factor(const FpPoly& x) const {
  std::vector<std::pair<PrimeId<FpPoly>, int>> out;
  FpPoly y = x.with_modulus(q_);
  if (y.degree() < 1) return out;
  for (auto& [g, e] : detlab::factor(y)) {
    int d = g.degree();
    out.push_back({{g, pow_int(Int(q_), static_cast<unsigned long>(d)), d}, e});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first.degree < b.first.degree; });
  return out;
}

PrimeId<FpPoly> FunctionField::prime_of(const FpPoly& gen) const {
  FpPoly g = gen.with_modulus(q_).monic();
  if (!is_irreducible(g)) throw DomainError(g.to_string() + " is not irreducible");
  return {g, pow_int(Int(q_), static_cast<unsigned long>(g.degree())), g.degree()};
}

std::vector<FpPoly> FunctionField::box(const Int& B) const {
  std::vector<FpPoly> out;
  if (B < 1) {
    out.push_back(from_long(0));
    return out;
  }
  int h = log_floor(B);
  std::uint64_t count = 1;
  for (int i = 0; i <= h; ++i) {
    count *= q_;
    if (count > (1ULL << 32)) throw BudgetExceeded("function-field box too large");
  }
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> c;
    std::uint64_t v = idx;
    for (int i = 0; i <= h; ++i) {
      c.push_back(static_cast<std::uint32_t>(v % q_));
      v /= q_;
    }
    out.emplace_back(q_, std::move(c));
  }
  return out;
}

FpPoly FunctionField::random(std::mt19937_64& rng, long max_degree) const {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& x : c) x = static_cast<std::uint32_t>(rng() % q_);
  return FpPoly(q_, std::move(c));
}

// ---------------------------------------------------------------- Q(i)

std::pair<Int, Int> sum_of_two_squares(std::uint64_t p) {
  if (p % 4 != 1) throw DomainError("prime is not 1 mod 4");
  std::uint64_t x = 0;
  for (std::uint64_t c = 2;; ++c) {
    std::uint64_t t = powmod(c, (p - 1) / 4, p);
    if (mulmod(t, t, p) == p - 1) {
      x = t;
      break;
    }
  }
  std::uint64_t r0 = p, r1 = x;
  while (r1 * r1 > p) {
    std::uint64_t r = r0 % r1;
    r0 = r1;
    r1 = r;
  }
  std::uint64_t a = r1;
  Int b2 = Int(static_cast<unsigned long>(p)) - Int(static_cast<unsigned long>(a)) * a;
  Int b = isqrt(b2);
  if (b * b != b2) throw InvariantViolation("Cornacchia failed");
  Int A(static_cast<unsigned long>(a));
  if (A < b) std::swap(A, b);
  return {A, b};
}

std::vector<PrimeId<GaussInt>> GaussianField::primes_up_to(const Int& Q) const {
  std::vector<PrimeId<GaussInt>> out;
  if (Q < 2) return out;
  for (auto p : sieve_primes(Q.get_ui())) {
    Int P(p);
    if (p == 2) {
      out.push_back({GaussInt(Int(1), Int(1)), Int(2), 1});
    } else if (p % 4 == 1) {
      auto [a, b] = sum_of_two_squares(p);
      out.push_back({GaussInt(a, b), P, 1});
      out.push_back({GaussInt(b, a), P, 1});
    } else if (P * P <= Q) {
      out.push_back({GaussInt(P), P * P, 2});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    return RingOps<GaussInt>::compare(x.gen, y.gen) < 0;
  });
  return out;
}

Residue<GaussInt> GaussianField::residue(const PrimeId<GaussInt>& pr) const {
  Residue<GaussInt> r;
  r.prime = pr;
  if (pr.norm == 2) {
    r.type = Residue<GaussInt>::Type::Ramified;
    r.p = 2;
    r.field = GFContext::prime_field(2);
  } else if (pr.degree == 2) {
    r.type = Residue<GaussInt>::Type::Inert;
    r.p = pr.gen.re.get_ui();
    r.field = GFContext::get(static_cast<std::uint32_t>(r.p), {1, 0, 1});
  } else {
    r.type = Residue<GaussInt>::Type::Split;
    r.p = pr.norm.get_ui();
    r.field = GFContext::prime_field(static_cast<std::uint32_t>(r.p));
    // a + b i = 0  =>  i = -a / b
    std::uint64_t a = Int(pr.gen.re % pr.norm).get_ui();
    std::uint64_t b = Int(pr.gen.im % pr.norm).get_ui();
    r.iota = mulmod(r.p - a % r.p, invmod(b, r.p), r.p);
  }
  return r;
}

int GaussianField::ord(const PrimeId<GaussInt>& p, const GaussInt& x) const { return ord_generic(p.gen, x); }

std::vector<std::pair<PrimeId<GaussInt>, int>> GaussianField::factor(const GaussInt& x) const {
  std::vector<std::pair<PrimeId<GaussInt>, int>> out;
  if (x.is_zero()) throw DomainError("factor of zero");
  Int n = x.norm();
  if (n == 1) return out;
  for (const auto& [p, e] : factor_int(n)) {
    if (p == 2) {
      out.push_back({{GaussInt(Int(1), Int(1)), Int(2), 1}, e});
    } else if (p % 4 == 3) {
      out.push_back({{GaussInt(p), p * p, 2}, e / 2});
    } else {
      auto [a, b] = sum_of_two_squares(p.get_ui());
      for (const GaussInt& g : {GaussInt(a, b), GaussInt(b, a)}) {
        PrimeId<GaussInt> pr{g, p, 1};
        int v = ord(pr, x);
        if (v) out.push_back({pr, v});
      }
    }
  }
  return out;
}

PrimeId<GaussInt> GaussianField::prime_of(const GaussInt& gen) const {
  GaussInt g = canonical(gen);
  Int n = g.norm();
  if (is_prime(n)) return {g, n, 1};
  if (g.im == 0 && is_prime(g.re) && g.re % 4 == 3) return {g, n, 2};
  throw DomainError(gen.to_string() + " is not a Gaussian prime");
}

std::vector<GaussInt> GaussianField::box(const Int& B) const {
  std::vector<GaussInt> out;
  Int r = isqrt(B);
  for (Int a = -r; a <= r; ++a) {
    Int rem = B - a * a;
    Int s = isqrt(rem);
    for (Int b = -s; b <= s; ++b) out.emplace_back(a, b);
  }
  return out;
}

GaussInt GaussianField::random(std::mt19937_64& rng, long bound) const {
  std::uniform_int_distribution<long> d(-bound, bound);
  long a = d(rng);
  long b = d(rng);
  return GaussInt(Int(a), Int(b));
}

}  // namespace detlab
