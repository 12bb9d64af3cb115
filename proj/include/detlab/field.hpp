#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "detlab/gf.hpp"
#include "detlab/ring.hpp"

namespace detlab {

enum class FieldKind { Rationals, FunctionField, Gaussian };

struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t q = 0;  // function fields only
  int dK = 1;
  // Lift constants; all three instances are PIDs, so these are 1.
  Rat c1 = 1, c2 = 1, c3 = 1;

  std::string name() const;
};

/// Parses `Q`, `Fq(T):q=<int>` or `Qi`.
FieldSpec make_field(const std::string& text);

template <class E>
struct PrimeId {
  E gen;        // canonical generator
  Int norm;     // N_K(p)
  int degree;   // degree of the residue field over its prime field
};

template <class E>
struct Residue;

/// Reduction Z -> F_p.
template <>
struct Residue<Int> {
  PrimeId<Int> prime;
  const GFContext* field = nullptr;
  GFElem reduce(const Int& x) const;
};

/// Reduction F_p[T] -> F_p[T]/(P).
template <>
struct Residue<FpPoly> {
  PrimeId<FpPoly> prime;
  const GFContext* field = nullptr;
  GFElem reduce(const FpPoly& x) const;
};

/// Reduction Z[i] -> residue field of a Gaussian prime.
template <>
struct Residue<GaussInt> {
  enum class Type { Ramified, Split, Inert };
  PrimeId<GaussInt> prime;
  const GFContext* field = nullptr;
  Type type = Type::Split;
  std::uint64_t p = 0;
  std::uint64_t iota = 0;  // image of i in F_p for split primes
  GFElem reduce(const GaussInt& x) const;
};

/// Common interface of the three concrete fields. `Elem` is the ring of
/// integers, `K` its fraction field.
class RationalField {
 public:
  using Elem = Int;
  using K = Frac<Int>;

  FieldSpec spec() const { return make_field("Q"); }
  int dK() const { return 1; }
  std::uint64_t characteristic() const { return 0; }
  Elem from_long(long c) const { return Int(c); }
  Int norm(const Elem& x) const { return abs(x); }
  /// Logarithm used in prime sums (natural here).
  double log(const Int& n) const { return log_of(n); }
  std::string name() const { return "Q"; }

  std::vector<PrimeId<Elem>> primes_up_to(const Int& Q) const;
  Residue<Elem> residue(const PrimeId<Elem>& p) const;
  int ord(const PrimeId<Elem>& p, const Elem& x) const;
  std::vector<std::pair<PrimeId<Elem>, int>> factor(const Elem& x) const;
  PrimeId<Elem> prime_of(const Elem& gen) const;

  /// [B]_{O_K}: integers with |x| <= B, ascending.
  std::vector<Elem> box(const Int& B) const;
  bool in_box(const Elem& x, const Int& B) const { return abs(x) <= B; }
  Elem random(std::mt19937_64& rng, long bound) const;
};

class FunctionField {
 public:
  using Elem = FpPoly;
  using K = Frac<FpPoly>;

  explicit FunctionField(std::uint32_t q) : q_(q) {}

  FieldSpec spec() const;
  int dK() const { return 1; }
  std::uint64_t characteristic() const { return q_; }
  std::uint32_t q() const { return q_; }
  Elem from_long(long c) const { return FpPoly::constant(q_, c); }
  Elem t() const { return FpPoly::variable(q_); }
  Int norm(const Elem& x) const { return RingOps<FpPoly>::size(x); }
  /// Logarithm base q.
  double log(const Int& n) const { return log_of(n) / std::log(static_cast<double>(q_)); }
  std::string name() const { return "Fq(T):q=" + std::to_string(q_); }
  /// Largest power of q not exceeding Q (at least 1).
  Int snap(const Int& Q) const;
  /// floor(log_q B) for B >= 1.
  int log_floor(const Int& B) const;

  std::vector<PrimeId<Elem>> primes_up_to(const Int& Q) const;
  Residue<Elem> residue(const PrimeId<Elem>& p) const;
  int ord(const PrimeId<Elem>& p, const Elem& x) const;
  std::vector<std::pair<PrimeId<Elem>, int>> factor(const Elem& x) const;
  PrimeId<Elem> prime_of(const Elem& gen) const;

  /// Polynomials of degree <= log_q B (with 0), ascending by index.
  std::vector<Elem> box(const Int& B) const;
  bool in_box(const Elem& x, const Int& B) const { return norm(x) <= B; }
  Elem random(std::mt19937_64& rng, long max_degree) const;

 private:
  std::uint32_t q_;
};

class GaussianField {
 public:
  using Elem = GaussInt;
  using K = Frac<GaussInt>;

  FieldSpec spec() const { return make_field("Qi"); }
  int dK() const { return 2; }
  std::uint64_t characteristic() const { return 0; }
  Elem from_long(long c) const { return GaussInt(c); }
  Int norm(const Elem& x) const { return x.norm(); }
  double log(const Int& n) const { return log_of(n); }
  std::string name() const { return "Qi"; }

  std::vector<PrimeId<Elem>> primes_up_to(const Int& Q) const;
  Residue<Elem> residue(const PrimeId<Elem>& p) const;
  int ord(const PrimeId<Elem>& p, const Elem& x) const;
  std::vector<std::pair<PrimeId<Elem>, int>> factor(const Elem& x) const;
  PrimeId<Elem> prime_of(const Elem& gen) const;

  /// Gaussian integers of norm <= B, ordered by (re, im).
  std::vector<Elem> box(const Int& B) const;
  bool in_box(const Elem& x, const Int& B) const { return x.norm() <= B; }
  Elem random(std::mt19937_64& rng, long bound) const;
};

/// Split a rational prime p = 1 mod 4 as a^2 + b^2 with a > b > 0.
std::pair<Int, Int> sum_of_two_squares(std::uint64_t p);

/// Valuation of a field element (num and den) at a prime.
template <class Field>
int ord_frac(const Field& F, const PrimeId<typename Field::Elem>& p, const typename Field::K& x) {
  if (x.is_zero()) throw DomainError("valuation of zero");
  return F.ord(p, x.num) - F.ord(p, x.den);
}

/// Reduction of an element of K integral at the prime.
template <class E>
GFElem reduce_frac(const Residue<E>& r, const Frac<E>& x) {
  GFElem d = r.reduce(x.den);
  if (d.is_zero()) throw DomainError("element is not integral at the prime");
  return r.reduce(x.num) / d;
}

/// Calls `v` with the concrete field object named by the FieldSpec.
template <class V>
decltype(auto) dispatch(const FieldSpec& spec, V&& v) {
  switch (spec.kind) {
    case FieldKind::Rationals:
      return v(RationalField{});
    case FieldKind::FunctionField:
      return v(FunctionField{spec.q});
    case FieldKind::Gaussian:
    default:
      return v(GaussianField{});
  }
}

}  // namespace detlab
