#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "detlab/integer.hpp"

namespace detlab {

/// Element of F_p[T], coefficients stored low degree first.
///
/// A polynomial without a modulus (p == 0) is a "universal" integer constant:
/// it is what generic code gets from `FpPoly(0)` or `FpPoly(1)`, and it adopts
/// the modulus of the other operand in mixed arithmetic.
class FpPoly {
 public:
  FpPoly() = default;
  FpPoly(long c) : value_(c) {}  // NOLINT(google-explicit-constructor)
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(std::uint32_t p, long c);
  static FpPoly monomial(std::uint32_t p, std::uint32_t c, int deg);
  static FpPoly variable(std::uint32_t p) { return monomial(p, 1, 1); }

  std::uint32_t modulus() const { return p_; }
  bool universal() const { return p_ == 0; }
  long universal_value() const { return value_; }

  int degree() const;
  bool is_zero() const { return universal() ? value_ == 0 : c_.empty(); }
  std::uint32_t coeff(int i) const;
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  /// The same element viewed in F_p[T] (required for universal constants).
  FpPoly with_modulus(std::uint32_t p) const;
  FpPoly monic() const;
  FpPoly derivative() const;
  /// Evaluation at a point of F_p.
  std::uint32_t eval(std::uint32_t x) const;

  FpPoly operator-() const;
  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  FpPoly& operator*=(const FpPoly& o);
  friend FpPoly operator+(FpPoly a, const FpPoly& b) { return a += b; }
  friend FpPoly operator-(FpPoly a, const FpPoly& b) { return a -= b; }
  friend FpPoly operator*(FpPoly a, const FpPoly& b) { return a *= b; }
  friend bool operator==(const FpPoly& a, const FpPoly& b);
  friend bool operator!=(const FpPoly& a, const FpPoly& b) { return !(a == b); }

  /// Total order: by degree, then coefficients from the top.
  static int compare(const FpPoly& a, const FpPoly& b);

  std::string to_string(char var = 't') const;

 private:
  void trim();
  static std::uint32_t common_modulus(const FpPoly& a, const FpPoly& b);

  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
  long value_ = 0;
};

/// Euclidean division; divisor must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both are zero).
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// Returns g = gcd(a, b) (monic) with s*a + t*b = g.
FpPoly xgcd(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t);
FpPoly powmod(const FpPoly& base, const Int& exp, const FpPoly& mod);

/// Rabin's irreducibility test.
bool is_irreducible(const FpPoly& f);
/// All monic irreducible polynomials of the given degree over F_p, ascending.
std::vector<FpPoly> monic_irreducibles(std::uint32_t p, int degree);
/// Necklace count (1/n) sum_{d|n} mu(n/d) q^d.
Int count_monic_irreducibles(const Int& q, int n);
/// Factorization into monic irreducibles with multiplicities (f nonzero).
std::vector<std::pair<FpPoly, int>> factor(const FpPoly& f);

}  // namespace detlab
