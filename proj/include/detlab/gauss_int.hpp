#pragma once

#include <string>

#include "detlab/integer.hpp"

namespace detlab {

/// Gaussian integer re + im*i.
struct GaussInt {
  Int re, im;

  GaussInt() = default;
  GaussInt(long a) : re(a), im(0) {}  // NOLINT(google-explicit-constructor)
  GaussInt(Int a, Int b = 0) : re(std::move(a)), im(std::move(b)) {}  // NOLINT(google-explicit-constructor)

  static GaussInt i() { return {Int(0), Int(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  Int norm() const { return re * re + im * im; }
  GaussInt conj() const { return {re, -im}; }

  GaussInt operator-() const { return {-re, -im}; }
  GaussInt& operator+=(const GaussInt& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussInt& operator-=(const GaussInt& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussInt& operator*=(const GaussInt& o) {
    Int r = re * o.re - im * o.im;
    Int s = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }
  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

  std::string to_string() const;
};

/// Division with remainder, quotient rounded to the nearest Gaussian integer,
/// so Nm(r) <= Nm(b)/2.
void gauss_divmod(const GaussInt& a, const GaussInt& b, GaussInt& q, GaussInt& r);

}  // namespace detlab
