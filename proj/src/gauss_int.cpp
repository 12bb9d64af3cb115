#include "detlab/gauss_int.hpp"

#include "detlab/errors.hpp"

namespace detlab {

namespace {

Int round_div(const Int& x, const Int& n) {
  // floor((2x + n) / 2n) for n > 0
  Int num = 2 * x + n;
  Int den = 2 * n;
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

void gauss_divmod(const GaussInt& a, const GaussInt& b, GaussInt& q, GaussInt& r) {
  if (b.is_zero()) throw DomainError("Gaussian division by zero");
  GaussInt t = a * b.conj();
  Int n = b.norm();
  q = GaussInt(round_div(t.re, n), round_div(t.im, n));
  r = a - q * b;
}

std::string GaussInt::to_string() const {
  if (im == 0) return re.get_str();
  std::string imag;
  if (im == 1)
    imag = "i";
  else if (im == -1)
    imag = "-i";
  else
    imag = im.get_str() + "*i";
  if (re == 0) return imag;
  if (im > 0) return re.get_str() + "+" + imag;
  return re.get_str() + imag;
}

}  // namespace detlab
