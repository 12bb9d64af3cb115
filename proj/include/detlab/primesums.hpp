#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detlab/field.hpp"

namespace detlab {

/// Norms of all primes with N(p) <= Q, ascending, with multiplicities
/// (the number of primes of that norm).
std::vector<std::pair<Int, Int>> prime_norm_counts(const RationalField& F, const Int& Q);
std::vector<std::pair<Int, Int>> prime_norm_counts(const FunctionField& F, const Int& Q);
std::vector<std::pair<Int, Int>> prime_norm_counts(const GaussianField& F, const Int& Q);
/// Same restricted to lo < N(p) <= hi.
template <class Field>
std::vector<std::pair<Int, Int>> prime_norm_counts(const Field& F, const Int& lo, const Int& hi) {
  std::vector<std::pair<Int, Int>> out;
  for (auto& nc : prime_norm_counts(F, hi))
    if (nc.first > lo) out.push_back(std::move(nc));
  return out;
}

struct PrimeSumReport {
  std::string field;
  Int Q;            // effective cutoff (snapped to a power of q for function fields)
  double sum = 0;
  double reference = 0;
  double deviation = 0;
};

/// Cutoff actually used: Q itself, or the largest power of q <= Q.
template <class Field>
Int effective_cutoff(const Field&, const Int& Q) {
  return Q;
}
inline Int effective_cutoff(const FunctionField& F, const Int& Q) { return F.snap(Q); }

/// sum_{N(p) <= Q} log N(p) / N(p); reference log Q.
template <class Field>
PrimeSumReport mertens_sum(const Field& F, const Int& Q0) {
  Int Q = effective_cutoff(F, Q0);
  PrimeSumReport r{F.name(), Q};
  for (const auto& [n, c] : prime_norm_counts(F, Q)) r.sum += c.get_d() * F.log(n) / n.get_d();
  r.reference = F.log(Q);
  r.deviation = r.sum - r.reference;
  return r;
}

/// sum_{N(p) <= Q} log N(p); reference Q.
template <class Field>
PrimeSumReport chebyshev_sum(const Field& F, const Int& Q0) {
  Int Q = effective_cutoff(F, Q0);
  PrimeSumReport r{F.name(), Q};
  for (const auto& [n, c] : prime_norm_counts(F, Q)) r.sum += c.get_d() * F.log(n);
  r.reference = Q.get_d();
  r.deviation = r.sum - r.reference;
  return r;
}

/// sum_{Q <= N(p) <= 2Q} log N(p); reference Q/2 (the lower bound).
template <class Field>
PrimeSumReport bertrand_window(const Field& F, const Int& Q0) {
  Int Q = effective_cutoff(F, Q0);
  PrimeSumReport r{F.name(), Q};
  for (const auto& [n, c] : prime_norm_counts(F, Int(Q - 1), Int(2 * Q))) r.sum += c.get_d() * F.log(n);
  r.reference = Q.get_d() / 2;
  r.deviation = r.sum - r.reference;
  return r;
}

/// sum_{Q < N(p) <= cutoff} log N(p) / N(p)^{3/2}; reference Q^{-1/2}.
template <class Field>
PrimeSumReport tail_three_halves(const Field& F, const Int& Q0, const Int& cutoff) {
  Int Q = effective_cutoff(F, Q0);
  if (cutoff <= Q) throw DomainError("tail cutoff must exceed Q");
  PrimeSumReport r{F.name(), Q};
  for (const auto& [n, c] : prime_norm_counts(F, Q, cutoff)) {
    double nd = n.get_d();
    r.sum += c.get_d() * F.log(n) / (nd * std::sqrt(nd));
  }
  r.reference = 1.0 / std::sqrt(Q.get_d());
  r.deviation = r.sum - r.reference;
  return r;
}

struct DivisorSumReport {
  double sum = 0;
  double bound = 0;
  bool ok = false;
};

/// sum_{p | x} log N(p)/N(p) against max{log log N_K(x), 0} + C.
template <class Field>
DivisorSumReport divisor_log_sum(const Field& F, const typename Field::Elem& x, double C) {
  if (RingOps<typename Field::Elem>::is_zero(x) || RingOps<typename Field::Elem>::is_unit(x))
    throw DomainError("divisor sum needs a nonzero non-unit");
  DivisorSumReport r;
  for (const auto& [p, e] : F.factor(x)) r.sum += F.log(p.norm) / p.norm.get_d();
  double ll = std::log(F.log(F.norm(x)));
  r.bound = std::max(ll, 0.0) + C;
  r.ok = r.sum <= r.bound;
  return r;
}

}  // namespace detlab
