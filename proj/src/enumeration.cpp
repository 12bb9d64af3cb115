#include "detlab/enumeration.hpp"

#include <numeric>

namespace detlab {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DETLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::uint64_t point_hash(const std::vector<std::string>& coords) {
  std::uint64_t h = 1469598103934665603ULL;
  for (const auto& c : coords) {
    for (unsigned char ch : c) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

FitResult fit_exponent(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 4) throw DomainError("exponent fit needs at least 4 records");
  std::vector<double> x, y;
  for (const auto& [B, N] : pts) {
    if (B <= 0 || N < 1) throw DomainError("exponent fit needs B > 0 and N >= 1");
    x.push_back(std::log(B));
    y.push_back(std::log(N));
  }
  double n = static_cast<double>(x.size());
  double mx = std::accumulate(x.begin(), x.end(), 0.0) / n, my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0) throw DomainError("degenerate grid of bounds");
  FitResult r;
  r.slope = sxy / sxx;
  r.intercept = my - r.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double e = y[i] - (r.intercept + r.slope * x[i]);
    ss += e * e;
  }
  r.residual = std::sqrt(ss / n);
  r.points = x.size();
  return r;
}

}  // namespace detlab
