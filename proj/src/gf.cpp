#include "detlab/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "detlab/fp_poly.hpp"

namespace detlab {

namespace {

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<GFContext>>& registry() {
  static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<GFContext>> r;
  return r;
}

std::uint32_t reduce_long(long c, std::uint32_t p) {
  long r = c % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

const GFContext* GFContext::get(std::uint32_t p, const std::vector<std::uint32_t>& mod) {
  if (mod.size() < 2 || mod.back() != 1) throw DomainError("residue field modulus must be monic of degree >= 1");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto key = std::make_pair(p, mod);
  auto it = registry().find(key);
  if (it != registry().end()) return it->second.get();
  auto ctx = std::make_unique<GFContext>(p, mod);
  const GFContext* raw = ctx.get();
  registry().emplace(std::move(key), std::move(ctx));
  return raw;
}

const GFContext* GFContext::prime_field(std::uint32_t p) { return get(p, {0, 1}); }

const GFContext* GFContext::of_degree(std::uint32_t p, int k) {
  if (k == 1) return prime_field(p);
  static std::mutex m;
  static std::map<std::pair<std::uint32_t, int>, const GFContext*> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
  }
  std::vector<std::uint32_t> lower(static_cast<std::size_t>(k), 0);
  lower[0] = 1;
  while (true) {
    std::vector<std::uint32_t> c = lower;
    c.push_back(1);
    if (is_irreducible(FpPoly(p, c))) {
      const GFContext* ctx = get(p, c);
      std::lock_guard<std::mutex> lock(m);
      cache.emplace(std::make_pair(p, k), ctx);
      return ctx;
    }
    std::size_t i = 0;
    for (; i < lower.size(); ++i) {
      if (++lower[i] < p) break;
      lower[i] = 0;
    }
    if (i == lower.size()) throw InvariantViolation("no irreducible polynomial found");
  }
}

std::string GFContext::describe() const {
  if (k() == 1) return "F_" + std::to_string(p_);
  return "F_" + std::to_string(p_) + "[x]/(" + FpPoly(p_, mod_).to_string('x') + ")";
}

GFElem::GFElem(const GFContext* ctx, std::vector<std::uint32_t> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  std::size_t k = static_cast<std::size_t>(ctx->k());
  if (c_.size() > k) {
    // Reduce modulo the defining polynomial.
    const auto& m = ctx->modulus();
    std::uint32_t p = ctx->p();
    for (std::size_t i = c_.size(); i-- > k;) {
      std::uint64_t c = c_[i] % p;
      if (!c) continue;
      for (std::size_t j = 0; j < k; ++j)
        c_[i - k + j] = static_cast<std::uint32_t>((c_[i - k + j] + (p - c) * m[j]) % p);
    }
  }
  c_.resize(k, 0);
  for (auto& x : c_) x %= ctx->p();
}

GFElem GFElem::from_u64(const GFContext* ctx, std::uint64_t c) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(ctx->k()), 0);
  v[0] = static_cast<std::uint32_t>(c % ctx->p());
  return GFElem(ctx, std::move(v));
}

GFElem GFElem::from_long(const GFContext* ctx, long c) { return from_u64(ctx, reduce_long(c, ctx->p())); }

GFElem GFElem::generator(const GFContext* ctx) { return GFElem(ctx, {0, 1}); }

GFElem GFElem::random(const GFContext* ctx, std::mt19937_64& rng) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(ctx->k()));
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % ctx->p());
  return GFElem(ctx, std::move(v));
}

bool GFElem::is_zero() const {
  if (universal()) return value_ == 0;
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

bool GFElem::is_one() const {
  if (universal()) return value_ == 1;
  if (c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t x) { return x == 0; });
}

std::uint32_t GFElem::coeff(int i) const {
  if (universal()) throw DomainError("coefficient of a context-free constant");
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
}

GFElem GFElem::in(const GFContext* ctx) const {
  if (!universal()) {
    if (ctx != ctx_) throw DomainError("mixing elements of different finite fields");
    return *this;
  }
  return from_long(ctx, value_);
}

const GFContext* GFElem::common(const GFElem& a, const GFElem& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_) throw DomainError("mixing elements of different finite fields");
  return a.ctx_ ? a.ctx_ : b.ctx_;
}

GFElem GFElem::operator-() const {
  if (universal()) return GFElem(-value_);
  GFElem r = *this;
  std::uint32_t p = ctx_->p();
  for (auto& x : r.c_) x = x ? p - x : 0;
  return r;
}

GFElem& GFElem::operator+=(const GFElem& o) {
  const GFContext* ctx = common(*this, o);
  if (!ctx) {
    value_ += o.value_;
    return *this;
  }
  *this = in(ctx);
  GFElem b = o.in(ctx);
  std::uint32_t p = ctx->p();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::uint32_t s = c_[i] + b.c_[i];
    c_[i] = s >= p ? s - p : s;
  }
  return *this;
}

GFElem& GFElem::operator-=(const GFElem& o) { return *this += -o; }

GFElem& GFElem::operator*=(const GFElem& o) {
  const GFContext* ctx = common(*this, o);
  if (!ctx) {
    value_ *= o.value_;
    return *this;
  }
  GFElem a = in(ctx), b = o.in(ctx);
  std::uint64_t p = ctx->p();
  std::size_t k = a.c_.size();
  if (k == 1) {
    a.c_[0] = static_cast<std::uint32_t>(std::uint64_t(a.c_[0]) * b.c_[0] % p);
    *this = std::move(a);
    return *this;
  }
  std::vector<std::uint64_t> acc(2 * k - 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < k; ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % p;
  }
  const auto& m = ctx->modulus();
  for (std::size_t i = acc.size(); i-- > k;) {
    std::uint64_t c = acc[i];
    if (!c) continue;
    for (std::size_t j = 0; j < k; ++j) acc[i - k + j] = (acc[i - k + j] + (p - c) * m[j]) % p;
  }
  std::vector<std::uint32_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
  ctx_ = ctx;
  c_ = std::move(out);
  return *this;
}

bool operator==(const GFElem& a, const GFElem& b) {
  const GFContext* ctx = GFElem::common(a, b);
  if (!ctx) return a.value_ == b.value_;
  return a.in(ctx).c_ == b.in(ctx).c_;
}

GFElem GFElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in finite field");
  if (universal()) {
    if (value_ == 1 || value_ == -1) return *this;
    throw DomainError("inverse of a context-free constant");
  }
  if (ctx_->k() == 1) return from_u64(ctx_, invmod(c_[0], ctx_->p()));
  return pow(ctx_->size() - 2);
}

GFElem GFElem::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  GFElem r = universal() ? GFElem(1) : from_u64(ctx_, 1);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return r;
  for (std::size_t i = bits; i-- > 0;) {
    r *= r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= *this;
  }
  return r;
}

Int GFElem::index() const {
  if (universal()) throw DomainError("index of a context-free constant");
  Int r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * ctx_->p() + c_[i];
  return r;
}

GFElem GFElem::from_index(const GFContext* ctx, Int idx) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(ctx->k()), 0);
  for (auto& x : v) {
    Int r = idx % ctx->p();
    x = static_cast<std::uint32_t>(r.get_ui());
    idx /= ctx->p();
  }
  return GFElem(ctx, std::move(v));
}

std::string GFElem::to_string() const {
  if (universal()) return std::to_string(value_);
  if (ctx_->k() == 1) return std::to_string(c_[0]);
  return FpPoly(ctx_->p(), c_).to_string('x');
}

namespace {

const GFContext* poly_ctx(const GFPoly& f) {
  for (const auto& c : f.coeffs)
    if (!c.universal()) return c.ctx();
  throw DomainError("polynomial coefficients carry no finite field");
}

// p-th root of a polynomial whose derivative vanishes.
GFPoly pth_root(const GFPoly& f, const GFContext* ctx) {
  std::uint32_t p = ctx->p();
  Int e = pow_int(Int(p), static_cast<unsigned long>(ctx->k() - 1));
  std::vector<GFElem> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i).in(ctx).pow(e));
  return GFPoly(std::move(c));
}

void squarefree_rec(const GFPoly& f, const GFContext* ctx, int mult, std::vector<std::pair<GFPoly, int>>& out) {
  if (f.degree() < 1) return;
  GFPoly df = f.derivative();
  GFPoly c = gcd(f, df);
  GFPoly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    GFPoly y = gcd(w, c);
    GFPoly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) squarefree_rec(pth_root(c, ctx), ctx, mult * static_cast<int>(ctx->p()), out);
}

std::vector<std::pair<GFPoly, int>> distinct_degree(GFPoly f, const GFContext* ctx) {
  std::vector<std::pair<GFPoly, int>> out;
  Int q = ctx->size();
  GFPoly x = GFPoly::x();
  GFPoly h = x;
  int d = 1;
  while (f.degree() >= 2 * d) {
    h = powmod(h, q, f);
    GFPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = divmod(f, g).first;
      h = divmod(h, f).second;
    }
    ++d;
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

void equal_degree(const GFPoly& f, int d, const GFContext* ctx, std::mt19937_64& rng, std::vector<GFPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  Int q = ctx->size();
  while (true) {
    std::vector<GFElem> rc;
    for (int i = 0; i < f.degree(); ++i) rc.push_back(GFElem::random(ctx, rng));
    GFPoly a(std::move(rc));
    if (a.degree() < 1) continue;
    GFPoly b;
    if (ctx->p() == 2) {
      // Trace map to F_2.
      int steps = ctx->k() * d;
      GFPoly t = a, acc = a;
      for (int i = 1; i < steps; ++i) {
        t = divmod(t * t, f).second;
        acc += t;
      }
      b = acc;
    } else {
      Int e = (pow_int(q, static_cast<unsigned long>(d)) - 1) / 2;
      b = powmod(a, e, f) - GFPoly::constant(GFElem(1));
    }
    GFPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, ctx, rng, out);
      equal_degree(divmod(f, g).first, d, ctx, rng, out);
      return;
    }
  }
}

bool poly_less(const GFPoly& a, const GFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    Int x = a.coeff(i).index(), y = b.coeff(i).index();
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

std::vector<std::pair<GFPoly, int>> factor_upoly(const GFPoly& f0) {
  if (f0.is_zero()) throw DomainError("factor of zero polynomial");
  std::vector<std::pair<GFPoly, int>> out;
  if (f0.degree() == 0) return out;
  const GFContext* ctx = poly_ctx(f0);
  std::vector<GFElem> cc;
  for (const auto& c : f0.coeffs) cc.push_back(c.in(ctx));
  GFPoly f = GFPoly(std::move(cc)).monic();
  std::vector<std::pair<GFPoly, int>> sqf;
  squarefree_rec(f, ctx, 1, sqf);
  std::mt19937_64 rng(0x5eed1234ULL);
  for (const auto& [g, m] : sqf) {
    for (const auto& [h, d] : distinct_degree(g, ctx)) {
      std::vector<GFPoly> parts;
      equal_degree(h, d, ctx, rng, parts);
      for (auto& part : parts) {
        for (auto& c : part.coeffs) c = c.in(ctx);
        out.emplace_back(std::move(part), m);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  // Merge equal factors that came from different squarefree layers.
  std::vector<std::pair<GFPoly, int>> merged;
  for (auto& fe : out) {
    if (!merged.empty() && merged.back().first == fe.first)
      merged.back().second += fe.second;
    else
      merged.push_back(std::move(fe));
  }
  return merged;
}

std::vector<GFElem> roots(const GFPoly& f) {
  std::vector<GFElem> r;
  for (const auto& [g, e] : factor_upoly(f)) {
    if (g.degree() == 1) r.push_back(-g.coeff(0).in(poly_ctx(g)));
  }
  std::sort(r.begin(), r.end(), [](const GFElem& a, const GFElem& b) { return a.index() < b.index(); });
  return r;
}

bool is_squarefree(const GFPoly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

GFElem GFExtension::embed(const GFElem& x) const {
  if (x.universal()) return GFElem::from_long(field, x.universal_value());
  GFElem r = GFElem::from_u64(field, 0);
  GFElem pw = GFElem::from_u64(field, 1);
  for (int i = 0; i < x.ctx()->k(); ++i) {
    r += GFElem::from_u64(field, x.coeff(i)) * pw;
    pw *= base_generator_image;
  }
  return r;
}

GFExtension extend(const GFContext* base, int m) {
  GFExtension ext;
  ext.field = GFContext::of_degree(base->p(), base->k() * m);
  if (base->k() == 1) {
    ext.base_generator_image = GFElem::from_u64(ext.field, 0);
    return ext;
  }
  std::vector<GFElem> c;
  for (auto x : base->modulus()) c.push_back(GFElem::from_u64(ext.field, x));
  auto rs = roots(GFPoly(std::move(c)));
  if (rs.empty()) throw InvariantViolation("subfield modulus has no root in extension");
  ext.base_generator_image = rs.front();
  return ext;
}

}  // namespace detlab
