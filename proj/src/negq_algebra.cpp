#include "hrmc/negq_algebra.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "hrmc/errors.hpp"
#include "hrmc/finite_field.hpp"

namespace hrmc {

namespace detail {

struct NegQCache {
  std::shared_mutex mutex;
  std::map<std::pair<std::int64_t, std::int64_t>, BigRational> gauss;
};

}  // namespace detail

NegQContext::NegQContext(std::int64_t q) : q_(q), cache_(std::make_shared<detail::NegQCache>()) {
  if (q < 2 || !prime_power(static_cast<std::uint64_t>(q))) {
    throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power >= 2");
  }
}

BigRational NegQContext::b_pow(std::int64_t e) const { return pow_rational(BigInt(b()), e); }
BigInt NegQContext::b_pow_int(std::uint64_t e) const { return pow_int(BigInt(b()), e); }

namespace {

BigRational gauss_product(const NegQContext& ctx, std::int64_t x, std::int64_t k) {
  BigRational num = 1;
  BigRational den = 1;
  const BigRational bx = ctx.b_pow(x);
  const BigRational bk = ctx.b_pow(k);
  for (std::int64_t i = 0; i < k; ++i) {
    const BigRational bi = ctx.b_pow(i);
    num *= bx - bi;
    den *= bk - bi;
  }
  return num / den;
}

}  // namespace

BigRational gauss_rational(const NegQContext& ctx, std::int64_t x, std::int64_t k) {
  if (k < 0) {
    if (x - k < 0) return 0;
    return gauss_rational(ctx, x, x - k);
  }
  if (k == 0) return 1;
  if (x >= 0 && k > x) return 0;
  auto& cache = ctx.cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.gauss.find({x, k});
    if (it != cache.gauss.end()) return it->second;
  }
  BigRational value = gauss_product(ctx, x, k);
  std::unique_lock lock(cache.mutex);
  cache.gauss.emplace(std::make_pair(x, k), value);
  return value;
}

BigInt gauss(const NegQContext& ctx, std::int64_t x, std::int64_t k) {
  if (x < 0 || k < 0) {
    throw InvalidArgument("gauss needs x, k >= 0 (got " + std::to_string(x) + ", " + std::to_string(k) + ")");
  }
  return require_integral(gauss_rational(ctx, x, k), "gaussian coefficient");
}

BigRational gamma_rational(const NegQContext& ctx, std::int64_t x, std::int64_t k) {
  if (k < 0) throw InvalidArgument("gamma needs k >= 0");
  const BigRational bx = ctx.b_pow(x);
  BigRational r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= -bx - ctx.b_pow(i);
  return r;
}

BigInt gamma_fn(const NegQContext& ctx, std::int64_t x, std::int64_t k) {
  return require_integral(gamma_rational(ctx, x, k), "gamma");
}

BigRational beta_rational(const NegQContext& ctx, std::int64_t x, std::int64_t k) {
  if (k < 0) throw InvalidArgument("beta needs k >= 0");
  BigRational r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= gauss_rational(ctx, x - i, 1);
    if (r == 0) break;
  }
  return r;
}

BigInt beta_fn(const NegQContext& ctx, std::int64_t x, std::int64_t k) {
  return require_integral(beta_rational(ctx, x, k), "beta");
}

BigInt xi(const NegQContext& ctx, std::int64_t t, std::int64_t h) {
  if (t < 0 || h < 0 || h > t) throw IndexOutOfRange("xi needs 0 <= h <= t");
  return gauss(ctx, t, h) * gamma_fn(ctx, t, h);
}

BigRational falling_product(const NegQContext& ctx, std::int64_t phi, std::int64_t j) {
  const BigRational bp = ctx.b_pow(phi);
  BigRational r = 1;
  for (std::int64_t i = 0; i < j; ++i) r *= bp - ctx.b_pow(i);
  return r;
}

std::vector<BigInt> sequence_inversion(const NegQContext& ctx, std::int64_t l, std::span<const BigInt> a) {
  if (l < 0 || a.size() != static_cast<std::size_t>(l + 1)) {
    throw LengthMismatch("sequence must have length l+1 = " + std::to_string(l + 1));
  }
  std::vector<BigInt> out(a.size());
  for (std::int64_t i = 0; i <= l; ++i) {
    BigInt s = 0;
    for (std::int64_t j = 0; j <= i; ++j) {
      BigInt term = ctx.b_pow_int(static_cast<std::uint64_t>(sigma(i - j))) * gauss(ctx, l - j, l - i) * a[j];
      s += ((i - j) % 2) ? BigInt(-term) : term;
    }
    out[i] = s;
  }
  return out;
}

std::vector<BigInt> sequence_forward(const NegQContext& ctx, std::int64_t l, std::span<const BigInt> b) {
  if (l < 0 || b.size() != static_cast<std::size_t>(l + 1)) {
    throw LengthMismatch("sequence must have length l+1 = " + std::to_string(l + 1));
  }
  std::vector<BigInt> out(b.size());
  for (std::int64_t j = 0; j <= l; ++j) {
    BigInt s = 0;
    for (std::int64_t i = 0; i <= j; ++i) s += gauss(ctx, l - i, l - j) * b[i];
    out[j] = s;
  }
  return out;
}

}  // namespace hrmc
