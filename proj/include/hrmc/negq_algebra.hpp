#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hrmc/bigint.hpp"

namespace hrmc {

namespace detail {
struct NegQCache;
}

/// Holds q and b = -q, plus a memo table shared by all copies.
/// Safe to use from several threads at once.
class NegQContext {
 public:
  /// Throws InvalidArgument unless q is a prime power >= 2.
  explicit NegQContext(std::int64_t q);

  std::int64_t q() const { return q_; }
  std::int64_t b() const { return -q_; }
  /// b^e for any integer e.
  BigRational b_pow(std::int64_t e) const;
  BigInt b_pow_int(std::uint64_t e) const;

  detail::NegQCache& cache() const { return *cache_; }

  friend bool operator==(const NegQContext& a, const NegQContext& c) { return a.q_ == c.q_; }

 private:
  std::int64_t q_;
  std::shared_ptr<detail::NegQCache> cache_;
};

constexpr std::int64_t sigma(std::int64_t i) { return i * (i - 1) / 2; }

/// Negative-q Gaussian coefficient [x k] for x, k >= 0; zero when k > x.
/// Throws InvalidArgument for negative arguments.
BigInt gauss(const NegQContext& ctx, std::int64_t x, std::int64_t k);

/// [x k] for arbitrary integers. For k >= 0 the product formula is used as
/// is (rational when x < 0). For k < 0 the symmetry [x k] = [x x-k] is used
/// when x - k >= 0, and the value is 0 otherwise.
BigRational gauss_rational(const NegQContext& ctx, std::int64_t x, std::int64_t k);

/// gamma(x, k) = prod_{i<k} (-b^x - b^i). Throws NonIntegralResult for x < 0
/// with a non-integral value; use gamma_rational there.
BigInt gamma_fn(const NegQContext& ctx, std::int64_t x, std::int64_t k);
BigRational gamma_rational(const NegQContext& ctx, std::int64_t x, std::int64_t k);

/// beta(x, k) = prod_{i<k} [x-i 1].
BigInt beta_fn(const NegQContext& ctx, std::int64_t x, std::int64_t k);
BigRational beta_rational(const NegQContext& ctx, std::int64_t x, std::int64_t k);

/// Number of t x t Hermitian matrices of rank h, [t h] gamma(t, h).
BigInt xi(const NegQContext& ctx, std::int64_t t, std::int64_t h);

/// prod_{i<j} (b^phi - b^i), exact for any integer phi.
BigRational falling_product(const NegQContext& ctx, std::int64_t phi, std::int64_t j);

/// Given a_j = sum_{i<=j} [l-i l-j] b_i, recovers b. Throws LengthMismatch.
std::vector<BigInt> sequence_inversion(const NegQContext& ctx, std::int64_t l, std::span<const BigInt> a);
/// The forward map a_j = sum_{i<=j} [l-i l-j] b_i. Throws LengthMismatch.
std::vector<BigInt> sequence_forward(const NegQContext& ctx, std::int64_t l, std::span<const BigInt> b);

}  // namespace hrmc
