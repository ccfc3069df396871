#pragma once

#include <cstdint>
#include <random>

#include "hrmc/code_space.hpp"
#include "hrmc/negq_poly.hpp"

namespace hrmc {

/// mt19937_64 with draws defined here rather than by std distributions, so
/// sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Seeded from (seed, stream, index): independent, reproducible per instance.
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix64(std::uint64_t x);

/// Subcode spanned by between 0 and t^2 uniformly sampled Hermitian matrices.
LinearCode random_subcode(const Field& field, std::size_t t, Rng& rng);

/// Polynomial whose coefficient (i, lambda) is a fixed hash of (seed, i, lambda)
/// mapped into [lo, hi]; pure, so it behaves like any other lambda-dependent poly.
LambdaPoly random_lambda_poly(const NegQContext& ctx, std::int64_t degree, std::uint64_t seed, std::int64_t lo = -9,
                              std::int64_t hi = 9);

}  // namespace hrmc
