#include "hrmc/random.hpp"

#include "hrmc/errors.hpp"

namespace hrmc {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
    : engine_(mix64(mix64(mix64(seed) ^ stream) ^ index)) {}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

LinearCode random_subcode(const Field& field, std::size_t t, Rng& rng) {
  const std::uint64_t count = hermitian_count(field, t, ~std::uint64_t{0});
  const std::uint64_t gens = rng.below(t * t + 1);
  std::vector<HermitianMatrix> generators;
  for (std::uint64_t i = 0; i < gens; ++i) generators.push_back(hermitian_at(field, t, rng.below(count)));
  return {field, t, generators};
}

LambdaPoly random_lambda_poly(const NegQContext& ctx, std::int64_t degree, std::uint64_t seed, std::int64_t lo,
                              std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return {ctx, degree, [seed, lo, span](std::int64_t i, std::int64_t l) {
            const std::uint64_t h = mix64(mix64(seed ^ mix64(static_cast<std::uint64_t>(i))) ^ static_cast<std::uint64_t>(l));
            return BigRational(lo + static_cast<std::int64_t>(h % span));
          }};
}

}  // namespace hrmc
