#pragma once

#include <cstdint>
#include <vector>

#include "hrmc/bigint.hpp"
#include "hrmc/negq_algebra.hpp"
#include "hrmc/weight_distribution.hpp"

namespace hrmc {

/// Q_k(x, t) = (-1)^k sum_j b^{sigma_{k-j} + t j} [t-j t-k] [t-x j].
/// Throws IndexOutOfRange unless 0 <= x, k <= t.
BigInt krawtchouk_Q(const NegQContext& ctx, std::int64_t k, std::int64_t x, std::int64_t t);

/// C_k(x, t) = sum_l (-1)^l b^{l(t-x)} b^{sigma_l} [x l] [t-x k-l] gamma(t-l, k-l).
BigInt krawtchouk_C(const NegQContext& ctx, std::int64_t k, std::int64_t x, std::int64_t t);

/// values[x][k] = Q_k(x, t) (or C_k(x, t)).
struct EigenTable {
  std::int64_t q = 0;
  std::int64_t t = 0;
  std::vector<std::vector<BigInt>> values;

  friend bool operator==(const EigenTable&, const EigenTable&) = default;
};

EigenTable eigen_table_Q(const NegQContext& ctx, std::int64_t t);
EigenTable eigen_table_C(const NegQContext& ctx, std::int64_t t);

/// c'_k = (1/|C|) sum_x c_x Q_k(x, t). Throws NonIntegralDual, LengthMismatch.
WeightDistribution macwilliams_eigen(const NegQContext& ctx, const WeightDistribution& c, const BigInt& code_size,
                                     std::int64_t t);

/// (1/|C|) sum_i c_i nu^[i] * mu^[t-i] at lambda = t. Throws NonIntegralDual, LengthMismatch.
WeightDistribution macwilliams_transform(const NegQContext& ctx, const WeightDistribution& c,
                                         const BigInt& code_size, std::int64_t t);

struct MomentPair {
  BigRational lhs;
  BigRational rhs;
  bool holds() const { return lhs == rhs; }
};

/// sum_{i<=t-phi} [t-i phi] c_i  vs  (1/|C^perp|)(-b^t)^{t-phi} sum_{i<=phi} [t-i t-phi] c'_i.
MomentPair moment_q(const NegQContext& ctx, const WeightDistribution& c, const WeightDistribution& c_dual,
                    const BigInt& dual_size, std::int64_t t, std::int64_t phi);

/// sum_{i>=phi} b^{phi(t-i)} [i phi] c_i  vs
/// (1/|C^perp|)(-b^t)^{t-phi} sum_{i<=phi} (-1)^i b^{sigma_i} b^{i(phi-i)} [t-i t-phi] gamma(t-i, phi-i) c'_i.
MomentPair moment_qinv(const NegQContext& ctx, const WeightDistribution& c, const WeightDistribution& c_dual,
                       const BigInt& dual_size, std::int64_t t, std::int64_t phi);

/// Right side of moment_q when phi < d'_R: (1/|C^perp|)(-b^t)^{t-phi} [t phi].
BigRational moment_q_low(const NegQContext& ctx, const BigInt& dual_size, std::int64_t t, std::int64_t phi);
/// Right side of moment_qinv when phi < d'_R: (1/|C^perp|)(-b^t)^{t-phi} [t phi] gamma(t, phi).
BigRational moment_qinv_low(const NegQContext& ctx, const BigInt& dual_size, std::int64_t t, std::int64_t phi);
/// sum_{i<=phi} (-1)^i b^{sigma_i} b^{i(phi-i)} [t-i t-phi] gamma(t-i, phi-i) c_i; zero when
/// phi exceeds the diameter of the dual of the code with distribution c.
BigInt moment_qinv_high(const NegQContext& ctx, const WeightDistribution& c, std::int64_t t, std::int64_t phi);

/// delta(lambda, phi, j) = sum_i [j i] (-1)^i b^{sigma_i} gamma(lambda-i, phi).
BigRational delta_fn(const NegQContext& ctx, std::int64_t lambda, std::int64_t phi, std::int64_t j);
/// (-1)^j prod_{i<j}(b^phi - b^i) gamma(lambda-j, phi-j) b^{j(lambda-j)}; zero when j > phi.
BigRational delta_closed(const NegQContext& ctx, std::int64_t lambda, std::int64_t phi, std::int64_t j);

/// epsilon(L, phi, i) = sum_l [i l] [L-i phi-l] b^{l(L-phi)} (-1)^l b^{sigma_l} prod_{j<i-l}(b^{phi-l} - b^j).
BigRational epsilon_fn(const NegQContext& ctx, std::int64_t big_lambda, std::int64_t phi, std::int64_t i);
/// (-1)^i b^{sigma_i} [L-i L-phi].
BigRational epsilon_closed(const NegQContext& ctx, std::int64_t big_lambda, std::int64_t phi, std::int64_t i);

/// Weight distribution forced on an MHRD code with odd minimum distance d.
/// Throws EvenMinimumDistance, NonIntegralCount, InvalidArgument.
WeightDistribution mhrd_distribution(const NegQContext& ctx, std::int64_t t, std::int64_t d, const BigInt& dual_size);

}  // namespace hrmc
