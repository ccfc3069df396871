#include "hrmc/macwilliams.hpp"

#include <string>

#include "hrmc/errors.hpp"
#include "hrmc/negq_poly.hpp"

namespace hrmc {

namespace {

BigInt signed_term(bool negative, BigInt v) { return negative ? BigInt(-v) : v; }

void check_indices(std::int64_t k, std::int64_t x, std::int64_t t) {
  if (t < 0 || k < 0 || x < 0 || k > t || x > t) {
    throw IndexOutOfRange("need 0 <= x, k <= t (got x=" + std::to_string(x) + ", k=" + std::to_string(k) +
                          ", t=" + std::to_string(t) + ")");
  }
}

void check_distribution(const WeightDistribution& c, std::int64_t t, const char* what) {
  if (t < 0 || c.counts.size() != static_cast<std::size_t>(t + 1)) {
    throw LengthMismatch(std::string(what) + " must have t+1 = " + std::to_string(t + 1) + " entries");
  }
}

BigInt space_size(const NegQContext& ctx, std::int64_t t) {
  return pow_int(BigInt(ctx.q()), static_cast<std::uint64_t>(t * t));
}

// -b^t raised to e.
BigInt neg_bt_pow(const NegQContext& ctx, std::int64_t t, std::int64_t e) {
  return pow_int(BigInt(-ctx.b_pow_int(static_cast<std::uint64_t>(t))), static_cast<std::uint64_t>(e));
}

void check_code_input(const NegQContext& ctx, const WeightDistribution& c, const BigInt& code_size, std::int64_t t) {
  check_distribution(c, t, "weight distribution");
  if (code_size <= 0) throw InvalidArgument("code size must be positive");
  if (c.total() != code_size) {
    throw InvalidArgument("weight distribution sums to " + c.total().str() + ", not the code size " + code_size.str());
  }
  (void)ctx;
}

WeightDistribution finish_dual(const NegQContext& ctx, const std::vector<BigRational>& raw, const BigInt& code_size,
                               std::int64_t t) {
  WeightDistribution out;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    BigInt v = require_integral<NonIntegralDual>(raw[k] / BigRational(code_size), "dual count c'_" + std::to_string(k));
    if (v < 0) throw NonIntegralDual("dual count c'_" + std::to_string(k) + " = " + v.str() + " is negative");
    out.counts.push_back(v);
  }
  const BigInt total = space_size(ctx, t);
  if (total % code_size != 0 || out.total() != total / code_size) {
    throw NonIntegralDual("dual counts do not sum to q^(t^2)/|C|");
  }
  return out;
}

}  // namespace

BigInt krawtchouk_Q(const NegQContext& ctx, std::int64_t k, std::int64_t x, std::int64_t t) {
  check_indices(k, x, t);
  BigInt s = 0;
  for (std::int64_t j = 0; j <= k; ++j) {
    s += ctx.b_pow_int(static_cast<std::uint64_t>(sigma(k - j) + t * j)) * gauss(ctx, t - j, t - k) *
         gauss(ctx, t - x, j);
  }
  return signed_term(k % 2 != 0, s);
}

BigInt krawtchouk_C(const NegQContext& ctx, std::int64_t k, std::int64_t x, std::int64_t t) {
  check_indices(k, x, t);
  BigInt s = 0;
  for (std::int64_t l = 0; l <= k; ++l) {
    BigInt term = ctx.b_pow_int(static_cast<std::uint64_t>(l * (t - x) + sigma(l))) * gauss(ctx, x, l) *
                  gauss(ctx, t - x, k - l) * gamma_fn(ctx, t - l, k - l);
    s += signed_term(l % 2 != 0, term);
  }
  return s;
}

namespace {

template <class F>
EigenTable make_table(const NegQContext& ctx, std::int64_t t, F&& entry) {
  if (t < 0) throw IndexOutOfRange("t must be non-negative");
  EigenTable table{ctx.q(), t, {}};
  for (std::int64_t x = 0; x <= t; ++x) {
    std::vector<BigInt> row;
    for (std::int64_t k = 0; k <= t; ++k) row.push_back(entry(ctx, k, x, t));
    table.values.push_back(std::move(row));
  }
  return table;
}

}  // namespace

EigenTable eigen_table_Q(const NegQContext& ctx, std::int64_t t) { return make_table(ctx, t, krawtchouk_Q); }
EigenTable eigen_table_C(const NegQContext& ctx, std::int64_t t) { return make_table(ctx, t, krawtchouk_C); }

WeightDistribution macwilliams_eigen(const NegQContext& ctx, const WeightDistribution& c, const BigInt& code_size,
                                     std::int64_t t) {
  check_code_input(ctx, c, code_size, t);
  std::vector<BigRational> raw;
  for (std::int64_t k = 0; k <= t; ++k) {
    BigInt s = 0;
    for (std::int64_t x = 0; x <= t; ++x) {
      if (c[static_cast<std::size_t>(x)] != 0) s += c[static_cast<std::size_t>(x)] * krawtchouk_Q(ctx, k, x, t);
    }
    raw.emplace_back(s);
  }
  return finish_dual(ctx, raw, code_size, t);
}

WeightDistribution macwilliams_transform(const NegQContext& ctx, const WeightDistribution& c,
                                         const BigInt& code_size, std::int64_t t) {
  check_code_input(ctx, c, code_size, t);
  const LambdaPoly transformed = negq_transform(ConcretePoly{c.counts}, mu(ctx), nu(ctx));
  return finish_dual(ctx, transformed.coefficients(t), code_size, t);
}

MomentPair moment_q(const NegQContext& ctx, const WeightDistribution& c, const WeightDistribution& c_dual,
                    const BigInt& dual_size, std::int64_t t, std::int64_t phi) {
  check_indices(phi, 0, t);
  check_distribution(c, t, "weight distribution");
  check_distribution(c_dual, t, "dual weight distribution");
  if (dual_size <= 0) throw InvalidArgument("dual size must be positive");
  MomentPair out;
  BigInt lhs = 0;
  for (std::int64_t i = 0; i <= t - phi; ++i) lhs += gauss(ctx, t - i, phi) * c[static_cast<std::size_t>(i)];
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= phi; ++i) sum += gauss(ctx, t - i, t - phi) * c_dual[static_cast<std::size_t>(i)];
  out.lhs = BigRational(lhs);
  out.rhs = BigRational(neg_bt_pow(ctx, t, t - phi) * sum, dual_size);
  return out;
}

MomentPair moment_qinv(const NegQContext& ctx, const WeightDistribution& c, const WeightDistribution& c_dual,
                       const BigInt& dual_size, std::int64_t t, std::int64_t phi) {
  check_indices(phi, 0, t);
  check_distribution(c, t, "weight distribution");
  check_distribution(c_dual, t, "dual weight distribution");
  if (dual_size <= 0) throw InvalidArgument("dual size must be positive");
  MomentPair out;
  BigInt lhs = 0;
  for (std::int64_t i = phi; i <= t; ++i) {
    lhs += ctx.b_pow_int(static_cast<std::uint64_t>(phi * (t - i))) * gauss(ctx, i, phi) * c[static_cast<std::size_t>(i)];
  }
  out.lhs = BigRational(lhs);
  out.rhs = BigRational(neg_bt_pow(ctx, t, t - phi) * moment_qinv_high(ctx, c_dual, t, phi), dual_size);
  return out;
}

BigRational moment_q_low(const NegQContext& ctx, const BigInt& dual_size, std::int64_t t, std::int64_t phi) {
  check_indices(phi, 0, t);
  return BigRational(neg_bt_pow(ctx, t, t - phi) * gauss(ctx, t, phi), dual_size);
}

BigRational moment_qinv_low(const NegQContext& ctx, const BigInt& dual_size, std::int64_t t, std::int64_t phi) {
  check_indices(phi, 0, t);
  return BigRational(neg_bt_pow(ctx, t, t - phi) * gauss(ctx, t, phi) * gamma_fn(ctx, t, phi), dual_size);
}

BigInt moment_qinv_high(const NegQContext& ctx, const WeightDistribution& c, std::int64_t t, std::int64_t phi) {
  check_indices(phi, 0, t);
  check_distribution(c, t, "weight distribution");
  BigInt s = 0;
  for (std::int64_t i = 0; i <= phi; ++i) {
    BigInt term = ctx.b_pow_int(static_cast<std::uint64_t>(sigma(i) + i * (phi - i))) * gauss(ctx, t - i, t - phi) *
                  gamma_fn(ctx, t - i, phi - i) * c[static_cast<std::size_t>(i)];
    s += signed_term(i % 2 != 0, term);
  }
  return s;
}

BigRational delta_fn(const NegQContext& ctx, std::int64_t lambda, std::int64_t phi, std::int64_t j) {
  if (phi < 0 || j < 0) throw InvalidArgument("delta needs phi, j >= 0");
  BigRational s = 0;
  for (std::int64_t i = 0; i <= j; ++i) {
    BigRational term = BigRational(gauss(ctx, j, i) * ctx.b_pow_int(static_cast<std::uint64_t>(sigma(i)))) *
                       gamma_rational(ctx, lambda - i, phi);
    s += (i % 2) ? BigRational(-term) : term;
  }
  return s;
}

BigRational delta_closed(const NegQContext& ctx, std::int64_t lambda, std::int64_t phi, std::int64_t j) {
  if (phi < 0 || j < 0) throw InvalidArgument("delta needs phi, j >= 0");
  if (j > phi) return 0;
  BigRational v = falling_product(ctx, phi, j) * gamma_rational(ctx, lambda - j, phi - j) * ctx.b_pow(j * (lambda - j));
  return (j % 2) ? BigRational(-v) : v;
}

BigRational epsilon_fn(const NegQContext& ctx, std::int64_t big_lambda, std::int64_t phi, std::int64_t i) {
  if (i < 0) throw InvalidArgument("epsilon needs i >= 0");
  BigRational s = 0;
  for (std::int64_t l = 0; l <= i; ++l) {
    BigRational term = gauss_rational(ctx, i, l) * gauss_rational(ctx, big_lambda - i, phi - l) *
                       ctx.b_pow(l * (big_lambda - phi) + sigma(l)) * falling_product(ctx, phi - l, i - l);
    s += (l % 2) ? BigRational(-term) : term;
  }
  return s;
}

BigRational epsilon_closed(const NegQContext& ctx, std::int64_t big_lambda, std::int64_t phi, std::int64_t i) {
  if (i < 0) throw InvalidArgument("epsilon needs i >= 0");
  BigRational v = ctx.b_pow(sigma(i)) * gauss_rational(ctx, big_lambda - i, big_lambda - phi);
  return (i % 2) ? BigRational(-v) : v;
}

WeightDistribution mhrd_distribution(const NegQContext& ctx, std::int64_t t, std::int64_t d, const BigInt& dual_size) {
  if (d % 2 == 0) throw EvenMinimumDistance("the distribution of an MHRD code with even d is not determined by its parameters");
  if (d < 1 || d > t) throw InvalidArgument("need 1 <= d <= t");
  const BigInt expected = pow_int(BigInt(ctx.q()), static_cast<std::uint64_t>(t * (d - 1)));
  if (dual_size != expected) {
    throw InvalidArgument("an MHRD code with t=" + std::to_string(t) + ", d=" + std::to_string(d) + " has |C^perp| = " +
                          expected.str() + ", not " + dual_size.str());
  }
  WeightDistribution out;
  out.counts.assign(static_cast<std::size_t>(t + 1), 0);
  out.counts[0] = 1;
  for (std::int64_t r = 0; r <= t - d; ++r) {
    BigRational s = 0;
    for (std::int64_t i = 0; i <= r; ++i) {
      BigRational term = BigRational(ctx.b_pow_int(static_cast<std::uint64_t>(sigma(r - i))) * gauss(ctx, d + r, d + i) *
                                     gauss(ctx, t, d + r)) *
                         (BigRational(neg_bt_pow(ctx, t, d + i), dual_size) - 1);
      s += ((r - i) % 2) ? BigRational(-term) : term;
    }
    BigInt v = require_integral<NonIntegralCount>(s, "MHRD count c_" + std::to_string(r + d));
    if (v < 0) throw NonIntegralCount("MHRD count c_" + std::to_string(r + d) + " = " + v.str() + " is negative");
    out.counts[static_cast<std::size_t>(r + d)] = v;
  }
  const BigInt size = pow_int(BigInt(ctx.q()), static_cast<std::uint64_t>(t * (t - d + 1)));
  if (out.total() != size) throw NonIntegralCount("MHRD counts do not sum to q^(t(t-d+1))");
  return out;
}

}  // namespace hrmc
