#include <doctest.h>

#include "hrmc/code_space.hpp"
#include "hrmc/errors.hpp"
#include "hrmc/io.hpp"
#include "hrmc/macwilliams.hpp"
#include "hrmc/random.hpp"
#include "support/oracle.hpp"

using namespace hrmc;

namespace {

LinearCode small_code() { return code_from_json(read_json_file(HRMC_TEST_DATA "/f4_t3_k3.json")); }

}  // namespace

TEST_CASE("eigenvalue values") {
  const NegQContext ctx(2);
  CHECK(krawtchouk_Q(ctx, 1, 1, 3) == -11);
  for (std::int64_t t = 0; t <= 4; ++t)
    for (std::int64_t x = 0; x <= t; ++x) {
      CHECK(krawtchouk_Q(ctx, 0, x, t) == 1);
      CHECK(krawtchouk_C(ctx, 0, x, t) == 1);
      CHECK(krawtchouk_Q(ctx, x, 0, t) == xi(ctx, t, x));
      CHECK(krawtchouk_C(ctx, x, 0, t) == xi(ctx, t, x));
    }
  CHECK_THROWS_AS(krawtchouk_Q(ctx, 4, 0, 3), IndexOutOfRange);
  CHECK_THROWS_AS(krawtchouk_C(ctx, 0, -1, 3), IndexOutOfRange);
}

TEST_CASE("eigenvalues equal brute-force character sums") {
  struct Case {
    std::int64_t q, t;
  };
  for (const Case cs : {Case{2, 1}, Case{2, 2}, Case{2, 3}, Case{3, 1}, Case{3, 2}}) {
    const Field f = Field::for_q(static_cast<std::uint64_t>(cs.q));
    const NegQContext ctx(cs.q);
    for (std::int64_t x = 0; x <= cs.t; ++x)
      for (std::int64_t k = 0; k <= cs.t; ++k) {
        CAPTURE(cs.q);
        CAPTURE(cs.t);
        CAPTURE(x);
        CAPTURE(k);
        CHECK(krawtchouk_Q(ctx, k, x, cs.t) ==
              oracle::eigenvalue(f, static_cast<std::size_t>(cs.t), static_cast<std::size_t>(x),
                                 static_cast<std::size_t>(k)));
      }
  }
}

TEST_CASE("both eigenvalue routes agree and satisfy the recurrence") {
  for (std::int64_t q : {2, 3, 4}) {
    const NegQContext ctx(q);
    for (std::int64_t t = 0; t <= 5; ++t) {
      const auto table = eigen_table_Q(ctx, t);
      CHECK(table == eigen_table_C(ctx, t));
      CHECK(table.values.size() == static_cast<std::size_t>(t + 1));
    }
    for (std::int64_t t = 0; t < 5; ++t)
      for (std::int64_t x = 0; x <= t; ++x)
        for (std::int64_t k = 0; k <= t; ++k)
          CHECK(krawtchouk_Q(ctx, k + 1, x + 1, t + 1) ==
                krawtchouk_Q(ctx, k + 1, x, t + 1) + ctx.b_pow_int(static_cast<std::uint64_t>(2 * t + 1 - x)) *
                                                         krawtchouk_Q(ctx, k, x, t));
  }
}

TEST_CASE("transform of the small code") {
  const NegQContext ctx(2);
  const LinearCode c = small_code();
  const auto w = weight_distribution(c);
  const auto expected = weight_distribution(dual_code_brute_force(c));
  CHECK(macwilliams_eigen(ctx, w, 8, 3) == expected);
  CHECK(macwilliams_transform(ctx, w, 8, 3) == expected);
}

TEST_CASE("transform of trivial distributions") {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::int64_t t = 1; t <= 4; ++t) {
      WeightDistribution zero, omega;
      for (std::int64_t h = 0; h <= t; ++h) {
        zero.counts.emplace_back(h == 0);
        omega.counts.push_back(xi(ctx, t, h));
      }
      CHECK(macwilliams_eigen(ctx, zero, 1, t) == omega);
      CHECK(macwilliams_transform(ctx, zero, 1, t) == omega);
      CHECK(macwilliams_eigen(ctx, omega, omega.total(), t) == zero);
      CHECK(macwilliams_transform(ctx, omega, omega.total(), t) == zero);
    }
  }
  const NegQContext ctx(2);
  CHECK(macwilliams_transform(ctx, make_distribution({1, 1}), 2, 1) == make_distribution({1, 0}));
}

TEST_CASE("transform rejects bad input") {
  const NegQContext ctx(2);
  CHECK_THROWS_AS(macwilliams_eigen(ctx, make_distribution({1, 0, 3}), 4, 3), LengthMismatch);
  CHECK_THROWS_AS(macwilliams_eigen(ctx, make_distribution({1, 0, 3, 4}), 9, 3), InvalidArgument);
  CHECK_THROWS_AS(macwilliams_eigen(ctx, make_distribution({1, 2, 0, 0}), 3, 3), NonIntegralDual);
  CHECK_THROWS_AS(macwilliams_transform(ctx, make_distribution({1, 2, 0, 0}), 3, 3), NonIntegralDual);
}

TEST_CASE("random subcodes: identity, biduality, moments") {
  struct Case {
    std::int64_t q, t;
  };
  for (const Case cs : {Case{2, 2}, Case{3, 2}, Case{2, 3}}) {
    const Field f = Field::for_q(static_cast<std::uint64_t>(cs.q));
    const NegQContext ctx(cs.q);
    const BigInt space = oracle::ipow(cs.q, cs.t * cs.t);
    for (std::uint64_t i = 0; i < 10; ++i) {
      CAPTURE(cs.q);
      CAPTURE(cs.t);
      CAPTURE(i);
      Rng rng(21, 3, i);
      const LinearCode c = random_subcode(f, static_cast<std::size_t>(cs.t), rng);
      const LinearCode d = dual_code_brute_force(c);
      const auto w = weight_distribution(c);
      const auto wd = weight_distribution(d);
      CHECK(macwilliams_eigen(ctx, w, c.size(), cs.t) == wd);
      CHECK(macwilliams_transform(ctx, w, c.size(), cs.t) == wd);
      CHECK(macwilliams_transform(ctx, wd, d.size(), cs.t) == w);
      CHECK(c.size() * d.size() == space);
      for (std::int64_t phi = 0; phi <= cs.t; ++phi) {
        CHECK(moment_q(ctx, w, wd, d.size(), cs.t, phi).holds());
        CHECK(moment_qinv(ctx, w, wd, d.size(), cs.t, phi).holds());
        const auto dd = wd.min_distance();
        if (!dd || phi < static_cast<std::int64_t>(*dd)) {
          CHECK(moment_q(ctx, w, wd, d.size(), cs.t, phi).lhs == moment_q_low(ctx, d.size(), cs.t, phi));
          CHECK(moment_qinv(ctx, w, wd, d.size(), cs.t, phi).lhs == moment_qinv_low(ctx, d.size(), cs.t, phi));
        }
        // zero-sum form over C, which applies once phi passes the diameter of C-perp
        if (phi > static_cast<std::int64_t>(wd.diameter())) CHECK(moment_qinv_high(ctx, w, cs.t, phi) == 0);
      }
    }
  }
}

TEST_CASE("moments at phi = 0 reduce to the size identity") {
  const NegQContext ctx(2);
  const LinearCode c = small_code();
  const auto w = weight_distribution(c);
  const auto wd = weight_distribution(dual_code(c));
  const auto m = moment_q(ctx, w, wd, 64, 3, 0);
  CHECK(m.lhs == 8);
  CHECK(m.rhs == 8);
  for (std::int64_t phi = 0; phi <= 3; ++phi) {
    CHECK(moment_q(ctx, w, wd, 64, 3, phi).holds());
    CHECK(moment_qinv(ctx, w, wd, 64, 3, phi).holds());
  }
}

TEST_CASE("delta and epsilon closed forms") {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::int64_t lambda = 0; lambda <= 8; ++lambda)
      for (std::int64_t phi = 0; phi <= 6; ++phi) {
        CHECK(delta_fn(ctx, lambda, phi, 0) == gamma_rational(ctx, lambda, phi));
        for (std::int64_t j = 0; j <= 6; ++j) CHECK(delta_fn(ctx, lambda, phi, j) == delta_closed(ctx, lambda, phi, j));
        for (std::int64_t i = 0; i <= 6; ++i) CHECK(epsilon_fn(ctx, lambda, phi, i) == epsilon_closed(ctx, lambda, phi, i));
        if (phi <= lambda) CHECK(epsilon_fn(ctx, lambda, phi, 0) == BigRational(gauss(ctx, lambda, phi)));
      }
    for (std::int64_t j = 0; j <= 6; ++j) CHECK(delta_fn(ctx, 5, 0, j) == (j == 0 ? 1 : 0));
  }
  const NegQContext ctx(2);
  CHECK(delta_fn(ctx, 4, 2, 1) == delta_closed(ctx, 4, 2, 1));
  CHECK(epsilon_fn(ctx, 5, 2, 2) == epsilon_closed(ctx, 5, 2, 2));
  for (std::int64_t i = 0; i <= 4; ++i) CHECK(epsilon_closed(ctx, 4, 4, i) == (i % 2 ? -1 : 1) * ctx.b_pow(sigma(i)));
}

TEST_CASE("MHRD distributions") {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::int64_t t = 1; t <= 4; ++t) {
      const auto w = mhrd_distribution(ctx, t, 1, 1);
      for (std::int64_t h = 0; h <= t; ++h) CHECK(w[static_cast<std::size_t>(h)] == xi(ctx, t, h));
    }
  }
  const NegQContext ctx(2);
  CHECK(mhrd_distribution(ctx, 1, 1, 1) == make_distribution({1, 1}));
  CHECK(mhrd_distribution(ctx, 3, 3, 64) == make_distribution({1, 0, 0, 7}));
  const LinearCode c = code_from_json(read_json_file(HRMC_TEST_DATA "/f4_t3_mhrd_d3.json"));
  CHECK(weight_distribution(c) == mhrd_distribution(ctx, 3, 3, dual_code(c).size()));
  CHECK_THROWS_AS(mhrd_distribution(ctx, 3, 2, 4), EvenMinimumDistance);
  CHECK_THROWS_AS(mhrd_distribution(ctx, 3, 5, 1), InvalidArgument);
  CHECK_THROWS_AS(mhrd_distribution(ctx, 3, 3, 63), InvalidArgument);
}
