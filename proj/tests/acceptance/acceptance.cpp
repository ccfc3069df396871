// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hrmc/code_space.hpp"
#include "hrmc/io.hpp"
#include "hrmc/macwilliams.hpp"
#include "hrmc/negq_poly.hpp"
#include "hrmc/random.hpp"
#include "support/oracle.hpp"

using namespace hrmc;

namespace {

struct Tally {
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0 = untimed
  std::function<void(Tally&)> body;
};

std::string at(std::initializer_list<std::int64_t> v) {
  std::string s = "(";
  for (auto x : v) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

// Random-subcode corpus shared by criteria 9, 10 and 12.
struct Instance {
  std::int64_t q, t;
  BigInt size, dual_size;
  WeightDistribution c, c_dual;
};

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> out;
    for (const auto& [q, t] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 3}, {3, 2}}) {
      const Field f = Field::for_q(static_cast<std::uint64_t>(q));
      for (std::uint64_t i = 0; i < 50; ++i) {
        Rng rng(2024, 3, static_cast<std::uint64_t>(q * 100 + t) * 1000 + i);
        const LinearCode code = random_subcode(f, static_cast<std::size_t>(t), rng);
        const LinearCode dual = dual_code_brute_force(code);
        out.push_back({q, t, code.size(), dual.size(), weight_distribution(code), weight_distribution(dual)});
      }
    }
    return out;
  }();
  return instances;
}

LambdaPoly leibniz_q(const LambdaPoly& f, const LambdaPoly& g, std::int64_t phi) {
  const NegQContext& ctx = f.context();
  LambdaPoly sum(ctx);
  for (std::int64_t l = 0; l <= phi; ++l)
    sum = sum + BigRational(gauss(ctx, phi, l)) * ctx.b_pow((phi - l) * (f.degree() - l)) *
                    negq_product(negq_derivative(f, l), negq_derivative(g, phi - l));
  return sum;
}

LambdaPoly leibniz_qinv(const LambdaPoly& f, const LambdaPoly& g, std::int64_t phi) {
  const NegQContext& ctx = f.context();
  LambdaPoly sum(ctx);
  for (std::int64_t l = 0; l <= phi; ++l)
    sum = sum + BigRational(gauss(ctx, phi, l)) * ctx.b_pow(l * (g.degree() - phi + l)) *
                    negq_product(negq_inv_derivative(f, l), shift_lambda(negq_inv_derivative(g, phi - l), -l));
  return sum;
}

void ac1(Tally& t) {
  const auto census = rank_census(Field::for_q(2), 3);
  const NegQContext ctx(2);
  const std::vector<std::uint64_t> expected{1, 21, 210, 280};
  t.check(census == expected, "census != (1,21,210,280)");
  for (std::int64_t h = 0; h <= 3; ++h) t.check(xi(ctx, 3, h) == census[static_cast<std::size_t>(h)], "xi" + at({h}));
}

void ac2(Tally& t) {
  const NegQContext ctx(2);
  const LinearCode code = code_from_json(read_json_file(HRMC_TEST_DATA "/f4_t3_k3.json"));
  const auto c = weight_distribution(code);
  t.check(c == make_distribution({1, 0, 3, 4}), "code distribution");
  const LinearCode dual = dual_code_brute_force(code);
  t.check(dual.size() == 64, "dual size");
  const auto c_dual = weight_distribution(dual);
  t.check(macwilliams_eigen(ctx, c, code.size(), 3) == c_dual, "eigen route");
  t.check(macwilliams_transform(ctx, c, code.size(), 3) == c_dual, "transform route");
}

void ac3(Tally& t) {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::int64_t tt = 0; tt <= 5; ++tt) {
      const auto a = eigen_table_C(ctx, tt);
      const auto b = eigen_table_Q(ctx, tt);
      for (std::int64_t x = 0; x <= tt; ++x)
        for (std::int64_t k = 0; k <= tt; ++k)
          t.check(a.values[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] ==
                      b.values[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)],
                  "C!=Q at q,t,x,k=" + at({q, tt, x, k}));
    }
  }
}

void ac4(Tally& t) {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::int64_t tt = 0; tt + 1 <= 5; ++tt)
      for (std::int64_t x = 0; x <= tt; ++x)
        for (std::int64_t k = 0; k <= tt; ++k)
          t.check(krawtchouk_Q(ctx, k + 1, x + 1, tt + 1) ==
                      krawtchouk_Q(ctx, k + 1, x, tt + 1) +
                          ctx.b_pow_int(static_cast<std::uint64_t>(2 * tt + 1 - x)) * krawtchouk_Q(ctx, k, x, tt),
                  "recurrence q,t,x,k=" + at({q, tt, x, k}));
  }
}

void ac5(Tally& t) {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    LambdaPoly mp = LambdaPoly::constant(ctx);
    LambdaPoly vp = LambdaPoly::constant(ctx);
    for (std::int64_t k = 0; k <= 6; ++k) {
      if (k > 0) {
        mp = negq_product(mu(ctx), mp);
        vp = negq_product(nu(ctx), vp);
      }
      for (std::int64_t u = 0; u <= k; ++u) {
        t.check(mp.coeff(u, k) == BigRational(xi(ctx, k, u)), "mu^[t](t) vs xi at q,t,u=" + at({q, k, u}));
        const BigInt closed = ctx.b_pow_int(static_cast<std::uint64_t>(sigma(u))) * gauss(ctx, k, u);
        for (std::int64_t lambda = -3; lambda <= 8; ++lambda)
          t.check(vp.coeff(u, lambda) == BigRational(u % 2 ? BigInt(-closed) : closed),
                  "nu^[k] at q,k,u=" + at({q, k, u}));
      }
    }
  }
}

void ac6(Tally& t) {
  for (std::int64_t q : {2, 3, 4}) {
    const NegQContext ctx(q);
    const auto bq = [&](std::int64_t e) { return ctx.b_pow(e); };
    const auto g = [&](std::int64_t x, std::int64_t k) { return BigRational(gauss(ctx, x, k)); };
    for (std::int64_t x = 0; x <= 12; ++x) {
      for (std::int64_t k = 0; k <= x; ++k) {
        const auto tag = at({q, x, k});
        t.check(gauss(ctx, x, k) == oracle::gauss(-q, x, k), "recursion oracle " + tag);
        t.check(g(x, k) == g(x, x - k), "symmetry " + tag);
        if (k >= 1) {
          t.check(g(x, k) == g(x - 1, k) + bq(x - k) * g(x - 1, k - 1), "pascal-1 " + tag);
          t.check(g(x, k) == g(x - 1, k - 1) + bq(k) * g(x - 1, k), "pascal-2 " + tag);
          t.check((bq(k) - 1) * g(x, k) == (bq(x - k + 1) - 1) * g(x, k - 1), "fraction-k " + tag);
          t.check((bq(x - k) - 1) * g(x, k) == (bq(x) - 1) * g(x - 1, k), "fraction-x " + tag);
          t.check((bq(k) - 1) * g(x, k) == (bq(x) - 1) * g(x - 1, k - 1), "fraction-xk " + tag);
        }
        // gamma and beta
        BigRational alt = bq(sigma(k));
        for (std::int64_t i = 0; i < k; ++i) alt *= -bq(x - i) - 1;
        t.check(BigRational(gamma_fn(ctx, x, k)) == alt, "gamma product " + tag);
        t.check(gamma_fn(ctx, x, k + 1) == (-bq(x) - bq(k)) * BigRational(gamma_fn(ctx, x, k)), "gamma step " + tag);
        t.check(beta_fn(ctx, x, k) == gauss(ctx, x, k) * beta_fn(ctx, k, k), "beta gauss " + tag);
        t.check(beta_fn(ctx, x, x) == gauss(ctx, x, k) * beta_fn(ctx, k, k) * beta_fn(ctx, x - k, x - k),
                "beta split " + tag);
      }
      for (std::int64_t y : {-3, -1, 0, 2, 5}) {
        BigRational lhs = 1, expand = 0, newton = 0;
        for (std::int64_t i = 0; i < x; ++i) lhs *= BigRational(y) - bq(i);
        for (std::int64_t k = 0; k <= x; ++k) {
          const BigRational term = bq(sigma(x - k)) * g(x, k) * oracle::rpow(y, k);
          expand += (x - k) % 2 ? BigRational(-term) : term;
          BigRational prod = 1;
          for (std::int64_t i = 0; i < k; ++i) prod *= BigRational(y) - bq(i);
          newton += g(x, k) * prod;
        }
        t.check(lhs == expand, "product expansion " + at({q, x, y}));
        t.check(newton == oracle::rpow(y, x), "newton expansion " + at({q, x, y}));
      }
    }
    for (std::int64_t j = 0; j <= 12; ++j)
      for (std::int64_t i = 0; i <= j; ++i) {
        BigRational sum = 0;
        for (std::int64_t k = i; k <= j; ++k) {
          const BigRational term = bq(sigma(k - i)) * g(k, i) * g(j, k);
          sum += (k - i) % 2 ? BigRational(-term) : term;
        }
        t.check(sum == (i == j ? 1 : 0), "orthogonality " + at({q, i, j}));
      }
  }
}

void ac7(Tally& t) {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      Rng rng(7, 1, static_cast<std::uint64_t>(q) * 1000 + trial);
      const std::int64_t r = rng.between(0, 4);
      const std::int64_t s = rng.between(0, 4);
      const std::int64_t phi = rng.between(0, 4);
      const LambdaPoly f = random_lambda_poly(ctx, r, rng.next());
      const LambdaPoly g = random_lambda_poly(ctx, s, rng.next());
      const LambdaPoly fg = negq_product(f, g);
      const auto tag = at({q, static_cast<std::int64_t>(trial), r, s, phi});
      t.check(equal_on(negq_derivative(fg, phi), leibniz_q(f, g, phi), -3, 8), "q-rule " + tag);
      t.check(equal_on(negq_inv_derivative(fg, phi), leibniz_qinv(f, g, phi), -3, 8), "q^-1-rule " + tag);
    }
  }
}

void ac8(Tally& t) {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::int64_t j = 0; j <= 6; ++j)
      for (std::int64_t l = 0; l <= 6; ++l)
        for (std::int64_t lambda = -2; lambda <= 6; ++lambda)
          t.check(evaluate(negq_derivative(nu_poly(ctx, j), l), 1, 1, lambda) ==
                      (j == l ? BigRational(beta_fn(ctx, j, j)) : BigRational(0)),
                  "nu derivative at 1 " + at({q, j, l, lambda}));
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
      Rng rng(8, 2, static_cast<std::uint64_t>(q) * 1000 + trial);
      const LambdaPoly rho = random_lambda_poly(ctx, rng.between(0, 4), rng.next());
      for (std::int64_t s = 0; s <= 4; ++s) {
        const LambdaPoly prod = negq_product(rho, mu_poly(ctx, s));
        for (std::int64_t lambda = -2; lambda <= 6; ++lambda) {
          const BigRational sign = s % 2 ? -1 : 1;
          t.check(evaluate(prod, 1, 1, lambda) == sign * ctx.b_pow(lambda * s) * evaluate(rho, 1, 1, lambda),
                  "rho*mu at 1 " + at({q, static_cast<std::int64_t>(trial), s, lambda}));
        }
      }
    }
  }
}

void ac9(Tally& t) {
  for (const auto& in : corpus()) {
    const NegQContext ctx(in.q);
    const auto d_dual = in.c_dual.min_distance();
    for (std::int64_t phi = 0; phi <= in.t; ++phi) {
      const auto tag = at({in.q, in.t, phi});
      const auto mq = moment_q(ctx, in.c, in.c_dual, in.dual_size, in.t, phi);
      const auto mi = moment_qinv(ctx, in.c, in.c_dual, in.dual_size, in.t, phi);
      t.check(mq.holds(), "q-moment " + tag);
      t.check(mi.holds(), "q^-1-moment " + tag);
      if (!d_dual || phi < static_cast<std::int64_t>(*d_dual)) {
        t.check(mq.lhs == moment_q_low(ctx, in.dual_size, in.t, phi), "q-moment below d' " + tag);
        t.check(mi.lhs == moment_qinv_low(ctx, in.dual_size, in.t, phi), "q^-1-moment below d' " + tag);
      }
      if (phi > static_cast<std::int64_t>(in.c_dual.diameter()))
        t.check(moment_qinv_high(ctx, in.c, in.t, phi) == 0, "q^-1-moment above diameter " + tag);
    }
  }
}

void ac10(Tally& t) {
  for (const auto& in : corpus())
    t.check(in.size * in.dual_size == oracle::ipow(in.q, in.t * in.t), "size identity " + at({in.q, in.t}));
}

void ac11(Tally& t) {
  for (std::int64_t q : {2, 3}) {
    const NegQContext ctx(q);
    for (std::int64_t lambda = 0; lambda <= 8; ++lambda)
      for (std::int64_t phi = 0; phi <= 6; ++phi)
        for (std::int64_t j = 0; j <= 6; ++j) {
          t.check(delta_fn(ctx, lambda, phi, j) == delta_closed(ctx, lambda, phi, j), "delta " + at({q, lambda, phi, j}));
          t.check(epsilon_fn(ctx, lambda, phi, j) == epsilon_closed(ctx, lambda, phi, j),
                  "epsilon " + at({q, lambda, phi, j}));
        }
  }
}

void ac12(Tally& t) {
  for (const auto& [q, tt] : {std::pair<std::int64_t, std::int64_t>{2, 2}, {2, 3}, {3, 2}}) {
    const NegQContext ctx(q);
    const auto w = mhrd_distribution(ctx, tt, 1, 1);
    for (std::int64_t h = 0; h <= tt; ++h) t.check(w[static_cast<std::size_t>(h)] == xi(ctx, tt, h), "d=1 " + at({q, tt, h}));
  }
  for (const auto& in : corpus()) {
    const NegQContext ctx(in.q);
    const auto once = macwilliams_transform(ctx, in.c, in.size, in.t);
    t.check(once == in.c_dual, "transform " + at({in.q, in.t}));
    t.check(macwilliams_transform(ctx, once, in.dual_size, in.t) == in.c, "double transform " + at({in.q, in.t}));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rank census of H(2,3) by enumeration", 1.0, ac1},
      {2, "three-generator code and its dual", 0, ac2},
      {3, "eigenvalue routes agree, q in {2,3}, t <= 5", 5.0, ac3},
      {4, "eigenvalue recurrence, t <= 5", 0, ac4},
      {5, "mu and nu power closed forms, k <= 6", 0, ac5},
      {6, "gaussian, gamma and beta identities, x <= 12", 0, ac6},
      {7, "Leibniz rules on 100 random pairs per q", 0, ac7},
      {8, "evaluation lemmas at X = Y = 1", 0, ac8},
      {9, "moment identities on 150 random subcodes", 120.0, ac9},
      {10, "size identity on the subcode corpus", 0, ac10},
      {11, "delta and epsilon closed forms", 0, ac11},
      {12, "MHRD with d = 1 and double transform", 0, ac12},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body(tally);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = c.budget_seconds == 0 || secs < c.budget_seconds;
    const bool ok = error.empty() && tally.total > 0 && tally.passed == tally.total && in_budget;
    failed += !ok;
    std::printf("[%s] AC%-2d %-48s %llu/%llu checks, %.3f s", ok ? "PASS" : "FAIL", c.id, c.title,
                static_cast<unsigned long long>(tally.passed), static_cast<unsigned long long>(tally.total), secs);
    if (c.budget_seconds > 0) std::printf(" (limit %.0f s)", c.budget_seconds);
    if (!error.empty()) std::printf("  error: %s", error.c_str());
    if (!tally.first_failure.empty()) std::printf("  first failure: %s", tally.first_failure.c_str());
    std::printf("\n");
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
