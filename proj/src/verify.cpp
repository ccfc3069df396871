#include "hrmc/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "hrmc/code_space.hpp"
#include "hrmc/errors.hpp"
#include "hrmc/macwilliams.hpp"
#include "hrmc/negq_poly.hpp"
#include "hrmc/parallel.hpp"
#include "hrmc/random.hpp"

namespace hrmc {

namespace {

constexpr std::size_t kMaxRecordedFailures = 5;

constexpr std::uint64_t kLeibnizStream = 1;
constexpr std::uint64_t kEvaluationStream = 2;
constexpr std::uint64_t kSubcodeStream = 3;

std::string label(std::initializer_list<std::pair<const char*, std::int64_t>> args) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : args) {
    os << (first ? "" : " ") << name << "=" << value;
    first = false;
  }
  return os.str();
}

// Runs body, turning an escaped exception into one failed check.
void guarded(SuiteResult& suite, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    suite.check(false, std::string("error: ") + e.what());
  }
}

void merge(SuiteResult& into, const SuiteResult& from) {
  into.passed += from.passed;
  into.total += from.total;
  for (const auto& f : from.failures)
    if (into.failures.size() < kMaxRecordedFailures) into.failures.push_back(f);
}

BigRational bq(const NegQContext& ctx, std::int64_t e) { return ctx.b_pow(e); }

SuiteResult gauss_identities(const NegQContext& ctx) {
  SuiteResult s{"gauss-identities"};
  guarded(s, [&] {
    const std::int64_t n = 12;
    for (std::int64_t x = 0; x <= n; ++x) {
      for (std::int64_t k = 0; k <= x; ++k) {
        const BigInt g = gauss(ctx, x, k);
        s.check(g == gauss(ctx, x, x - k), "symmetry " + label({{"x", x}, {"k", k}}));
        for (std::int64_t i = 0; i <= x; ++i) {
          s.check(gauss(ctx, x, i) * gauss(ctx, x - i, k) ==
                      gauss(ctx, x, k) * gauss(ctx, x - k, i),
                  "exchange " + label({{"x", x}, {"i", i}, {"k", k}}));
        }
        if (x >= 1 && k >= 1) {
          s.check(BigRational(g) == BigRational(gauss(ctx, x - 1, k)) +
                                        bq(ctx, x - k) * BigRational(gauss(ctx, x - 1, k - 1)),
                  "pascal-1 " + label({{"x", x}, {"k", k}}));
          s.check(BigRational(g) == BigRational(gauss(ctx, x - 1, k - 1)) +
                                        bq(ctx, k) * BigRational(gauss(ctx, x - 1, k)),
                  "pascal-2 " + label({{"x", x}, {"k", k}}));
          s.check((bq(ctx, k) - 1) * BigRational(g) == (bq(ctx, x - k + 1) - 1) * BigRational(gauss(ctx, x, k - 1)),
                  "fraction-k " + label({{"x", x}, {"k", k}}));
          s.check((bq(ctx, x - k) - 1) * BigRational(g) ==
                      (bq(ctx, x) - 1) * BigRational(gauss(ctx, x - 1, k)),
                  "fraction-x " + label({{"x", x}, {"k", k}}));
          s.check((bq(ctx, k) - 1) * BigRational(g) == (bq(ctx, x) - 1) * BigRational(gauss(ctx, x - 1, k - 1)),
                  "fraction-xk " + label({{"x", x}, {"k", k}}));
        }
      }
      for (std::int64_t y : {-3, -1, 0, 2, 5}) {
        const BigInt yy(y);
        BigInt lhs = 1;
        for (std::int64_t i = 0; i < x; ++i) lhs *= yy - ctx.b_pow_int(static_cast<std::uint64_t>(i));
        BigInt expand = 0;
        BigInt vandermonde = 0;
        for (std::int64_t k = 0; k <= x; ++k) {
          BigInt term = ctx.b_pow_int(static_cast<std::uint64_t>(sigma(x - k))) * gauss(ctx, x, k) *
                        pow_int(yy, static_cast<std::uint64_t>(k));
          expand += ((x - k) % 2) ? BigInt(-term) : term;
          BigInt prod = 1;
          for (std::int64_t i = 0; i < k; ++i) prod *= yy - ctx.b_pow_int(static_cast<std::uint64_t>(i));
          vandermonde += gauss(ctx, x, k) * prod;
        }
        s.check(lhs == expand, "product-expansion " + label({{"x", x}, {"y", y}}));
        s.check(vandermonde == pow_int(yy, static_cast<std::uint64_t>(x)), "vandermonde " + label({{"x", x}, {"y", y}}));
      }
    }
    for (std::int64_t j = 0; j <= n; ++j) {
      for (std::int64_t i = 0; i <= j; ++i) {
        BigInt sum = 0;
        for (std::int64_t k = i; k <= j; ++k) {
          BigInt term = ctx.b_pow_int(static_cast<std::uint64_t>(sigma(k - i))) * gauss(ctx, k, i) * gauss(ctx, j, k);
          sum += ((k - i) % 2) ? BigInt(-term) : term;
        }
        s.check(sum == (i == j ? 1 : 0), "orthogonality " + label({{"i", i}, {"j", j}}));
      }
    }
  });
  return s;
}

SuiteResult gamma_beta(const NegQContext& ctx) {
  SuiteResult s{"gamma-beta"};
  guarded(s, [&] {
    for (std::int64_t x = 0; x <= 12; ++x) {
      for (std::int64_t k = 0; k <= x; ++k) {
        const BigInt g = gamma_fn(ctx, x, k);
        BigRational alt = ctx.b_pow(sigma(k));
        for (std::int64_t i = 0; i < k; ++i) alt *= -ctx.b_pow(x - i) - 1;
        s.check(BigRational(g) == alt, "gamma-product " + label({{"x", x}, {"k", k}}));
        if (k >= 1) {
          s.check(g == ctx.b_pow_int(static_cast<std::uint64_t>(k - 1)) *
                           (-ctx.b_pow_int(static_cast<std::uint64_t>(x)) - 1) * gamma_fn(ctx, x - 1, k - 1),
                  "gamma-stepdown " + label({{"x", x}, {"k", k}}));
        }
        s.check(gamma_fn(ctx, x, k + 1) ==
                    (-ctx.b_pow_int(static_cast<std::uint64_t>(x)) - ctx.b_pow_int(static_cast<std::uint64_t>(k))) * g,
                "gamma-step " + label({{"x", x}, {"k", k}}));
        const BigInt beta = beta_fn(ctx, x, k);
        s.check(beta == gauss(ctx, x, k) * beta_fn(ctx, k, k), "beta-gauss " + label({{"x", x}, {"k", k}}));
        s.check(beta_fn(ctx, x, x) == gauss(ctx, x, k) * beta_fn(ctx, k, k) * beta_fn(ctx, x - k, x - k),
                "beta-split " + label({{"x", x}, {"k", k}}));
        s.check(beta * beta_fn(ctx, x - k, 1) == beta_fn(ctx, x, k + 1), "beta-step " + label({{"x", x}, {"k", k}}));
      }
    }
  });
  return s;
}

SuiteResult census(const NegQContext& ctx, const Field& field, std::int64_t t, const VerifyOptions& opts) {
  SuiteResult s{"rank-census"};
  guarded(s, [&] {
    for (std::int64_t tt = 1; tt <= t; ++tt) {
      const auto counts = rank_census(field, static_cast<std::size_t>(tt), opts.workers, opts.guard);
      BigInt total = 0;
      for (std::int64_t h = 0; h <= tt; ++h) {
        s.check(BigInt(counts[static_cast<std::size_t>(h)]) == xi(ctx, tt, h), "census " + label({{"t", tt}, {"h", h}}));
        total += xi(ctx, tt, h);
      }
      s.check(total == pow_int(BigInt(ctx.q()), static_cast<std::uint64_t>(tt * tt)), "xi-sum " + label({{"t", tt}}));
    }
  });
  return s;
}

SuiteResult eigenvalues(const NegQContext& ctx, std::int64_t t) {
  SuiteResult s{"eigenvalues"};
  guarded(s, [&] {
    for (std::int64_t tt = 0; tt <= t; ++tt) {
      const EigenTable q_table = eigen_table_Q(ctx, tt);
      const EigenTable c_table = eigen_table_C(ctx, tt);
      for (std::int64_t x = 0; x <= tt; ++x) {
        for (std::int64_t k = 0; k <= tt; ++k) {
          const BigInt& v = q_table.values[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)];
          s.check(v == c_table.values[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)],
                  "C=Q " + label({{"t", tt}, {"x", x}, {"k", k}}));
        }
        s.check(q_table.values[static_cast<std::size_t>(x)][0] == 1, "Q_0=1 " + label({{"t", tt}, {"x", x}}));
        s.check(q_table.values[0][static_cast<std::size_t>(x)] == xi(ctx, tt, x), "Q_k(0)=xi " + label({{"t", tt}, {"k", x}}));
      }
    }
  });
  return s;
}

SuiteResult recurrence(const NegQContext& ctx, std::int64_t t) {
  SuiteResult s{"recurrence"};
  guarded(s, [&] {
    for (std::int64_t tt = 0; tt + 1 <= std::max<std::int64_t>(t, 1); ++tt) {
      for (std::int64_t x = 0; x <= tt; ++x) {
        for (std::int64_t k = 0; k <= tt; ++k) {
          s.check(krawtchouk_Q(ctx, k + 1, x + 1, tt + 1) ==
                      krawtchouk_Q(ctx, k + 1, x, tt + 1) +
                          ctx.b_pow_int(static_cast<std::uint64_t>(2 * tt + 1 - x)) * krawtchouk_Q(ctx, k, x, tt),
                  "recurrence " + label({{"t", tt}, {"x", x}, {"k", k}}));
        }
      }
    }
  });
  return s;
}

SuiteResult closed_forms(const NegQContext& ctx) {
  SuiteResult s{"closed-forms"};
  guarded(s, [&] {
    const std::int64_t n = 6;
    const LambdaPoly m = mu(ctx);
    const LambdaPoly v = nu(ctx);
    std::vector<LambdaPoly> mp{LambdaPoly::constant(ctx)};
    std::vector<LambdaPoly> vp{LambdaPoly::constant(ctx)};
    for (std::int64_t k = 1; k <= n; ++k) {
      mp.push_back(negq_product(m, mp.back()));
      vp.push_back(negq_product(v, vp.back()));
    }
    for (std::int64_t k = 0; k <= n; ++k) {
      s.check(equal_on(mp[static_cast<std::size_t>(k)], mu_poly(ctx, k), -3, 8), "mu-power " + label({{"k", k}}));
      s.check(equal_on(vp[static_cast<std::size_t>(k)], nu_poly(ctx, k), -3, 8), "nu-power " + label({{"k", k}}));
      for (std::int64_t u = 0; u <= k; ++u) {
        s.check(mu_poly(ctx, k).coeff(u, k) == BigRational(xi(ctx, k, u)), "mu-xi " + label({{"t", k}, {"u", u}}));
      }
    }
    for (std::int64_t i = 1; i <= n; ++i) {
      for (std::int64_t j = 1; i + j <= n; ++j) {
        for (std::int64_t k = 1; i + j + k <= n; ++k) {
          for (const auto* pw : {&mp, &vp}) {
            const auto& p = *pw;
            const auto& a = p[static_cast<std::size_t>(i)];
            const auto& b = p[static_cast<std::size_t>(j)];
            const auto& c = p[static_cast<std::size_t>(k)];
            s.check(equal_on(negq_product(negq_product(a, b), c), negq_product(a, negq_product(b, c)), -3, 8),
                    std::string(pw == &mp ? "mu" : "nu") + "-associativity " + label({{"i", i}, {"j", j}, {"k", k}}));
          }
        }
      }
    }
  });
  return s;
}

SuiteResult derivatives(const NegQContext& ctx) {
  SuiteResult s{"derivatives"};
  guarded(s, [&] {
    for (std::int64_t k = 0; k <= 5; ++k) {
      for (std::int64_t phi = 0; phi <= k; ++phi) {
        const BigRational beta = beta_rational(ctx, k, phi);
        s.check(equal_on(negq_derivative(mu_poly(ctx, k), phi), beta * mu_poly(ctx, k - phi)),
                "mu-derivative " + label({{"k", k}, {"phi", phi}}));
        s.check(equal_on(negq_derivative(nu_poly(ctx, k), phi), beta * nu_poly(ctx, k - phi)),
                "nu-derivative " + label({{"k", k}, {"phi", phi}}));
        const BigRational sign = phi % 2 ? -1 : 1;
        s.check(equal_on(negq_inv_derivative(nu_poly(ctx, k), phi), sign * beta * nu_poly(ctx, k - phi)),
                "nu-inv-derivative " + label({{"k", k}, {"phi", phi}}));
        const LambdaPoly shifted = shift_lambda(mu_poly(ctx, k - phi), -phi);
        const LambdaPoly expected(ctx, k - phi, [ctx, shifted, beta, phi](std::int64_t i, std::int64_t l) {
          return BigRational(ctx.b_pow(-sigma(phi)) * beta * gamma_rational(ctx, l, phi) * shifted.coeff(i, l));
        });
        s.check(equal_on(negq_inv_derivative(mu_poly(ctx, k), phi), expected),
                "mu-inv-derivative " + label({{"k", k}, {"phi", phi}}));
      }
    }
  });
  return s;
}

LambdaPoly leibniz_q_rhs(const LambdaPoly& f, const LambdaPoly& g, std::int64_t phi) {
  const NegQContext& ctx = f.context();
  LambdaPoly sum(ctx);
  for (std::int64_t l = 0; l <= phi; ++l) {
    const BigRational c = BigRational(gauss(ctx, phi, l)) * ctx.b_pow((phi - l) * (f.degree() - l));
    sum = sum + c * negq_product(negq_derivative(f, l), negq_derivative(g, phi - l));
  }
  return sum;
}

LambdaPoly leibniz_qinv_rhs(const LambdaPoly& f, const LambdaPoly& g, std::int64_t phi) {
  const NegQContext& ctx = f.context();
  LambdaPoly sum(ctx);
  for (std::int64_t l = 0; l <= phi; ++l) {
    const BigRational c = BigRational(gauss(ctx, phi, l)) * ctx.b_pow(l * (g.degree() - phi + l));
    sum = sum + c * negq_product(negq_inv_derivative(f, l), shift_lambda(negq_inv_derivative(g, phi - l), -l));
  }
  return sum;
}

// u with its coefficient at `index` forced to zero.
LambdaPoly vanish_at(const LambdaPoly& u, std::int64_t index) {
  return {u.context(), u.degree(), [u, index](std::int64_t i, std::int64_t l) {
            return i == index ? BigRational(0) : u.coeff(i, l);
          }};
}

SuiteResult leibniz(const NegQContext& ctx, const VerifyOptions& opts, SuiteResult& lemmas) {
  SuiteResult s{"leibniz"};
  guarded(s, [&] {
    for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
      Rng rng(opts.seed, kLeibnizStream, trial);
      const std::int64_t r = rng.between(0, 4);
      const std::int64_t sd = rng.between(0, 4);
      const std::int64_t phi = rng.between(0, 4);
      const std::uint64_t f_seed = rng.next();
      const std::uint64_t g_seed = rng.next();
      const LambdaPoly f = random_lambda_poly(ctx, r, f_seed);
      const LambdaPoly g = random_lambda_poly(ctx, sd, g_seed);
      const LambdaPoly fg = negq_product(f, g);
      const auto tag = label({{"trial", static_cast<std::int64_t>(trial)}, {"r", r}, {"s", sd}, {"phi", phi}});
      s.check(equal_on(negq_derivative(fg, phi), leibniz_q_rhs(f, g, phi), -2, 6), "q-rule " + tag);
      s.check(equal_on(negq_inv_derivative(fg, phi), leibniz_qinv_rhs(f, g, phi), -2, 6), "q-inverse-rule " + tag);

      // the division lemmas need degree >= 1 on both sides
      guarded(lemmas, [&] {
        const std::int64_t r1 = std::max<std::int64_t>(r, 1);
        const std::int64_t s1 = std::max<std::int64_t>(sd, 1);
        const LambdaPoly f1 = random_lambda_poly(ctx, r1, f_seed);
        const LambdaPoly g1 = random_lambda_poly(ctx, s1, g_seed);
        const BigRational b(ctx.b());
        const LambdaPoly ur = vanish_at(f1, r1);
        const LambdaPoly vs = vanish_at(g1, s1);
        const LambdaPoly u0 = vanish_at(f1, 0);
        const LambdaPoly v0 = vanish_at(g1, 0);
        lemmas.check(equal_on(divide_by_x(negq_product(ur, g1)), negq_product(divide_by_x(ur), g1), -2, 6), "u_r=0 " + tag);
        lemmas.check(equal_on(divide_by_x(negq_product(f1, vs)), negq_product(scale_y(f1, b), divide_by_x(vs)), -2, 6),
                     "v_s=0 " + tag);
        lemmas.check(equal_on(divide_by_y(negq_product(u0, g1)),
                              ctx.b_pow(s1) * negq_product(divide_by_y(u0), shift_lambda(g1, -1)), -2, 6),
                     "u_0=0 " + tag);
        lemmas.check(equal_on(divide_by_y(negq_product(f1, v0)), negq_product(scale_y(f1, b), divide_by_y(v0)), -2, 6),
                     "v_0=0 " + tag);
      });
    }
  });
  return s;
}

SuiteResult evaluation(const NegQContext& ctx, const VerifyOptions& opts) {
  SuiteResult s{"evaluation"};
  guarded(s, [&] {
    for (std::int64_t j = 0; j <= 6; ++j) {
      for (std::int64_t l = 0; l <= 6; ++l) {
        for (std::int64_t lambda = -2; lambda <= 6; lambda += 4) {
          const BigRational v = evaluate(negq_derivative(nu_poly(ctx, j), l), 1, 1, lambda);
          s.check(v == (j == l ? beta_rational(ctx, j, j) : BigRational(0)),
                  "nu-derivative-at-1 " + label({{"j", j}, {"l", l}, {"lambda", lambda}}));
        }
      }
    }
    for (std::uint64_t trial = 0; trial < opts.trials; ++trial) {
      Rng rng(opts.seed, kEvaluationStream, trial);
      const std::int64_t deg = rng.between(0, 4);
      const std::int64_t sp = rng.between(0, 4);
      const LambdaPoly rho = random_lambda_poly(ctx, deg, rng.next());
      const LambdaPoly prod = negq_product(rho, mu_poly(ctx, sp));
      for (std::int64_t lambda = -2; lambda <= 6; ++lambda) {
        const BigRational sign = sp % 2 ? -1 : 1;
        s.check(evaluate(prod, 1, 1, lambda) == sign * ctx.b_pow(lambda * sp) * evaluate(rho, 1, 1, lambda),
                "rho-mu " + label({{"trial", static_cast<std::int64_t>(trial)}, {"lambda", lambda}}));
      }
    }
  });
  return s;
}

SuiteResult delta_epsilon(const NegQContext& ctx) {
  SuiteResult s{"delta-epsilon"};
  guarded(s, [&] {
    for (std::int64_t lambda = 0; lambda <= 8; ++lambda) {
      for (std::int64_t phi = 0; phi <= 6; ++phi) {
        for (std::int64_t j = 0; j <= 6; ++j) {
          s.check(delta_fn(ctx, lambda, phi, j) == delta_closed(ctx, lambda, phi, j),
                  "delta " + label({{"lambda", lambda}, {"phi", phi}, {"j", j}}));
          s.check(epsilon_fn(ctx, lambda, phi, j) == epsilon_closed(ctx, lambda, phi, j),
                  "epsilon " + label({{"Lambda", lambda}, {"phi", phi}, {"i", j}}));
        }
      }
    }
  });
  return s;
}

struct CorpusResult {
  SuiteResult macwilliams{"macwilliams"};
  SuiteResult duality{"duality"};
  SuiteResult moments{"moments"};
  SuiteResult mhrd{"mhrd"};
};

void check_subcode(const NegQContext& ctx, const LinearCode& code, const VerifyOptions& opts, CorpusResult& out,
                   const std::string& tag) {
  const std::int64_t t = static_cast<std::int64_t>(code.t());
  const EnumerationOptions enum_opts{opts.guard, 1};
  const WeightDistribution c = weight_distribution(code, enum_opts);
  const LinearCode dual = dual_code(code);
  const WeightDistribution c_dual = weight_distribution(dual, enum_opts);
  const BigInt size = code.size();
  const BigInt dual_size = dual.size();

  guarded(out.macwilliams, [&] {
    const WeightDistribution eig = macwilliams_eigen(ctx, c, size, t);
    const WeightDistribution tr = macwilliams_transform(ctx, c, size, t);
    out.macwilliams.check(eig == tr, "routes agree " + tag);
    out.macwilliams.check(eig == c_dual, "matches enumerated dual " + tag);
    out.macwilliams.check(macwilliams_transform(ctx, tr, dual_size, t) == c, "double transform " + tag);
  });
  guarded(out.duality, [&] {
    out.duality.check(size * dual_size == pow_int(BigInt(ctx.q()), static_cast<std::uint64_t>(t * t)), "size identity " + tag);
    out.duality.check(dual_code(dual) == code, "biduality " + tag);
    out.duality.check(dual_code_brute_force(code, enum_opts) == dual, "brute-force dual " + tag);
  });
  guarded(out.moments, [&] {
    const std::size_t d_dual = c_dual.min_distance().value_or(code.t() + 1);
    const std::size_t diam_dual = c_dual.diameter();
    for (std::int64_t phi = 0; phi <= t; ++phi) {
      const auto ptag = tag + " phi=" + std::to_string(phi);
      const MomentPair mq = moment_q(ctx, c, c_dual, dual_size, t, phi);
      const MomentPair mi = moment_qinv(ctx, c, c_dual, dual_size, t, phi);
      out.moments.check(mq.holds(), "moment-q " + ptag);
      out.moments.check(mi.holds(), "moment-qinv " + ptag);
      if (static_cast<std::size_t>(phi) < d_dual) {
        out.moments.check(mq.lhs == moment_q_low(ctx, dual_size, t, phi), "moment-q below d' " + ptag);
        out.moments.check(mi.lhs == moment_qinv_low(ctx, dual_size, t, phi), "moment-qinv below d' " + ptag);
      }
      if (static_cast<std::size_t>(phi) > diam_dual) {
        out.moments.check(moment_qinv_high(ctx, c, t, phi) == 0, "moment-qinv above diameter' " + ptag);
      }
    }
  });
  guarded(out.mhrd, [&] {
    if (code.dimension() == 0) return;
    const SingletonResult sr = singleton_check(code, enum_opts);
    if (sr.is_mhrd && sr.min_distance % 2 == 1) {
      out.mhrd.check(mhrd_distribution(ctx, t, static_cast<std::int64_t>(sr.min_distance), dual_size) == c,
                     "mhrd formula " + tag + " d=" + std::to_string(sr.min_distance));
    }
  });
}

}  // namespace

void SuiteResult::check(bool condition, const std::string& what) {
  ++total;
  if (condition) {
    ++passed;
  } else if (failures.size() < kMaxRecordedFailures) {
    failures.push_back(what);
  }
}

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
  const NegQContext ctx(opts.q);
  const Field field = Field::for_q(static_cast<std::uint64_t>(opts.q));
  const std::int64_t t = opts.t;
  if (t < 1) throw InvalidArgument("t must be at least 1");

  std::vector<SuiteResult> out;
  out.push_back(gauss_identities(ctx));
  out.push_back(gamma_beta(ctx));
  out.push_back(census(ctx, field, t, opts));
  out.push_back(eigenvalues(ctx, t));
  out.push_back(recurrence(ctx, t));
  out.push_back(closed_forms(ctx));
  out.push_back(derivatives(ctx));
  SuiteResult lemmas{"product-lemmas"};
  out.push_back(leibniz(ctx, opts, lemmas));
  out.push_back(lemmas);
  out.push_back(evaluation(ctx, opts));
  out.push_back(delta_epsilon(ctx));

  // Random-subcode corpus: one RNG per instance, merged in instance order.
  std::vector<CorpusResult> per_instance(opts.trials);
  parallel_chunks(opts.trials, opts.workers, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      CorpusResult& r = per_instance[i];
      const std::string tag = "subcode#" + std::to_string(i);
      guarded(r.macwilliams, [&] {
        Rng rng(opts.seed, kSubcodeStream, i);
        const LinearCode code = random_subcode(field, static_cast<std::size_t>(t), rng);
        check_subcode(ctx, code, opts, r, tag);
      });
    }
  });
  CorpusResult corpus;
  for (const auto& r : per_instance) {
    merge(corpus.macwilliams, r.macwilliams);
    merge(corpus.duality, r.duality);
    merge(corpus.moments, r.moments);
    merge(corpus.mhrd, r.mhrd);
  }
  corpus.mhrd.check(mhrd_distribution(ctx, t, 1, 1).counts == [&] {
    std::vector<BigInt> v;
    for (std::int64_t h = 0; h <= t; ++h) v.push_back(xi(ctx, t, h));
    return v;
  }(), "d=1 reproduces xi");
  out.push_back(corpus.macwilliams);
  out.push_back(corpus.duality);
  out.push_back(corpus.moments);
  out.push_back(corpus.mhrd);
  return out;
}

}  // namespace hrmc
