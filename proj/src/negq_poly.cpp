#include "hrmc/negq_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "hrmc/errors.hpp"

namespace hrmc {

struct LambdaPoly::Impl {
  Impl(NegQContext c, std::int64_t d, CoeffFn f) : ctx(std::move(c)), degree(d), fn(std::move(f)) {}

  NegQContext ctx;
  std::int64_t degree;
  CoeffFn fn;
  mutable std::shared_mutex mutex;
  mutable std::map<std::pair<std::int64_t, std::int64_t>, BigRational> memo;
};

LambdaPoly::LambdaPoly(NegQContext ctx) : impl_(std::make_shared<Impl>(std::move(ctx), -1, CoeffFn{})) {}

LambdaPoly::LambdaPoly(NegQContext ctx, std::int64_t degree, CoeffFn fn)
    : impl_(std::make_shared<Impl>(std::move(ctx), degree < 0 ? -1 : degree, std::move(fn))) {}

LambdaPoly LambdaPoly::constant(const NegQContext& ctx, BigRational c) {
  return {ctx, 0, [c](std::int64_t, std::int64_t) { return c; }};
}

LambdaPoly LambdaPoly::monomial(const NegQContext& ctx, std::int64_t x_exp, std::int64_t y_exp, BigRational c) {
  if (x_exp < 0 || y_exp < 0) throw InvalidArgument("monomial exponents must be non-negative");
  return {ctx, x_exp + y_exp, [c, y_exp](std::int64_t i, std::int64_t) { return i == y_exp ? c : BigRational(0); }};
}

LambdaPoly LambdaPoly::from_concrete(const NegQContext& ctx, const ConcretePoly& p) {
  auto coeffs = p.coefficients;
  return {ctx, p.degree(), [coeffs](std::int64_t i, std::int64_t) { return BigRational(coeffs[static_cast<std::size_t>(i)]); }};
}

std::int64_t LambdaPoly::degree() const { return impl_->degree; }
const NegQContext& LambdaPoly::context() const { return impl_->ctx; }

BigRational LambdaPoly::coeff(std::int64_t i, std::int64_t lambda) const {
  const Impl& p = *impl_;
  if (i < 0 || i > p.degree) return 0;
  const auto key = std::make_pair(i, lambda);
  {
    std::shared_lock lock(p.mutex);
    auto it = p.memo.find(key);
    if (it != p.memo.end()) return it->second;
  }
  BigRational value = p.fn(i, lambda);
  std::unique_lock lock(p.mutex);
  p.memo.emplace(key, value);
  return value;
}

std::vector<BigRational> LambdaPoly::coefficients(std::int64_t lambda) const {
  std::vector<BigRational> out;
  for (std::int64_t i = 0; i <= degree(); ++i) out.push_back(coeff(i, lambda));
  return out;
}

namespace {

void require_same_context(const LambdaPoly& a, const LambdaPoly& b) {
  if (!(a.context() == b.context())) {
    throw ContextMismatch("polynomials use q = " + std::to_string(a.context().q()) + " and q = " +
                          std::to_string(b.context().q()));
  }
}

LambdaPoly combine(const LambdaPoly& a, const LambdaPoly& b, bool subtract) {
  require_same_context(a, b);
  if (a.empty() && b.empty()) return a;
  if (!a.empty() && !b.empty() && a.degree() != b.degree()) {
    throw DimensionMismatch("cannot add homogeneous polynomials of degrees " + std::to_string(a.degree()) + " and " +
                            std::to_string(b.degree()));
  }
  const std::int64_t d = std::max(a.degree(), b.degree());
  return {a.context(), d, [a, b, subtract](std::int64_t i, std::int64_t l) {
            return subtract ? a.coeff(i, l) - b.coeff(i, l) : a.coeff(i, l) + b.coeff(i, l);
          }};
}

}  // namespace

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) { return combine(a, b, false); }
LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) { return combine(a, b, true); }

LambdaPoly operator-(const LambdaPoly& a) {
  if (a.empty()) return a;
  return {a.context(), a.degree(), [a](std::int64_t i, std::int64_t l) { return BigRational(-a.coeff(i, l)); }};
}

LambdaPoly operator*(const BigRational& c, const LambdaPoly& a) {
  if (a.empty()) return a;
  return {a.context(), a.degree(), [a, c](std::int64_t i, std::int64_t l) { return BigRational(c * a.coeff(i, l)); }};
}

LambdaPoly shift_lambda(const LambdaPoly& f, std::int64_t delta) {
  if (f.empty()) return f;
  return {f.context(), f.degree(), [f, delta](std::int64_t i, std::int64_t l) { return f.coeff(i, l + delta); }};
}

LambdaPoly scale_y(const LambdaPoly& f, const BigRational& c) {
  if (f.empty()) return f;
  return {f.context(), f.degree(), [f, c](std::int64_t i, std::int64_t l) {
            BigRational ci = 1;
            for (std::int64_t k = 0; k < i; ++k) ci *= c;
            return BigRational(ci * f.coeff(i, l));
          }};
}

LambdaPoly divide_by_x(const LambdaPoly& f) {
  if (f.degree() < 1) return LambdaPoly(f.context());
  return {f.context(), f.degree() - 1, [f](std::int64_t i, std::int64_t l) { return f.coeff(i, l); }};
}

LambdaPoly divide_by_y(const LambdaPoly& f) {
  if (f.degree() < 1) return LambdaPoly(f.context());
  return {f.context(), f.degree() - 1, [f](std::int64_t i, std::int64_t l) { return f.coeff(i + 1, l); }};
}

LambdaPoly negq_product(const LambdaPoly& a, const LambdaPoly& g) {
  require_same_context(a, g);
  if (a.empty() || g.empty()) return LambdaPoly(a.context());
  const std::int64_t r = a.degree();
  const std::int64_t s = g.degree();
  return {a.context(), r + s, [a, g, r, s](std::int64_t u, std::int64_t l) {
            const NegQContext& ctx = a.context();
            BigRational c = 0;
            for (std::int64_t i = std::max<std::int64_t>(0, u - s); i <= std::min(u, r); ++i) {
              c += ctx.b_pow(i * s) * a.coeff(i, l) * g.coeff(u - i, l - i);
            }
            return c;
          }};
}

LambdaPoly negq_power(const LambdaPoly& a, std::int64_t k) {
  if (k < 0) throw InvalidArgument("negative-q power needs k >= 0");
  LambdaPoly result = LambdaPoly::constant(a.context());
  for (std::int64_t i = 0; i < k; ++i) result = negq_product(a, result);
  return result;
}

LambdaPoly negq_transform(const ConcretePoly& a, const LambdaPoly& x_sub, const LambdaPoly& y_sub) {
  require_same_context(x_sub, y_sub);
  const NegQContext& ctx = x_sub.context();
  const std::int64_t r = a.degree();
  if (r < 0) return LambdaPoly(ctx);
  if (r > 0 && x_sub.degree() != y_sub.degree()) {
    throw DimensionMismatch("transform substituends must have equal degree");
  }
  std::vector<LambdaPoly> x_pow{LambdaPoly::constant(ctx)};
  std::vector<LambdaPoly> y_pow{LambdaPoly::constant(ctx)};
  for (std::int64_t i = 1; i <= r; ++i) {
    x_pow.push_back(negq_product(x_sub, x_pow.back()));
    y_pow.push_back(negq_product(y_sub, y_pow.back()));
  }
  LambdaPoly sum(ctx);
  for (std::int64_t i = 0; i <= r; ++i) {
    const BigInt& c = a.coefficients[static_cast<std::size_t>(i)];
    LambdaPoly term = BigRational(c) * negq_product(y_pow[static_cast<std::size_t>(i)], x_pow[static_cast<std::size_t>(r - i)]);
    sum = sum + term;
  }
  return sum;
}

LambdaPoly negq_transform(const NegQContext& ctx, const ConcretePoly& a) {
  return negq_transform(a, poly_x(ctx), poly_y(ctx));
}

LambdaPoly poly_x(const NegQContext& ctx) { return LambdaPoly::monomial(ctx, 1, 0); }
LambdaPoly poly_y(const NegQContext& ctx) { return LambdaPoly::monomial(ctx, 0, 1); }

LambdaPoly mu(const NegQContext& ctx) {
  return {ctx, 1, [ctx](std::int64_t i, std::int64_t l) {
            return i == 0 ? BigRational(1) : BigRational(-ctx.b_pow(l) - 1);
          }};
}

LambdaPoly nu(const NegQContext& ctx) {
  return {ctx, 1, [](std::int64_t i, std::int64_t) { return BigRational(i == 0 ? 1 : -1); }};
}

LambdaPoly mu_poly(const NegQContext& ctx, std::int64_t k) {
  if (k < 0) throw InvalidArgument("mu power needs k >= 0");
  return {ctx, k, [ctx, k](std::int64_t u, std::int64_t l) {
            return BigRational(BigRational(gauss(ctx, k, u)) * gamma_rational(ctx, l, u));
          }};
}

LambdaPoly nu_poly(const NegQContext& ctx, std::int64_t k) {
  if (k < 0) throw InvalidArgument("nu power needs k >= 0");
  return {ctx, k, [ctx, k](std::int64_t u, std::int64_t) {
            BigInt v = ctx.b_pow_int(static_cast<std::uint64_t>(sigma(u))) * gauss(ctx, k, u);
            return BigRational(u % 2 ? BigInt(-v) : v);
          }};
}

LambdaPoly negq_derivative(const LambdaPoly& f, std::int64_t phi) {
  if (phi < 0) throw InvalidArgument("derivative order must be non-negative");
  if (phi > f.degree()) return LambdaPoly(f.context());
  if (phi == 0) return f;
  const std::int64_t r = f.degree();
  return {f.context(), r - phi, [f, r, phi](std::int64_t i, std::int64_t l) {
            return BigRational(f.coeff(i, l) * beta_rational(f.context(), r - i, phi));
          }};
}

LambdaPoly negq_inv_derivative(const LambdaPoly& f, std::int64_t phi) {
  if (phi < 0) throw InvalidArgument("derivative order must be non-negative");
  if (phi > f.degree()) return LambdaPoly(f.context());
  if (phi == 0) return f;
  const std::int64_t s = f.degree();
  return {f.context(), s - phi, [f, phi](std::int64_t j, std::int64_t l) {
            const NegQContext& ctx = f.context();
            const std::int64_t i = j + phi;
            return BigRational(f.coeff(i, l) * ctx.b_pow(phi * (1 - i) + sigma(phi)) * beta_rational(ctx, i, phi));
          }};
}

BigRational evaluate(const LambdaPoly& f, const BigRational& x, const BigRational& y, std::int64_t lambda) {
  const std::int64_t r = f.degree();
  BigRational sum = 0;
  for (std::int64_t i = 0; i <= r; ++i) {
    BigRational term = f.coeff(i, lambda);
    if (term == 0) continue;
    for (std::int64_t k = 0; k < i; ++k) term *= y;
    for (std::int64_t k = 0; k < r - i; ++k) term *= x;
    sum += term;
  }
  return sum;
}

bool equal_on(const LambdaPoly& a, const LambdaPoly& b, std::int64_t lambda_lo, std::int64_t lambda_hi) {
  const std::int64_t d = std::max(a.degree(), b.degree());
  if (!a.empty() && !b.empty() && a.degree() != b.degree()) return false;
  for (std::int64_t l = lambda_lo; l <= lambda_hi; ++l)
    for (std::int64_t i = 0; i <= d; ++i)
      if (a.coeff(i, l) != b.coeff(i, l)) return false;
  return true;
}

}  // namespace hrmc
