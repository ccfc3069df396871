#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "hrmc/bigint.hpp"
#include "hrmc/negq_algebra.hpp"

namespace hrmc {

/// A lambda-free homogeneous polynomial sum_i c_i Y^i X^{r-i}.
struct ConcretePoly {
  std::vector<BigInt> coefficients;

  std::int64_t degree() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }
  friend bool operator==(const ConcretePoly&, const ConcretePoly&) = default;
};

/// Homogeneous polynomial sum_i f_i(lambda) Y^i X^{r-i} whose coefficients
/// are functions of an integer parameter lambda.
///
/// Coefficients are evaluated lazily and memoized per (i, lambda); copies
/// share the memo. The empty polynomial (degree -1) is the zero of every
/// degree and absorbs products.
class LambdaPoly {
 public:
  using CoeffFn = std::function<BigRational(std::int64_t i, std::int64_t lambda)>;

  explicit LambdaPoly(NegQContext ctx);
  LambdaPoly(NegQContext ctx, std::int64_t degree, CoeffFn fn);

  static LambdaPoly constant(const NegQContext& ctx, BigRational c = 1);
  /// c * Y^y_exp X^x_exp.
  static LambdaPoly monomial(const NegQContext& ctx, std::int64_t x_exp, std::int64_t y_exp, BigRational c = 1);
  static LambdaPoly from_concrete(const NegQContext& ctx, const ConcretePoly& p);

  std::int64_t degree() const;
  bool empty() const { return degree() < 0; }
  const NegQContext& context() const;

  /// f_i(lambda); zero outside [0, degree].
  BigRational coeff(std::int64_t i, std::int64_t lambda) const;
  std::vector<BigRational> coefficients(std::int64_t lambda) const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b);
LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b);
LambdaPoly operator-(const LambdaPoly& a);
LambdaPoly operator*(const BigRational& c, const LambdaPoly& a);

/// f(X, Y; lambda + delta).
LambdaPoly shift_lambda(const LambdaPoly& f, std::int64_t delta);
/// f(X, cY; lambda).
LambdaPoly scale_y(const LambdaPoly& f, const BigRational& c);
/// f / X; assumes the Y^r coefficient vanishes.
LambdaPoly divide_by_x(const LambdaPoly& f);
/// f / Y; assumes the X^r coefficient vanishes.
LambdaPoly divide_by_y(const LambdaPoly& f);

/// c_u(lambda) = sum_i b^{i s} a_i(lambda) g_{u-i}(lambda - i), s = deg g.
/// Throws ContextMismatch.
LambdaPoly negq_product(const LambdaPoly& a, const LambdaPoly& g);
/// a^[0] = 1, a^[k] = a * a^[k-1].
LambdaPoly negq_power(const LambdaPoly& a, std::int64_t k);

/// sum_i a_i y_sub^[i] * x_sub^[r-i]. Both substituends must have the same degree.
LambdaPoly negq_transform(const ConcretePoly& a, const LambdaPoly& x_sub, const LambdaPoly& y_sub);
/// The plain transform with X and Y as substituends.
LambdaPoly negq_transform(const NegQContext& ctx, const ConcretePoly& a);

LambdaPoly poly_x(const NegQContext& ctx);
LambdaPoly poly_y(const NegQContext& ctx);
/// mu = X + (-b^lambda - 1) Y.
LambdaPoly mu(const NegQContext& ctx);
/// nu = X - Y.
LambdaPoly nu(const NegQContext& ctx);
/// Closed form of mu^[k]: coefficient u is [k u] gamma(lambda, u).
LambdaPoly mu_poly(const NegQContext& ctx, std::int64_t k);
/// Closed form of nu^[k]: coefficient u is (-1)^u b^{sigma_u} [k u].
LambdaPoly nu_poly(const NegQContext& ctx, std::int64_t k);

/// phi-th negative-q derivative in X: f_i beta(r-i, phi) Y^i X^{r-i-phi}.
LambdaPoly negq_derivative(const LambdaPoly& f, std::int64_t phi);
/// phi-th negative-q^{-1} derivative in Y:
/// f_i b^{phi(1-i)+sigma_phi} beta(i, phi) Y^{i-phi} X^{s-i}.
/// Coefficients are rational in general (e.g. (Y^3)^{1} = b^{-2}(1+b+b^2) Y^2).
LambdaPoly negq_inv_derivative(const LambdaPoly& f, std::int64_t phi);

BigRational evaluate(const LambdaPoly& f, const BigRational& x, const BigRational& y, std::int64_t lambda);

/// Coefficientwise equality for lambda in [lambda_lo, lambda_hi].
bool equal_on(const LambdaPoly& a, const LambdaPoly& b, std::int64_t lambda_lo = -3, std::int64_t lambda_hi = 8);

}  // namespace hrmc
