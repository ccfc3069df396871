#pragma once

// Reference computations that share no code paths with the library's
// closed forms: recursions, brute-force sums and difference quotients.

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "hrmc/bigint.hpp"
#include "hrmc/hermitian.hpp"
#include "hrmc/negq_poly.hpp"

namespace oracle {

using hrmc::BigInt;
using hrmc::BigRational;

inline BigInt ipow(std::int64_t base, std::int64_t e) {
  BigInt r = 1;
  for (std::int64_t i = 0; i < e; ++i) r *= base;
  return r;
}

inline BigRational rpow(const BigRational& base, std::int64_t e) {
  BigRational r = 1;
  for (std::int64_t i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return e < 0 ? BigRational(1) / r : r;
}

/// Pascal recursion [x k] = [x-1 k-1] + b^k [x-1 k].
inline BigInt gauss(std::int64_t b, std::int64_t x, std::int64_t k) {
  static std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, BigInt> memo;
  if (k < 0 || k > x) return 0;
  if (k == 0 || k == x) return 1;
  const auto key = std::make_tuple(b, x, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  BigInt v = gauss(b, x - 1, k - 1) + ipow(b, k) * gauss(b, x - 1, k);
  memo.emplace(key, v);
  return v;
}

/// Rank counts of every Hermitian matrix, by direct Gaussian elimination on
/// each matrix of the enumeration.
inline std::vector<std::uint64_t> census(const hrmc::Field& f, std::size_t t) {
  std::vector<std::uint64_t> out(t + 1, 0);
  for (const auto& h : hrmc::enumerate_hermitian(f, t)) ++out[h.rank()];
  return out;
}

/// diag(1, ..., 1, 0, ..., 0) with x ones.
inline hrmc::HermitianMatrix diag_rank(const hrmc::Field& f, std::size_t t, std::size_t x) {
  hrmc::Matrix m(f, t);
  for (std::size_t i = 0; i < x; ++i) m(i, i) = f.one().code();
  return hrmc::HermitianMatrix(m);
}

/// sum over rank-k H of zeta^{<A, H>} with A of rank x, over a prime field
/// F_q (q = p). The sum is an integer, so the nonzero residues occur equally
/// often and the value is n_0 - n_1.
inline BigInt eigenvalue(const hrmc::Field& f, std::size_t t, std::size_t x, std::size_t k) {
  const auto a = diag_rank(f, t, x);
  std::vector<std::int64_t> n(f.q(), 0);
  for (const auto& h : hrmc::enumerate_hermitian(f, t)) {
    if (h.rank() != k) continue;
    const auto ip = hrmc::inner_product(a, h);
    ++n[f.subfield_index(ip.code())];
  }
  return BigInt(n[0] - n[1]);
}

/// f(x, y; lambda) summed from the coefficients.
inline BigRational eval(const hrmc::LambdaPoly& f, const BigRational& x, const BigRational& y, std::int64_t lambda) {
  BigRational s = 0;
  const auto r = f.degree();
  for (std::int64_t i = 0; i <= r; ++i) s += f.coeff(i, lambda) * rpow(y, i) * rpow(x, r - i);
  return s;
}

/// (f(bX, Y) - f(X, Y)) / ((b - 1) X).
inline BigRational dq_x(const hrmc::LambdaPoly& f, std::int64_t b, const BigRational& x, const BigRational& y,
                        std::int64_t lambda) {
  return (eval(f, b * x, y, lambda) - eval(f, x, y, lambda)) / ((b - 1) * x);
}

/// (g(X, b^{-1} Y) - g(X, Y)) / ((b^{-1} - 1) Y).
inline BigRational dq_y(const hrmc::LambdaPoly& g, std::int64_t b, const BigRational& x, const BigRational& y,
                        std::int64_t lambda) {
  const BigRational binv = BigRational(1) / b;
  return (eval(g, x, binv * y, lambda) - eval(g, x, y, lambda)) / ((binv - 1) * y);
}

}  // namespace oracle
