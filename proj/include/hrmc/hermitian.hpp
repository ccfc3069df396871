#pragma once

#include <cstddef>
#include <cstdint>
#include <ranges>
#include <span>
#include <vector>

#include "hrmc/finite_field.hpp"

namespace hrmc {

inline constexpr std::uint64_t kDefaultEnumerationGuard = std::uint64_t{1} << 24;

/// Square t x t matrix over a Field, entries stored row-major as element codes.
class Matrix {
 public:
  Matrix(Field field, std::size_t t);
  Matrix(Field field, std::size_t t, std::vector<Field::Code> entries);

  const Field& field() const { return field_; }
  std::size_t t() const { return t_; }
  Field::Code operator()(std::size_t i, std::size_t j) const { return entries_[i * t_ + j]; }
  Field::Code& operator()(std::size_t i, std::size_t j) { return entries_[i * t_ + j]; }
  FieldElement at(std::size_t i, std::size_t j) const { return {field_, (*this)(i, j)}; }
  void set(std::size_t i, std::size_t j, const FieldElement& x);
  const std::vector<Field::Code>& entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t t_;
  std::vector<Field::Code> entries_;
};

bool is_hermitian(const Matrix& m);
/// Column rank over F_{q^2}.
std::size_t rank(const Matrix& m);

/// A matrix known to satisfy H = H^dagger.
class HermitianMatrix {
 public:
  /// Validates; throws NotHermitian.
  explicit HermitianMatrix(Matrix m);

  static HermitianMatrix zero(const Field& field, std::size_t t);
  static HermitianMatrix identity(const Field& field, std::size_t t);
  /// Inverse of coordinates(): t^2 subfield codes, diagonal first, then the
  /// (a, b) pair of each strictly-upper entry a + b*omega in row-major order.
  static HermitianMatrix from_coordinates(const Field& field, std::size_t t,
                                          std::span<const Field::Code> coords);

  const Matrix& matrix() const { return m_; }
  const Field& field() const { return m_.field(); }
  std::size_t t() const { return m_.t(); }
  Field::Code operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  FieldElement at(std::size_t i, std::size_t j) const { return m_.at(i, j); }

  std::vector<Field::Code> coordinates() const;
  std::size_t rank() const { return hrmc::rank(m_); }

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  /// Scaling by an F_q element keeps the matrix Hermitian; other scalars throw NotHermitian.
  friend HermitianMatrix operator*(const FieldElement& c, const HermitianMatrix& h);
  friend bool operator==(const HermitianMatrix& a, const HermitianMatrix& b) { return a.m_ == b.m_; }

 private:
  struct Unchecked {};
  HermitianMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}
  Matrix m_;
};

/// Tr(H^dagger J); always lies in F_q.
FieldElement inner_product(const HermitianMatrix& h, const HermitianMatrix& j);

/// d_R(H, J) = rank(H - J).
std::size_t rank_distance(const HermitianMatrix& h, const HermitianMatrix& j);

/// q^{t^2}, the number of t x t Hermitian matrices; throws EnumerationTooLarge above guard.
std::uint64_t hermitian_count(const Field& field, std::size_t t, std::uint64_t guard = kDefaultEnumerationGuard);

/// The index-th matrix of the enumeration order: diagonal entries (from F_q)
/// then strictly-upper entries (from F_{q^2}) in row-major order, read as a
/// mixed-radix number whose last position varies fastest.
HermitianMatrix hermitian_at(const Field& field, std::size_t t, std::uint64_t index);

/// Lazily enumerates every t x t Hermitian matrix exactly once, in index order.
inline auto enumerate_hermitian(const Field& field, std::size_t t,
                                std::uint64_t guard = kDefaultEnumerationGuard) {
  const std::uint64_t count = hermitian_count(field, t, guard);
  return std::views::iota(std::uint64_t{0}, count) |
         std::views::transform([field, t](std::uint64_t i) { return hermitian_at(field, t, i); });
}

/// Number of Hermitian matrices of each rank 0..t, by brute-force enumeration.
std::vector<std::uint64_t> rank_census(const Field& field, std::size_t t, unsigned workers = 1,
                                       std::uint64_t guard = kDefaultEnumerationGuard);

}  // namespace hrmc
