#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hrmc/hermitian.hpp"
#include "hrmc/weight_distribution.hpp"

namespace hrmc {

struct EnumerationOptions {
  std::uint64_t guard = kDefaultEnumerationGuard;
  unsigned workers = 1;
};

/// An F_q-linear subspace of the t x t Hermitian matrices.
///
/// The basis is kept in reduced row echelon form over the F_q-coordinates of
/// HermitianMatrix::coordinates(), so two codes are equal iff their bases are.
class LinearCode {
 public:
  /// Reduces `generators` to a basis. Throws MixedDimensions, FieldMismatch.
  LinearCode(Field field, std::size_t t, const std::vector<HermitianMatrix>& generators);

  static LinearCode zero(const Field& field, std::size_t t) { return {field, t, std::vector<HermitianMatrix>{}}; }
  static LinearCode full(const Field& field, std::size_t t);

  const Field& field() const { return field_; }
  std::size_t t() const { return t_; }
  std::size_t dimension() const { return rows_.size(); }
  BigInt size() const;
  std::vector<HermitianMatrix> basis() const;
  /// Basis rows as F_q-coordinate vectors (subfield codes), in RREF.
  const std::vector<std::vector<Field::Code>>& rows() const { return rows_; }

  /// Codeword with base-q coefficient digits of `index` (last basis vector fastest).
  HermitianMatrix codeword(std::uint64_t index) const;
  bool contains(const HermitianMatrix& h) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b);

 private:
  LinearCode(Field field, std::size_t t, std::vector<std::vector<Field::Code>> rows);
  friend LinearCode dual_code(const LinearCode& code);
  friend LinearCode dual_code_brute_force(const LinearCode& code, const EnumerationOptions& opts);

  Field field_;
  std::size_t t_;
  std::vector<std::vector<Field::Code>> rows_;
};

/// Builds a code from arbitrary square matrices. Throws NotHermitian, MixedDimensions.
LinearCode make_code(const Field& field, std::size_t t, const std::vector<Matrix>& generators);

/// q^k with a guard check; throws EnumerationTooLarge.
std::uint64_t codeword_count(const LinearCode& code, std::uint64_t guard);

WeightDistribution weight_distribution(const LinearCode& code, const EnumerationOptions& opts = {});

/// Null space of the functionals <., G_i> over F_q.
LinearCode dual_code(const LinearCode& code);
/// Tests every Hermitian matrix for orthogonality to the basis.
LinearCode dual_code_brute_force(const LinearCode& code, const EnumerationOptions& opts = {});

/// Throws ZeroCode when k = 0.
std::size_t min_distance(const LinearCode& code, const EnumerationOptions& opts = {});

struct SingletonResult {
  BigInt bound;
  bool is_mhrd = false;
  std::size_t min_distance = 0;
};

/// bound = q^{t(t-d+1)}; throws ZeroCode, BoundViolated.
SingletonResult singleton_check(const LinearCode& code, const EnumerationOptions& opts = {});

}  // namespace hrmc
