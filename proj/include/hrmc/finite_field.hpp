#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hrmc {

class FieldElement;

namespace detail {
struct FieldData;
}

/// The field F_{q^2}, q = p^m, in a polynomial basis over F_p.
///
/// Elements are packed into a `Code`: the base-p number whose little-endian
/// digits are the 2m polynomial coordinates. Codes are only meaningful
/// together with the field that produced them. A Field is a cheap handle to
/// immutable shared data and may be freely copied across threads.
class Field {
 public:
  using Code = std::uint32_t;

  static constexpr std::uint32_t kMaxDegree = 8;        // 2m
  static constexpr std::uint32_t kMaxOrder = 1U << 16;  // q^2

  /// Builds F_{p^{2m}}. `modulus` is the monic irreducible of degree 2m,
  /// low coefficient first (length 2m+1); a built-in default is used when
  /// omitted. Throws NonPrimeModulus, ReducibleModulus, UnsupportedSize.
  static Field make(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// F_{q^2} for a prime power q with the default modulus.
  /// Throws UnsupportedField when q is not a supported prime power.
  static Field for_q(std::uint64_t q);

  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t degree);

  std::uint32_t p() const;
  std::uint32_t m() const;
  std::uint32_t degree() const;  // 2m
  std::uint32_t q() const;
  std::uint32_t order() const;  // q^2
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(Code code) const;
  /// Element from 2m little-endian base-p digits.
  FieldElement from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(Code code) const;

  // Raw arithmetic on codes; all inputs must be valid codes of this field.
  Code add(Code x, Code y) const;
  Code sub(Code x, Code y) const;
  Code neg(Code x) const;
  Code mul(Code x, Code y) const;
  Code inv(Code x) const;
  Code div(Code x, Code y) const;
  Code pow(Code x, std::uint64_t e) const;
  /// Frobenius conjugation x^q.
  Code conj(Code x) const;

  /// The q elements fixed by conjugation, in ascending code order.
  const std::vector<Code>& subfield() const;
  bool in_subfield(Code x) const;
  /// Position of x in subfield(); x must lie in F_q.
  std::uint32_t subfield_index(Code x) const;
  /// The element omega completing {1, omega} to an F_q-basis of F_{q^2}.
  Code omega() const;
  /// Coordinates (a, b) in F_q with x = a + b*omega.
  std::pair<Code, Code> split(Code x) const;
  Code join(Code a, Code b) const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

/// An element of a Field. Immutable value type.
class FieldElement {
 public:
  FieldElement(Field field, Field::Code code);

  const Field& field() const { return field_; }
  Field::Code code() const { return code_; }
  std::vector<std::uint32_t> digits() const { return field_.digits(code_); }
  bool is_zero() const { return code_ == 0; }

  FieldElement conj() const { return {field_, field_.conj(code_)}; }
  FieldElement inv() const { return {field_, field_.inv(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(code_, e)}; }
  bool in_subfield() const { return field_.in_subfield(code_); }

  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x) { return {x.field_, x.field_.neg(x.code_)}; }
  friend bool operator==(const FieldElement& x, const FieldElement& y);

 private:
  Field field_;
  Field::Code code_;
};

inline FieldElement conj(const FieldElement& x) { return x.conj(); }

/// Throws FieldMismatch unless a and b describe the same field.
void require_same_field(const Field& a, const Field& b);

bool is_prime(std::uint64_t n);
/// (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

}  // namespace hrmc
