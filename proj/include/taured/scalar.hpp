#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace taured {

class Scalar;

/// Base field descriptor: exact rationals (the default) or F_p for a prime p.
class Field {
public:
  Field() = default;

  static Field rational() { return Field{}; }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_rational(const mpq_class& value) const;

  /// "rational" or "fp <p>", the same spelling the algebra files use.
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

private:
  friend class Scalar;
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_ = 0;
};

/// An exact field element. Rational values are kept canonical by GMP; prime
/// field values are residues in [0, p). Mixing fields throws.
class Scalar {
public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Rational value (the residue as an integer in prime mode).
  mpq_class to_rational() const;
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

private:
  friend class Field;

  void check_same_field(const Scalar& rhs) const;

  mpq_class q_;                // used in rational mode
  std::uint64_t residue_ = 0;  // used in prime mode
  std::uint32_t modulus_ = 0;  // 0 = rational
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace taured
