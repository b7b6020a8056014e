#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hilburch {

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DomainError unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }

  /// "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rationals use GMP; residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpz_class& num, const mpz_class& den);
  static Scalar from_rational(const mpq_class& q);
  static Scalar from_residue(const Field& field, std::uint64_t residue);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Valid only over Q.
  const mpq_class& rational() const;
  /// Valid only over F_p.
  std::uint32_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError on division by zero.
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Residues print with the symmetric representative in (-p/2, p/2];
  /// rationals as "a" or "a/b".
  std::string to_string() const;
  /// Sign used by the printer: -1, 0 or +1 (symmetric representative for F_p).
  int sign() const;

 private:
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::uint32_t residue_ = 0;
  mpq_class q_;
};

/// Parses an unsigned or signed integer / fraction "a", "-a", "a/b".
Scalar parse_scalar(std::string_view text, const Field& field);

}  // namespace hilburch
