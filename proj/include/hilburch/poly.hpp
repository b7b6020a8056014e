#pragma once

#include <limits>
#include <map>
#include <string>
#include <utility>

#include "hilburch/monomial.hpp"
#include "hilburch/scalar.hpp"

namespace hilburch {

/// Cap value meaning "exact polynomial, no truncation".
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

/// Sparse polynomial in x, y carried modulo m^cap, where m = (x, y).
///
/// Terms are kept in descending lex order; no stored term has total degree
/// >= cap and no stored coefficient is zero. Equality compares terms only.
class BiPoly {
 public:
  using TermMap = std::map<Monomial, Scalar, LexDescending>;

  explicit BiPoly(const Field& field = {}, int cap = kUnbounded);

  static BiPoly constant(const Field& field, long value, int cap = kUnbounded);
  static BiPoly constant(const Scalar& value, int cap = kUnbounded);
  static BiPoly term(const Scalar& coeff, Monomial m, int cap = kUnbounded);
  static BiPoly monomial(const Field& field, Monomial m, int cap = kUnbounded);
  static BiPoly x(const Field& field) { return monomial(field, {1, 0}); }
  static BiPoly y(const Field& field) { return monomial(field, {0, 1}); }

  const Field& field() const noexcept { return field_; }
  int cap() const noexcept { return cap_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coeff(Monomial m) const;
  /// Adds c*m (dropped when deg(m) >= cap).
  void add_term(Monomial m, const Scalar& c);

  /// Least total degree present. Throws DomainError on zero.
  int ord() const;
  /// Largest total degree present. Throws DomainError on zero.
  int degree() const;
  /// Order-maximal term. Throws DomainError on zero.
  std::pair<Monomial, Scalar> leading_term(OrderKind order) const;
  Monomial leading_monomial(OrderKind order) const {
    return leading_term(order).first;
  }
  /// True if no monomial involves x.
  bool is_univariate_y() const;

  /// Drops terms of total degree strictly greater than d; cap is kept.
  BiPoly truncate(int d) const;
  /// Reinterprets the polynomial modulo m^cap (drops terms of degree >= cap).
  BiPoly with_cap(int cap) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Scalar& c);
  /// Multiplies by c * m in place.
  BiPoly shifted(Monomial m, const Scalar& c) const;

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Scalar& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  Field field_;
  int cap_;
  TermMap terms_;
};

/// Product in R/m^cap (result cap is min(cap, f.cap(), g.cap())).
BiPoly mul_truncated(const BiPoly& f, const BiPoly& g, int cap);
/// Free-function form of BiPoly::truncate.
inline BiPoly truncate(const BiPoly& f, int d) { return f.truncate(d); }

/// Univariate power series in y, carried modulo y^cap.
class YPoly {
 public:
  using CoeffMap = std::map<int, Scalar>;

  explicit YPoly(const Field& field = {}, int cap = kUnbounded);
  static YPoly monomial(const Scalar& c, int exponent, int cap = kUnbounded);
  /// Throws DomainError if f involves x.
  static YPoly from_bipoly(const BiPoly& f);

  const Field& field() const noexcept { return field_; }
  int cap() const noexcept { return cap_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const CoeffMap& coeffs() const noexcept { return coeffs_; }

  Scalar coeff(int k) const;
  void add_term(int k, const Scalar& c);
  /// Least exponent present. Throws DomainError on zero.
  int ord() const;
  /// Largest exponent present. Throws DomainError on zero.
  int deg() const;

  /// Drops exponents strictly greater than d; cap is kept.
  YPoly truncate(int d) const;
  YPoly with_cap(int cap) const;
  /// Terms of exponent < d.
  YPoly low_part(int d) const;
  /// (f - low_part(d)) / y^d.
  YPoly high_quotient(int d) const;

  BiPoly to_bipoly() const;

  YPoly operator-() const;
  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(const YPoly& a, const YPoly& b);
  friend bool operator==(const YPoly& a, const YPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  int cap_;
  CoeffMap coeffs_;
};

}  // namespace hilburch
