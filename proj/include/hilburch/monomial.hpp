#pragma once

#include <compare>
#include <string>

namespace hilburch {

/// x^a y^b.
struct Monomial {
  int a = 0;  // exponent of x
  int b = 0;  // exponent of y

  constexpr int degree() const noexcept { return a + b; }
  constexpr bool divides(const Monomial& m) const noexcept {
    return a <= m.a && b <= m.b;
  }
  friend constexpr Monomial operator*(Monomial u, Monomial v) noexcept {
    return {u.a + v.a, u.b + v.b};
  }
  /// Requires divisor.divides(*this).
  constexpr Monomial operator/(Monomial divisor) const noexcept {
    return {a - divisor.a, b - divisor.b};
  }
  friend constexpr bool operator==(Monomial, Monomial) = default;

  std::string to_string() const;
};

/// Lex with x > y, DegLex, and the local degree order in which lower total
/// degree is greater and lex breaks ties.
enum class OrderKind { Lex, DegLex, LocalDeg };

std::strong_ordering compare(Monomial m1, Monomial m2, OrderKind order);

inline bool greater(Monomial m1, Monomial m2, OrderKind order) {
  return compare(m1, m2, order) == std::strong_ordering::greater;
}

/// Lex comparator, descending (x^a y^b before x^a' y^b' when greater in lex).
struct LexDescending {
  constexpr bool operator()(Monomial u, Monomial v) const noexcept {
    return u.a != v.a ? u.a > v.a : u.b > v.b;
  }
};

}  // namespace hilburch
