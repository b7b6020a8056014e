#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hilburch/matrix.hpp"
#include "hilburch/monomial.hpp"

namespace hilburch {

/// Zero-dimensional monomial ideal E = (x^t, x^(t-1) y^m1, ..., y^mt) of
/// k[[x,y]] in its minimal staircase form: m0 = 0 < m1 <= ... <= mt.
class Staircase {
 public:
  /// Takes (m0, ..., mt). Throws DomainError unless m0 = 0, m1 >= 1 and the
  /// sequence is nondecreasing.
  explicit Staircase(std::vector<int> m);

  int t() const noexcept { return static_cast<int>(m_.size()) - 1; }
  int m(int i) const { return m_.at(i); }
  const std::vector<int>& m() const noexcept { return m_; }
  /// d_j = m_j - m_(j-1), 1 <= j <= t.
  int d(int j) const { return m_.at(j) - m_.at(j - 1); }

  int colength() const;
  int socle_degree() const;
  std::vector<int> hilbert_function() const;

  bool contains(Monomial mono) const;
  /// x^(t-i) y^(m_i) for i = 0..t (including redundant ones when d_i = 0).
  std::vector<Monomial> generators() const;
  Monomial generator(int i) const { return {t() - i, m_.at(i)}; }
  /// Generators with the redundant ones removed.
  std::vector<Monomial> minimal_generators() const;
  /// Monomials outside E.
  std::vector<Monomial> standard_monomials() const;

  /// Degree matrix entry u_{i,j} = m_j - m_(i-1) + i - j (1-based).
  int u(int i, int j) const { return m_.at(j) - m_.at(i - 1) + i - j; }
  int v(int i, int j) const { return u(i, j) > 0 ? u(i, j) : 0; }

  /// "t=3; m=0,1,3,5".
  std::string to_string() const;
  /// "(x^3,x^2y,xy^3,y^5)" using the minimal generators.
  std::string ideal_string() const;

  friend bool operator==(const Staircase&, const Staircase&) = default;
  friend auto operator<=>(const Staircase& a, const Staircase& b) {
    if (a.t() != b.t()) return a.t() <=> b.t();
    return a.m_ <=> b.m_;
  }

 private:
  std::vector<int> m_;
};

/// Minimal staircase of the monomial ideal generated by gens. Throws
/// DomainError if the ideal is the unit ideal or not zero-dimensional.
Staircase staircase_from_generators(const std::vector<Monomial>& gens);

struct Numerics {
  std::vector<int> hilbert_function;
  int colength = 0;
  int socle_degree = 0;
};
Numerics numerics(const Staircase& e);

struct StaircaseFlags {
  bool lex_segment = false;
  bool lex_gb_condition = false;
  bool gorenstein_admissible = false;
  /// (i, j), j < i, with m_j - j - 1 > m_i - i, normalised to the largest i and
  /// smallest j in their blocks of equal m values.
  std::optional<std::pair<int, int>> lex_gb_witness;
};
StaircaseFlags classify(const Staircase& e);

/// The lex-segment staircase with the given Hilbert function. Throws
/// DomainError if no monomial ideal realises h.
Staircase lex_segment_of(const std::vector<int>& h);

/// All staircases of colength d, ordered lexicographically by (t, m).
std::vector<Staircase> enumerate_staircases(int d);

/// Canonical Hilbert-Burch matrix: y^(d_i) at (i,i), -x at (i+1,i).
PolyMatrix canonical_H(const Staircase& e, const Field& field);
IntMatrix degree_matrix(const Staircase& e);

/// Accepts "0,1,3,5", "t=3; m=0,1,3,5", a generator list "x^3,x^2*y,y^5" or
/// JSON {"t":3,"m":[0,1,3,5]}.
Staircase parse_staircase(std::string_view text);

}  // namespace hilburch
