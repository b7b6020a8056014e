#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilburch/poly.hpp"
#include "hilburch/staircase.hpp"

namespace hilburch {

/// An ideal of k[[x,y]] given by generators, each known modulo m^cap.
struct IdealPresentation {
  std::vector<BiPoly> gens;
  Field field;
  int cap = kUnbounded;
};

/// Generators separated by ';' in the polynomial grammar.
IdealPresentation parse_ideal(std::string_view text, const Field& field,
                              int cap = kUnbounded);
std::string to_string(const IdealPresentation& j);

/// f_0..f_t with Lt(f_i) = x^(t-i) y^(m_i), monic.
struct StandardBasis {
  Staircase E;
  std::vector<BiPoly> elements;
  bool reduced = false;
};

/// Reduced row echelon form of the degree-D Macaulay matrix.
struct EchelonCertificate {
  int degree = 0;
  int rank = 0;
  /// Pivot monomials in decreasing local order.
  std::vector<Monomial> pivots;
  /// Row for each pivot, exact polynomials of degree < degree.
  std::vector<BiPoly> rows;

  nlohmann::json to_json() const;
};

struct LtResult {
  Staircase E;
  EchelonCertificate certificate;
};

/// Leading-term ideal under the local degree order. The working degree starts
/// at socle_hint + 2 (or max generator degree + 2) and doubles up to 64,
/// never beyond the generators' cap. Throws DomainError when the ideal is
/// not m-primary within those limits.
LtResult lt_ideal_local(const IdealPresentation& j,
                        std::optional<int> socle_hint = std::nullopt);

/// The unique reduced standard basis (tails avoid E).
StandardBasis reduced_standard_basis(const IdealPresentation& j,
                                     std::optional<int> socle_hint = std::nullopt);

struct DivisionResult {
  std::vector<BiPoly> quotients;
  BiPoly remainder;
};

/// Division in R/m^cap against the local leading terms of basis. The current
/// leading term is reduced by the first element whose leading term divides it.
DivisionResult grauert_divide(const BiPoly& f, const std::vector<BiPoly>& basis,
                              int cap);
inline DivisionResult grauert_divide(const BiPoly& f, const StandardBasis& b,
                                     int cap) {
  return grauert_divide(f, b.elements, cap);
}

/// Quotients q_0..q_t in k[[y]] with f = sum q_i f_i modulo m^cap, obtained
/// by repeatedly cancelling the leading term x^s y^r with y^(r - m_(t-s))
/// f_(t-s). Throws DomainError if a term divisible by x^(t+1) appears or the
/// leading term is not in E.
std::vector<YPoly> y_divide(const BiPoly& f, const StandardBasis& basis, int cap);

/// True iff the leading terms of F generate Lt of the ideal (F).
/// Throws DomainError on duplicate leading terms.
bool verify_standard_basis(const std::vector<BiPoly>& f, const Field& field,
                           int cap = kUnbounded);

/// Shortcut for systems of signed minors f_0..f_t of a (t+1) x t matrix: such
/// a system is a standard basis as soon as its leading terms are exactly the
/// staircase generators of E.
bool verify_minor_system(const Staircase& e, const std::vector<BiPoly>& f);

/// v = sigma^j + n with Lt(n_i) x^(t-i+1) y^(m_(i-1)) < x^(t-j+1) y^(m_j)
/// for every nonzero n_i; v has t+1 entries.
bool is_lifting(const Staircase& e, int j, const std::vector<BiPoly>& v);

/// Reduced lex Groebner basis of a zero-dimensional polynomial ideal.
std::vector<BiPoly> buchberger_lex(const std::vector<BiPoly>& gens);
Staircase lt_ideal_lex(const std::vector<BiPoly>& gens);

/// Polynomial generators of J cap k[x,y]: the generators truncated at degree
/// s together with every monomial of degree s+1.
std::vector<BiPoly> contract_to_poly_ring(const IdealPresentation& j);

/// Indices of generators whose images form a basis of J/mJ, earliest first.
std::vector<std::size_t> minimal_generator_indices(const IdealPresentation& j);

/// The reduced standard basis printed as text; equal ideals give equal strings.
std::string ideal_fingerprint(const IdealPresentation& j);
/// Every generator of b reduces to zero modulo a.
bool ideal_contains(const IdealPresentation& a, const IdealPresentation& b);
bool same_ideal(const IdealPresentation& a, const IdealPresentation& b);

}  // namespace hilburch
