#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilburch/hbm.hpp"
#include "hilburch/localstd.hpp"
#include "hilburch/staircase.hpp"

namespace hilburch {

/// Lt(J) == E.
bool membership(const IdealPresentation& j, const Staircase& e);

/// N built from the S-polynomials y^(d_j) f_(j-1) - x f_j of the reduced
/// standard basis of J, divided by the basis with quotients in k[[y]].
/// Entries carry cap s+2.
Deformation syzygy_deformation(const IdealPresentation& j);
/// Same construction for an explicitly given standard basis f_0..f_t. Only
/// f_0 may contain a term divisible by x^t.
Deformation syzygy_deformation(const StandardBasis& basis);

/// Entrywise truncation at the socle degree s.
Deformation truncate_deformation(const Deformation& n);

/// The (i,j) reduction move on a strictly lower triangular N: with
/// n_{i,j} = r + y^(d_j) q, adds -q times row j to row i of H+N, then q times
/// column i-1 to column j-1. Identity when deg n_{i,j} < d_j.
Deformation reduction_move(const Deformation& n, int i, int j);

struct CanonicalResult {
  /// The unique N_0 in M(E) with J = I_t(H+N_0).
  Deformation N0;
  /// Cell coordinates, present when E satisfies the lex Groebner condition.
  std::optional<CellPoint> point;
  /// Moves performed, in order.
  std::vector<std::pair<int, int>> moves;
};

/// Syzygy matrix, truncation, then reduction moves from the last column to
/// the first. Requires that the reduced standard basis is also a lex Groebner
/// basis of J cap k[x,y] with the same leading terms; throws DomainError
/// otherwise.
CanonicalResult canonical_deformation(const IdealPresentation& j);

/// Number of free coefficients of M(E): sum of max(0, d_j - v_{i,j}) over
/// i > j.
int cell_dimension(const Staircase& e);

using CoordinateChange = std::array<Scalar, 4>;  // g11, g12, g21, g22

/// x -> g11 x + g12 y, y -> g21 x + g22 y. Throws DomainError if singular.
IdealPresentation change_coordinates(const IdealPresentation& j,
                                     const CoordinateChange& g);

struct GinResult {
  bool conclusive = false;
  std::optional<Staircase> E;
  std::vector<Staircase> draws;
  std::vector<CoordinateChange> changes;
};

/// Lt of J after three random coordinate changes drawn from seed; conclusive
/// when all three agree. Over Q the entries lie in [-bound, bound].
GinResult generic_initial(const IdealPresentation& j, std::uint64_t seed,
                          int bound = 100);

/// Every ideal of V(E) over F_p, as reduced standard bases. Enumerates the
/// candidate bases whose tails are standard monomials below each leading
/// term. Throws BudgetError when p^(number of tail coefficients) > budget.
std::vector<StandardBasis> enumerate_cell(const Staircase& e, const Field& fp,
                                          std::uint64_t budget);

/// Slots (i,j,k) of the families N(E)_{<d} and N(E)_{<=s}.
std::vector<CellSlot> lt_d_template(const Staircase& e);
std::vector<CellSlot> le_s_template(const Staircase& e);

struct ProbeReport {
  explicit ProbeReport(Staircase e) : E(std::move(e)) {}

  Staircase E;
  std::uint32_t prime = 0;
  int n_template = 0;
  int d_template = 0;
  std::uint64_t cell_count = 0;
  std::uint64_t image_count = 0;
  std::uint64_t le_s_image_count = 0;
  bool injective = false;
  bool pass = false;
  std::string le_s_method;
  std::vector<std::pair<Deformation, Deformation>> counterexamples;

  nlohmann::json to_json() const;
};

/// Exhaustive check over F_p that N(E)_{<d} parametrizes V(E).
ProbeReport conjecture_probe(const Staircase& e, std::uint32_t p,
                             std::uint64_t budget);

/// For E violating m_j - j - 1 <= m_i - i: monomial generators with
/// x^(t-i) y^(m_i) replaced by x^(t-i) y^(m_i) + x^(t-j) y^(m_j - 1), where
/// (i,j) is the normalised witness. Throws DomainError if E has no witness.
IdealPresentation lex_failure_witness(const Staircase& e, const Field& field = {});

}  // namespace hilburch
