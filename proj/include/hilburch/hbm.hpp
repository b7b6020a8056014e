#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hilburch/localstd.hpp"
#include "hilburch/matrix.hpp"
#include "hilburch/staircase.hpp"

namespace hilburch {

/// A (t+1) x t matrix N of power series in y attached to a staircase E.
class Deformation {
 public:
  /// The zero deformation; cap defaults to s+2.
  explicit Deformation(Staircase e, const Field& field = {}, int cap = 0);

  const Staircase& E() const noexcept { return e_; }
  const Field& field() const noexcept { return field_; }
  int cap() const noexcept { return cap_; }
  int rows() const noexcept { return e_.t() + 1; }
  int cols() const noexcept { return e_.t(); }

  YPoly& at(int i, int j) { return entries_.at((i - 1) * cols() + (j - 1)); }
  const YPoly& at(int i, int j) const {
    return entries_.at((i - 1) * cols() + (j - 1));
  }
  /// Stores f (re-capped to the deformation's cap).
  void set(int i, int j, const YPoly& f);

  bool is_zero() const;
  bool strictly_lower_triangular() const;

  friend bool operator==(const Deformation& a, const Deformation& b) {
    return a.e_ == b.e_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  Staircase e_;
  Field field_;
  int cap_;
  std::vector<YPoly> entries_;
};

/// H + N as a polynomial matrix.
PolyMatrix to_matrix(const Deformation& n, int cap = kUnbounded);
/// N = M - H; throws DomainError if some entry of M - H involves x.
Deformation from_matrix(const Staircase& e, const PolyMatrix& m, int cap = 0);

nlohmann::json to_json(const Deformation& n);
Deformation deformation_from_json(const nlohmann::json& j, const Field& field);

struct FamilyFlags {
  bool in_N = false;
  bool in_N_le_s = false;
  bool in_T0 = false;
  bool in_M = false;
  bool in_N_lt_d = false;
};
FamilyFlags classify_deformation(const Deformation& n);

/// f_i = (-1)^(t-i) det of H+N with row i+1 deleted, in R/m^cap.
std::vector<BiPoly> signed_minors(const Deformation& n, int cap);

/// The ideal of maximal minors with cap s+2. Throws DomainError unless N is
/// in the family N(E).
IdealPresentation phi(const Deformation& n);

/// Coordinate c_{i,j}^k of a cell point.
struct CellSlot {
  int i, j, k;
  friend bool operator==(const CellSlot&, const CellSlot&) = default;
  std::string name() const;
};

/// Free coefficients of M(E): i > j and v_{i,j} <= k <= d_j - 1, ordered by
/// column j, then row i, then k.
std::vector<CellSlot> cell_template(const Staircase& e);

struct CellPoint {
  Staircase E;
  Field field;
  std::vector<Scalar> coords;

  bool is_origin() const;
  Scalar coord(int i, int j, int k) const;
  std::string to_string() const;
  friend bool operator==(const CellPoint&, const CellPoint&) = default;
};

/// Throws DomainError unless E satisfies m_j - j - 1 <= m_i - i for all j < i
/// and N lies in M(E).
CellPoint encode_cellpoint(const Deformation& n);
Deformation decode_cellpoint(const CellPoint& p);

/// Parses "1,0,0,1,0,0" against the template of E.
CellPoint parse_cellpoint(const Staircase& e, std::string_view text,
                          const Field& field);

}  // namespace hilburch
