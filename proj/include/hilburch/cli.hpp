#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hilburch/hbm.hpp"
#include "hilburch/staircase.hpp"

namespace hilburch {

/// One bracketed row per line: "[y^2, 0, 0]".
std::string render_matrix(const PolyMatrix& m);
std::string render_matrix(const Deformation& n);
nlohmann::json render_matrix_json(const Deformation& n);

/// Rows of polynomial strings in the core grammar.
PolyMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows,
                            const Field& field);
Deformation deformation_from_rows(const Staircase& e,
                                  const std::vector<std::vector<std::string>>& rows,
                                  const Field& field);

struct OffFamilyFixture {
  Staircase L{{0, 1, 3, 5}};
  Deformation N{L};  // unit at (4,3)
  std::vector<std::string> expected_minors;
  Staircase expected_lt_lex{{0, 1, 3, 5}};
  Staircase expected_lt_local{{0, 1, 3}};
  PolyMatrix expected_H{4, 3, Field{}};
};

struct QuarticFixture {
  std::string gens;
  Staircase expected_E{{0, 2, 2, 2, 2}};
  /// An enhanced standard basis that is not reduced.
  std::vector<std::string> unreduced_basis;
  /// The reduced standard basis, which comes with N'.
  std::vector<std::string> reduced_basis;
};

struct TruncatedFixture {
  Deformation N_bar{Staircase{{0, 2, 2, 2, 2}}};
  std::string expected_f0_bar;
};

struct SharedImageFixture {
  Deformation N_prime{Staircase{{0, 2, 2, 2, 2}}};
};

struct SexticFixture {
  std::string gens;
  Staircase E{{0, 2, 2, 2, 2, 2, 8}};
  PolyMatrix expected_canonical{7, 6, Field{}};
  /// Moves that clear column 5 of the syzygy matrix.
  std::vector<std::pair<int, int>> first_moves;
};

struct LexCellFixture {
  Staircase L{{0, 1, 3, 5}};
  int expected_dimension = 6;
  std::vector<CellSlot> expected_coordinates;
};

struct DiagonalFixture {
  Staircase L{{0, 1, 3, 5}};
  /// Slots whose product decides the Gorenstein property.
  std::vector<CellSlot> third_diagonal;
};

struct CoverFixture {
  std::string target;
  std::vector<int> expected_hf;
  Staircase L{{0, 1, 3, 5}};
  std::string point;
  std::vector<std::string> expected_generators;
  int expected_gap = 2;
  std::uint32_t exhaustive_prime = 5;
  int exhaustive_colength = 8;
};

struct LexFailureFixture {
  Staircase E{{0, 2, 2, 2, 2, 2, 8}};
  Staircase expected_lt_lex{{0, 1, 2, 2, 2, 3, 8}};
};

struct X4y2Fixture {
  Staircase E{{0, 2, 2, 2, 2}};
  std::vector<std::uint32_t> primes{2, 3};
  int expected_d_template = 4;
};

struct Hilb3Fixture {
  int colength = 3;
  std::size_t count = 3;
  std::vector<Staircase> staircases;
  std::vector<std::vector<int>> hilbert_functions;
  /// (y - c^-1 x^2, x^3) for several c != 0, all in V((x^3,y)).
  std::vector<std::string> cell_members;
  Staircase member_cell{{0, 1, 1, 1}};
};

struct Fixtures {
  OffFamilyFixture off_family;
  QuarticFixture quartic;
  TruncatedFixture truncated;
  SharedImageFixture shared_image;
  SexticFixture sextic;
  LexCellFixture lex_cell;
  DiagonalFixture diagonal;
  CoverFixture cover;
  LexFailureFixture lex_failure_witness;
  X4y2Fixture x4y2;
  Hilb3Fixture hilb3;
};

/// Fixed test ideals and matrices, all over Q.
const Fixtures& fixtures();

/// Runs the command line; returns 0 on success, 1 on domain errors and 2 on
/// usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hilburch
