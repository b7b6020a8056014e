#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hilburch/cells.hpp"
#include "hilburch/cli.hpp"
#include "hilburch/errors.hpp"
#include "hilburch/parse.hpp"
#include "support.hpp"

using namespace hilburch;

namespace {
const Field Q = Field::rationals();
}

TEST(Syzygy, QuarticGivesNPrime) {
  Deformation n = syzygy_deformation(parse_ideal(fixtures().quartic.gens, Q));
  EXPECT_EQ(truncate_deformation(n), fixtures().shared_image.N_prime);
}

TEST(Syzygy, ExplicitBasisGivesPowerSeriesEntries) {
  const auto& fx = fixtures();
  StandardBasis sb{fx.quartic.expected_E, {}, false};
  for (const auto& s : fx.quartic.unreduced_basis) sb.elements.push_back(parse_poly(s, Q));
  Deformation n = syzygy_deformation(sb);
  // Entries are the geometric series truncated at s+2 = 6.
  EXPECT_EQ(to_string(n.at(2, 1)), "-y^5-y^4-y^3-y^2-y");
  EXPECT_EQ(to_string(n.at(5, 1)), "y^5+y^4");
  EXPECT_EQ(to_string(n.at(1, 4)), "1");
  // Removing terms above degree 3 gives the polynomial matrix N-bar.
  Deformation bar(n.E(), Q);
  for (int i = 1; i <= n.rows(); ++i)
    for (int j = 1; j <= n.cols(); ++j) bar.set(i, j, n.at(i, j).truncate(3));
  EXPECT_EQ(bar, fx.truncated.N_bar);
}

TEST(Syzygy, ReproducesIdealOnRandomCells) {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 40; ++k) {
    Staircase e = gen::staircase(rng, 4, 5);
    Deformation n = gen::deformation(rng, e, Q);
    IdealPresentation j = phi(n);
    Deformation back = syzygy_deformation(j);
    EXPECT_TRUE(classify_deformation(back).in_N);
    EXPECT_TRUE(same_ideal(phi(truncate_deformation(back)), j));
  }
}

TEST(Canonical, Sextic) {
  const auto& fx = fixtures().sextic;
  CanonicalResult r = canonical_deformation(parse_ideal(fx.gens, Q));
  EXPECT_EQ(to_matrix(r.N0), fx.expected_canonical);
  ASSERT_GE(r.moves.size(), 2u);
  EXPECT_EQ(r.moves[0], fx.first_moves[0]);
  EXPECT_EQ(r.moves[1], fx.first_moves[1]);
  EXPECT_FALSE(r.point);
  EXPECT_TRUE(classify_deformation(r.N0).in_M);
}

TEST(Canonical, RoundTripOnLexSegmentCells) {
  std::mt19937_64 rng(53);
  for (const auto& m : {std::vector<int>{0, 1, 3, 5}, std::vector<int>{0, 1, 2, 4},
                        std::vector<int>{0, 2, 4}, std::vector<int>{0, 1, 3, 4, 6}}) {
    Staircase e(m);
    for (int k = 0; k < 10; ++k) {
      CellPoint p{e, Q, {}};
      for (std::size_t c = 0; c < cell_template(e).size(); ++c)
        p.coords.push_back(gen::scalar(rng, Q));
      CanonicalResult r = canonical_deformation(phi(decode_cellpoint(p)));
      ASSERT_TRUE(r.point);
      EXPECT_EQ(*r.point, p);
    }
  }
}

TEST(Canonical, ReductionMovePreservesIdeal) {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int k = 0; k < 60 && checked < 20; ++k) {
    Staircase e = gen::staircase(rng, 4, 5);
    Deformation n(e, Q);
    Deformation full = gen::deformation(rng, e, Q, 0.5);
    for (int i = 2; i <= e.t() + 1; ++i)
      for (int j = 1; j < i; ++j) n.set(i, j, full.at(i, j));
    for (int i = 2; i <= e.t() + 1; ++i)
      for (int j = 1; j < i; ++j) {
        if (n.at(i, j).is_zero() || n.at(i, j).deg() < e.d(j)) continue;
        Deformation moved = reduction_move(n, i, j);
        EXPECT_TRUE(same_ideal(phi(moved), phi(n)));
        if (!moved.at(i, j).is_zero()) EXPECT_LT(moved.at(i, j).deg(), e.d(j));
        ++checked;
      }
  }
  EXPECT_GT(checked, 0);
}

TEST(Canonical, RejectsWhenLexBasisDiffers) {
  IdealPresentation w = lex_failure_witness(Staircase({0, 2, 2, 2, 2, 2, 8}), Q);
  EXPECT_THROW(canonical_deformation(w), DomainError);
}

TEST(Dimension, Formula) {
  EXPECT_EQ(cell_dimension(Staircase({0, 1, 3, 5})), 6);
  for (int d = 2; d <= 12; ++d) EXPECT_EQ(cell_dimension(Staircase({0, d})), d - 1);
}

TEST(LexFailure, Witness) {
  const auto& fx = fixtures().lex_failure_witness;
  IdealPresentation j = lex_failure_witness(fx.E, Q);
  EXPECT_EQ(lt_ideal_local(j).E, fx.E);
  EXPECT_EQ(lt_ideal_lex(contract_to_poly_ring(j)), fx.expected_lt_lex);
  EXPECT_THROW(lex_failure_witness(Staircase({0, 1, 3, 5}), Q), DomainError);
}

TEST(Gin, LexSegmentForGenericCoordinates) {
  GinResult r = generic_initial(parse_ideal("x^2; y^3", Q), 7);
  ASSERT_TRUE(r.conclusive);
  EXPECT_EQ(*r.E, lex_segment_of({1, 2, 2, 1}));
  EXPECT_EQ(r.draws.size(), 3u);
  GinResult again = generic_initial(parse_ideal("x^2; y^3", Q), 7);
  EXPECT_EQ(again.changes, r.changes);
}

TEST(Gin, SingularChangeRejected) {
  CoordinateChange g{Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 2), Scalar(Q, 4)};
  EXPECT_THROW(change_coordinates(parse_ideal("x; y", Q), g), DomainError);
}

TEST(Enumerate, CellSizeIsPowerOfP) {
  for (const auto& m : {std::vector<int>{0, 1, 3, 5}, std::vector<int>{0, 3}}) {
    Staircase e(m);
    auto members = enumerate_cell(e, Field::prime(2), 1u << 20);
    EXPECT_EQ(members.size(), std::size_t{1} << cell_template(e).size());
  }
}

TEST(Probe, X4Y2) {
  const auto& fx = fixtures().x4y2;
  for (std::uint32_t p : fx.primes) {
    ProbeReport r = conjecture_probe(fx.E, p, 1u << 20);
    EXPECT_EQ(r.d_template, fx.expected_d_template);
    std::uint64_t p4 = std::uint64_t{p} * p * p * p;
    EXPECT_EQ(r.cell_count, p4);
    EXPECT_EQ(r.image_count, p4);
    EXPECT_EQ(r.le_s_image_count, p4);
    EXPECT_TRUE(r.injective);
    EXPECT_TRUE(r.pass);
  }
}

TEST(Probe, BudgetExceeded) {
  EXPECT_THROW(conjecture_probe(Staircase({0, 1, 3, 5}), 101, 1000), BudgetError);
}
