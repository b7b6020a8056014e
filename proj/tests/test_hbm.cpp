#include <gtest/gtest.h>

#include <random>

#include "hilburch/cli.hpp"
#include "hilburch/errors.hpp"
#include "hilburch/hbm.hpp"
#include "hilburch/parse.hpp"
#include "support.hpp"

using namespace hilburch;

namespace {
const Field Q = Field::rationals();
}

TEST(Deformation, ZeroGivesH) {
  Staircase L({0, 1, 3, 5});
  Deformation n(L, Q);
  EXPECT_TRUE(n.is_zero());
  EXPECT_EQ(to_matrix(n), canonical_H(L, Q));
  EXPECT_EQ(render_matrix(n), "[y, 0, 0]\n[-x, y^2, 0]\n[0, -x, y^2]\n[0, 0, -x]\n");
  auto minors = phi(n).gens;
  for (int i = 0; i <= L.t(); ++i) EXPECT_EQ(minors[i], BiPoly::monomial(Q, L.generator(i)));
}

TEST(Deformation, JsonRoundTrip) {
  const auto& nbar = fixtures().truncated.N_bar;
  auto j = to_json(nbar);
  EXPECT_EQ(j.at("entries").at(1).at(0).get<std::string>(), "-y^3-y^2-y");
  EXPECT_EQ(deformation_from_json(nlohmann::json::parse(j.dump()), Q), nbar);
  EXPECT_THROW(deformation_from_json(nlohmann::json::parse(R"({"entries":[]})"), Q), ParseError);
}

TEST(Deformation, MatrixRoundTrip) {
  const auto& nbar = fixtures().truncated.N_bar;
  EXPECT_EQ(from_matrix(nbar.E(), to_matrix(nbar)), nbar);
  PolyMatrix m = to_matrix(nbar);
  m.at(2, 1) += parse_poly("x", Q);
  EXPECT_THROW(from_matrix(nbar.E(), m), DomainError);
}

TEST(Deformation, Families) {
  auto nbar = classify_deformation(fixtures().truncated.N_bar);
  EXPECT_TRUE(nbar.in_N);
  EXPECT_TRUE(nbar.in_N_le_s);
  EXPECT_FALSE(nbar.in_M);
  auto nprime = classify_deformation(fixtures().shared_image.N_prime);
  EXPECT_TRUE(nprime.in_N);
  EXPECT_TRUE(nprime.in_N_le_s);
  EXPECT_FALSE(nprime.in_T0);
  auto off_family = classify_deformation(fixtures().off_family.N);
  EXPECT_FALSE(off_family.in_N);
  EXPECT_THROW(phi(fixtures().off_family.N), DomainError);
}

TEST(Deformation, OffFamilyMinorsAreExact) {
  auto minors = signed_minors(fixtures().off_family.N, kUnbounded);
  std::vector<std::string> got;
  for (const auto& f : minors) got.push_back(to_string(f));
  EXPECT_EQ(got, fixtures().off_family.expected_minors);
}

TEST(Deformation, MinorsMatchLeibnizWithSigns) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 30; ++k) {
    Staircase e = gen::staircase(rng, 3, 4);
    Deformation n = gen::deformation(rng, e, Q);
    PolyMatrix m = to_matrix(n);
    auto minors = signed_minors(n, kUnbounded);
    const int t = e.t();
    for (int i = 0; i <= t; ++i) {
      std::vector<std::vector<BiPoly>> rows;
      for (int r = 1; r <= t + 1; ++r) {
        if (r == i + 1) continue;
        std::vector<BiPoly> row;
        for (int c = 1; c <= t; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
      }
      BiPoly d = oracle::determinant(rows, Q);
      if ((t - i) % 2) d = -d;
      EXPECT_EQ(minors[i], d);
    }
  }
}

TEST(Cell, TemplateOfL) {
  auto slots = cell_template(Staircase({0, 1, 3, 5}));
  EXPECT_EQ(slots, fixtures().lex_cell.expected_coordinates);
  std::vector<std::string> names;
  for (const auto& s : slots) names.push_back(s.name());
  EXPECT_EQ(names.front(), "c_3,1^0");
  EXPECT_EQ(names.back(), "c_4,3^1");
}

TEST(Cell, EncodeDecode) {
  Staircase L({0, 1, 3, 5});
  CellPoint p = parse_cellpoint(L, "1,-2,1/3,0,5,1", Q);
  Deformation n = decode_cellpoint(p);
  EXPECT_TRUE(classify_deformation(n).in_M);
  EXPECT_EQ(to_string(n.at(4, 2)), "5y");
  EXPECT_EQ(encode_cellpoint(n), p);
  EXPECT_EQ(p.coord(3, 2, 1).to_string(), "1/3");
  EXPECT_THROW(p.coord(2, 1, 0), DomainError);
  EXPECT_THROW(parse_cellpoint(L, "1,2", Q), DomainError);
  EXPECT_THROW(encode_cellpoint(Deformation(Staircase({0, 2, 2, 2, 2, 2, 8}), Q)), DomainError);
}

TEST(Cell, DimensionMatchesTemplate) {
  for (int n = 1; n <= 10; ++n)
    for (const Staircase& e : enumerate_staircases(n))
      EXPECT_EQ(static_cast<int>(cell_template(e).size()), oracle::cell_dimension(e.m()))
          << e.to_string();
}

TEST(Phi, LeadingTermsOfRandomFamilyMembers) {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    Staircase e = gen::staircase(rng, 4, 5);
    Field f = k % 3 ? Q : Field::prime(5);
    Deformation n = gen::deformation(rng, e, f);
    ASSERT_TRUE(classify_deformation(n).in_N);
    EXPECT_EQ(lt_ideal_local(phi(n)).E, e) << to_json(n).dump();
  }
}
