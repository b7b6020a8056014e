#include <gtest/gtest.h>

#include <random>

#include "hilburch/errors.hpp"
#include "hilburch/matrix.hpp"
#include "hilburch/parse.hpp"
#include "hilburch/staircase.hpp"
#include "support.hpp"

using namespace hilburch;

namespace {

const Field Q = Field::rationals();

std::vector<Monomial> monomials_up_to(int d) {
  std::vector<Monomial> v;
  for (int e = 0; e <= d; ++e)
    for (int a = 0; a <= e; ++a) v.push_back({a, e - a});
  return v;
}

}  // namespace

TEST(Scalar, RationalArithmetic) {
  Scalar a = parse_scalar("3/4", Q), b = parse_scalar("-1/6", Q);
  EXPECT_EQ((a + b).to_string(), "7/12");
  EXPECT_EQ((a * b).to_string(), "-1/8");
  EXPECT_EQ((a / b).to_string(), "-9/2");
  EXPECT_EQ(parse_scalar("4/2", Q).to_string(), "2");
  EXPECT_THROW(Scalar::zero(Q).inverse(), DomainError);
}

TEST(Scalar, PrimeField) {
  Field f7 = Field::prime(7);
  Scalar three(f7, 3);
  EXPECT_TRUE((three * three.inverse()).is_one());
  EXPECT_EQ(Scalar(f7, -1).residue(), 6u);
  EXPECT_EQ(parse_scalar("1/3", f7).residue(), 5u);
  EXPECT_THROW(parse_scalar("1/7", f7), Error);
  EXPECT_THROW(Field::prime(9), DomainError);
  EXPECT_THROW(three + Scalar(Q, 1), DomainError);
}

TEST(Monomial, OrdersAreTotalAndMultiplicative) {
  auto ms = monomials_up_to(6);
  for (OrderKind k : {OrderKind::Lex, OrderKind::DegLex, OrderKind::LocalDeg})
    for (Monomial u : ms)
      for (Monomial v : ms) {
        auto c = compare(u, v, k);
        EXPECT_EQ(c == std::strong_ordering::equal, u == v);
        EXPECT_EQ(greater(u, v, k), greater(v, u, k) ? false : u != v);
        for (Monomial w : {Monomial{1, 0}, Monomial{0, 1}, Monomial{2, 3}})
          EXPECT_EQ(compare(u * w, v * w, k), c);
      }
}

TEST(Monomial, Transitivity) {
  auto ms = monomials_up_to(4);
  for (OrderKind k : {OrderKind::Lex, OrderKind::DegLex, OrderKind::LocalDeg})
    for (Monomial u : ms)
      for (Monomial v : ms)
        for (Monomial w : ms)
          if (greater(u, v, k) && greater(v, w, k)) EXPECT_TRUE(greater(u, w, k));
}

TEST(Monomial, LocalDegreeOrder) {
  EXPECT_TRUE(greater({0, 0}, {1, 0}, OrderKind::LocalDeg));
  EXPECT_TRUE(greater({0, 2}, {3, 0}, OrderKind::LocalDeg));
  EXPECT_TRUE(greater({2, 0}, {1, 1}, OrderKind::LocalDeg));
  EXPECT_TRUE(greater({3, 0}, {0, 2}, OrderKind::DegLex));
  EXPECT_TRUE(greater({1, 0}, {0, 9}, OrderKind::Lex));
}

TEST(Parse, PrinterFormat) {
  EXPECT_EQ(to_string(parse_poly("x^4+x^3*y", Q)), "x^4+x^3y");
  EXPECT_EQ(to_string(parse_poly("y^2 + x^3 + x^2*y", Q)), "x^3+x^2y+y^2");
  EXPECT_EQ(to_string(parse_poly("x^3-2x*y^2", Q)), "x^3-2xy^2");
  EXPECT_EQ(to_string(parse_poly("1/2*y - 3", Q)), "1/2y-3");
  EXPECT_EQ(to_string(parse_poly("x - x", Q)), "0");
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_poly("x^2+*y", Q);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_poly("x^", Q), ParseError);
  EXPECT_THROW(parse_poly("z", Q), ParseError);
  EXPECT_THROW(parse_ypoly("x+y", Q), ParseError);
}

TEST(Parse, RoundTrip) {
  std::mt19937_64 rng(11);
  for (Field f : {Q, Field::prime(5)})
    for (int k = 0; k < 200; ++k) {
      BiPoly p = gen::poly(rng, f, 6, 5);
      EXPECT_EQ(parse_poly(to_string(p), f), p);
    }
}

TEST(Poly, TruncatedProductMatchesFullProduct) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    BiPoly f = gen::poly(rng, Q, 5, 4), g = gen::poly(rng, Q, 5, 4);
    EXPECT_EQ(mul_truncated(f, g, 6), (f * g).with_cap(6));
  }
}

TEST(Poly, CapDropsHighTerms) {
  BiPoly f = parse_poly("1 + x*y + y^3", Q).with_cap(3);
  EXPECT_EQ(to_string(f), "xy+1");
  EXPECT_EQ(f.ord(), 0);
  EXPECT_EQ(f.leading_monomial(OrderKind::LocalDeg), (Monomial{0, 0}));
}

TEST(YPoly, LowPartAndHighQuotient) {
  YPoly f = parse_ypoly("1 + 2y + y^3 - y^5", Q);
  EXPECT_EQ(to_string(f.low_part(2)), "2y+1");
  EXPECT_EQ(to_string(f.high_quotient(2)), "-y^3+y");
  EXPECT_EQ(f.low_part(2) + f.high_quotient(2) * parse_ypoly("y^2", Q), f);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < 20; ++k) {
      PolyMatrix m(n, n, Q);
      std::vector<std::vector<BiPoly>> rows(n, std::vector<BiPoly>(n, BiPoly(Q)));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) rows[i - 1][j - 1] = m.at(i, j) = gen::poly(rng, Q, 2, 2);
      EXPECT_EQ(determinant(m, kUnbounded), oracle::determinant(rows, Q));
    }
}

TEST(Matrix, MinorsOfHAreTheMonomialGenerators) {
  for (const auto& m : {std::vector<int>{0, 1, 3, 5}, std::vector<int>{0, 2, 2, 2, 2},
                        std::vector<int>{0, 2, 2, 2, 2, 2, 8}}) {
    Staircase e(m);
    auto minors = signed_maximal_minors(canonical_H(e, Q), kUnbounded);
    ASSERT_EQ(minors.size(), static_cast<std::size_t>(e.t() + 1));
    for (int i = 0; i <= e.t(); ++i)
      EXPECT_EQ(minors[i], BiPoly::monomial(Q, e.generator(i))) << e.to_string() << " f" << i;
  }
}

TEST(Matrix, ScalarRank) {
  std::vector<std::vector<Scalar>> r{{Scalar(Q, 1), Scalar(Q, 2)}, {Scalar(Q, 2), Scalar(Q, 4)}};
  EXPECT_EQ(scalar_rank(r), 1);
  r[1][1] = Scalar(Q, 5);
  EXPECT_EQ(scalar_rank(r), 2);
}
