#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "hilburch/cells.hpp"
#include "hilburch/cli.hpp"
#include "hilburch/errors.hpp"
#include "hilburch/localstd.hpp"
#include "hilburch/parse.hpp"
#include "support.hpp"

using namespace hilburch;

namespace {

const Field Q = Field::rationals();

std::vector<std::string> printed(const std::vector<BiPoly>& v) {
  std::vector<std::string> s;
  for (const auto& f : v) s.push_back(to_string(f));
  return s;
}

std::vector<std::string> printed(const std::vector<std::string>& v, const Field& f) {
  std::vector<std::string> s;
  for (const auto& t : v) s.push_back(to_string(parse_poly(t, f)));
  return s;
}

// A random m-primary ideal: random combinations of the generators of E plus
// higher-order noise.
IdealPresentation random_ideal(std::mt19937_64& rng, const Staircase& e, const Field& f) {
  std::vector<BiPoly> gens;
  for (Monomial g : e.minimal_generators()) {
    BiPoly p = BiPoly::monomial(f, g);
    p += gen::poly(rng, f, g.degree() + 3, 2, g.degree() + 1);
    gens.push_back(p);
  }
  return {gens, f, kUnbounded};
}

}  // namespace

TEST(LocalLt, OffFamilyExtension) {
  auto j = parse_ideal("x^3-x^2; x^2*y-x*y; x*y^3-y^3; y^5", Q);
  LtResult r = lt_ideal_local(j);
  EXPECT_EQ(r.E, Staircase({0, 1, 3}));
  EXPECT_TRUE(oracle::agrees_below(r.E, oracle::leading_monomials(j.gens, 8), 8));
  EXPECT_EQ(r.E.hilbert_function(), (std::vector<int>{1, 2, 1}));
}

TEST(LocalLt, Quartic) {
  auto j = parse_ideal(fixtures().quartic.gens, Q);
  EXPECT_EQ(lt_ideal_local(j).E, fixtures().quartic.expected_E);
  EXPECT_TRUE(oracle::agrees_below(fixtures().quartic.expected_E,
                                   oracle::leading_monomials(j.gens, 8), 8));
}

TEST(LocalLt, MatchesEliminationOracleOnRandomIdeals) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 60; ++k) {
    Staircase e = gen::staircase(rng, 4, 5);
    Field f = k % 2 ? Q : Field::prime(7);
    auto j = random_ideal(rng, e, f);
    Staircase got = lt_ideal_local(j).E;
    const int D = got.socle_degree() + 3;
    EXPECT_TRUE(oracle::agrees_below(got, oracle::leading_monomials(j.gens, D), D))
        << to_string(j);
  }
}

TEST(LocalLt, IdempotentOnMonomialIdeals) {
  for (int n = 1; n <= 9; ++n)
    for (const Staircase& e : enumerate_staircases(n)) {
      std::vector<BiPoly> gens;
      for (Monomial g : e.generators()) gens.push_back(BiPoly::monomial(Q, g));
      EXPECT_EQ(lt_ideal_local({gens, Q, kUnbounded}).E, e);
    }
}

TEST(LocalLt, GeneratorOrderIndependent) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 40; ++k) {
    Staircase e = gen::staircase(rng, 4, 5);
    auto j = random_ideal(rng, e, Q);
    Staircase first = lt_ideal_local(j).E;
    std::shuffle(j.gens.begin(), j.gens.end(), rng);
    EXPECT_EQ(lt_ideal_local(j).E, first);
    j.gens.push_back(j.gens.front() * Scalar(Q, 3) + j.gens.back());
    EXPECT_EQ(lt_ideal_local(j).E, first);
  }
}

TEST(LocalLt, RejectsNonPrimary) {
  EXPECT_THROW(lt_ideal_local(parse_ideal("x^2", Q)), DomainError);
  EXPECT_THROW(lt_ideal_local(parse_ideal("x*y; x^2-x*y", Q)), DomainError);
}

TEST(LocalLt, CertificateIsSerializable) {
  LtResult r = lt_ideal_local(parse_ideal(fixtures().quartic.gens, Q));
  auto j = r.certificate.to_json();
  EXPECT_EQ(j.at("rank").get<int>(), r.certificate.rank);
  EXPECT_EQ(j.at("pivots").size(), r.certificate.pivots.size());
}

TEST(StandardBasis, ReducedBasisOfQuartic) {
  StandardBasis sb = reduced_standard_basis(parse_ideal(fixtures().quartic.gens, Q));
  EXPECT_EQ(printed(sb.elements), printed(fixtures().quartic.reduced_basis, Q));
  EXPECT_TRUE(verify_standard_basis(sb.elements, Q));
}

TEST(StandardBasis, Verify) {
  auto unreduced = parse_poly_list("x^4+x^3*y; x^3*y^2+y^5; x^2*y^2; x*y^2; y^2+x^3+x^2*y", Q);
  EXPECT_TRUE(verify_standard_basis(unreduced, Q));
  auto minors = parse_poly_list("x^3-x^2; x^2*y-x*y; x*y^3-y^3; y^5", Q);
  // A standard basis of the ideal, but its leading terms do not follow L.
  EXPECT_TRUE(verify_standard_basis(minors, Q));
  EXPECT_FALSE(verify_minor_system(Staircase({0, 1, 3, 5}), minors));
  EXPECT_TRUE(verify_minor_system(Staircase({0, 2, 2, 2, 2}), unreduced));
}

TEST(Division, GrauertContract) {
  std::mt19937_64 rng(29);
  StandardBasis sb = reduced_standard_basis(parse_ideal(fixtures().quartic.gens, Q));
  const int cap = sb.E.socle_degree() + 4;
  for (int k = 0; k < 100; ++k) {
    BiPoly f = gen::poly(rng, Q, 6, 5).with_cap(cap);
    if (f.is_zero()) continue;
    DivisionResult d = grauert_divide(f, sb, cap);
    BiPoly rebuilt = d.remainder;
    Monomial lf = f.leading_monomial(OrderKind::LocalDeg);
    for (std::size_t i = 0; i < d.quotients.size(); ++i) {
      if (d.quotients[i].is_zero()) continue;
      BiPoly qg = mul_truncated(d.quotients[i], sb.elements[i], cap);
      rebuilt += qg;
      if (!qg.is_zero())
        EXPECT_FALSE(greater(qg.leading_monomial(OrderKind::LocalDeg), lf, OrderKind::LocalDeg));
    }
    EXPECT_EQ(rebuilt.with_cap(cap), f);
    for (const auto& [m, c] : d.remainder.terms()) EXPECT_FALSE(sb.E.contains(m));
  }
}

TEST(Division, MembershipOfIdealElements) {
  std::mt19937_64 rng(31);
  auto j = parse_ideal(fixtures().quartic.gens, Q);
  StandardBasis sb = reduced_standard_basis(j);
  const int cap = sb.E.socle_degree() + 2;
  for (int k = 0; k < 50; ++k) {
    BiPoly f = mul_truncated(gen::poly(rng, Q, 3, 3), j.gens[0], cap) +
               mul_truncated(gen::poly(rng, Q, 3, 3), j.gens[1], cap);
    EXPECT_TRUE(grauert_divide(f, sb, cap).remainder.is_zero());
  }
  EXPECT_FALSE(grauert_divide(parse_poly("x^3", Q), sb, cap).remainder.is_zero());
}

TEST(Lex, OffFamilyPolynomialIdeal) {
  auto gens = parse_poly_list("x^3-x^2; x^2*y-x*y; x*y^3-y^3; y^5", Q);
  EXPECT_EQ(lt_ideal_lex(gens), Staircase({0, 1, 3, 5}));
  auto gb = buchberger_lex(gens);
  std::vector<Monomial> leads;
  for (const auto& g : gb) leads.push_back(g.leading_monomial(OrderKind::Lex));
  EXPECT_EQ(leads, Staircase({0, 1, 3, 5}).minimal_generators());
}

TEST(Lex, RejectsPositiveDimension) {
  EXPECT_THROW(buchberger_lex(parse_poly_list("x*y", Q)), DomainError);
}

TEST(Ideals, ContainmentAndEquality) {
  auto j = parse_ideal(fixtures().quartic.gens, Q);
  auto unreduced = parse_ideal("x^4+x^3*y; x^3*y^2+y^5; x^2*y^2; x*y^2; y^2+x^3+x^2*y", Q);
  EXPECT_TRUE(same_ideal(j, unreduced));
  EXPECT_EQ(ideal_fingerprint(j), ideal_fingerprint(unreduced));
  auto bigger = parse_ideal("x^3; y^2", Q);
  EXPECT_FALSE(ideal_contains(j, bigger));
}

TEST(Ideals, MinimalGeneratorIndices) {
  auto cover = parse_ideal(fixtures().cover.target, Q);
  EXPECT_EQ(minimal_generator_indices(cover).size(), 3u);
  auto redundant = parse_ideal("x^2; y^2; x^2+x*y^2; x*y", Q);
  EXPECT_EQ(minimal_generator_indices(redundant), (std::vector<std::size_t>{0, 1, 3}));
}
