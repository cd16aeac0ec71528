#include "tjm/cyclotomic.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using tjm::CycNum;
using tjm::Rational;
using tjm::RootCounts;
using tjm::RootSum;

TEST(Cyclotomic, PolynomialsMatchKnownValues) {
  EXPECT_EQ(tjm::cyclotomic_tables(1).polynomial, (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(tjm::cyclotomic_tables(4).polynomial, (std::vector<std::int64_t>{1, 0, 1}));
  EXPECT_EQ(tjm::cyclotomic_tables(12).polynomial, (std::vector<std::int64_t>{1, 0, -1, 0, 1}));
  EXPECT_EQ(tjm::cyclotomic_tables(15).polynomial,
            (std::vector<std::int64_t>{1, -1, 0, 1, -1, 1, 0, -1, 1}));
  for (std::uint32_t L : {24u, 78u, 105u, 120u, 240u})
    EXPECT_EQ(tjm::cyclotomic_tables(L).degree, tjm::euler_phi(L)) << L;
}

TEST(Cyclotomic, RootOfUnityRelations) {
  EXPECT_EQ(CycNum::root_of_unity(8, 1) * CycNum::root_of_unity(8, 3), CycNum(-1L));
  EXPECT_EQ(CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2), CycNum(-1L));
  EXPECT_EQ(CycNum::root_of_unity(5, 1).inv(), CycNum::root_of_unity(5, 4));
  EXPECT_EQ(CycNum::root_of_unity(24, 6), CycNum::root_of_unity(4, 1));
  CycNum sum(0L);
  for (int k = 0; k < 12; ++k) sum += CycNum::root_of_unity(12, k);
  EXPECT_TRUE(sum.is_zero());
}

TEST(Cyclotomic, ArithmeticAgreesWithFloatingPoint) {
  const std::uint32_t L = 120;
  CycNum a = CycNum::root_of_unity(L, 7) + CycNum(Rational(3, 2)) * CycNum::root_of_unity(L, 40) - CycNum::root_of_unity(L, 113);
  CycNum b = CycNum(2L) + CycNum::root_of_unity(L, 15) * CycNum(Rational(-5, 7));
  const auto na = oracle::numeric(a), nb = oracle::numeric(b);
  EXPECT_TRUE(oracle::close(na, oracle::zeta(L, 7) + 1.5 * oracle::zeta(L, 40) - oracle::zeta(L, 113)));
  EXPECT_TRUE(oracle::close(oracle::numeric(a * b), na * nb));
  EXPECT_TRUE(oracle::close(oracle::numeric(a + b), na + nb));
  EXPECT_TRUE(oracle::close(oracle::numeric(a / b), na / nb));
  EXPECT_TRUE(oracle::close(oracle::numeric(a.conj()), std::conj(na)));
  EXPECT_EQ(a * a.inv(), CycNum(1L));
  EXPECT_EQ(tjm::pow(b, 3), b * b * b);
}

TEST(Cyclotomic, ConjugateNormOfGaussianInteger) {
  const CycNum z = CycNum(1L) + CycNum::root_of_unity(4, 1);
  EXPECT_EQ(z.conj() * z, CycNum(2L));
}

TEST(Cyclotomic, GaloisActionIsARingMap) {
  const std::uint32_t L = 21;
  const CycNum a = CycNum::root_of_unity(L, 2) + CycNum(3L);
  const CycNum b = CycNum::root_of_unity(L, 5) - CycNum::root_of_unity(L, 1);
  for (std::int64_t s : {2, 4, 5, 20}) {
    EXPECT_EQ((a * b).galois(s), a.galois(s) * b.galois(s));
    EXPECT_TRUE(oracle::close(oracle::numeric(a.galois(s)), oracle::zeta(L, 2 * s) + 3.0));
  }
}

TEST(Cyclotomic, EmbeddingPreservesValue) {
  const CycNum a = CycNum::root_of_unity(6, 1) + CycNum(Rational(1, 3));
  const CycNum e = a.embed(24);
  EXPECT_EQ(e.order(), 24u);
  EXPECT_EQ(e, a);
  EXPECT_TRUE(oracle::close(oracle::numeric(e), oracle::numeric(a)));
}

TEST(Cyclotomic, CoefficientRoundTrip) {
  const CycNum a = CycNum::root_of_unity(78, 31) * CycNum(Rational(-4, 9)) + CycNum(1L);
  const auto coeffs = a.coefficients();
  EXPECT_EQ(coeffs.size(), tjm::euler_phi(78));
  EXPECT_EQ(CycNum::from_coefficients(78, coeffs), a);
}

TEST(Cyclotomic, DivisionByZeroThrows) { EXPECT_THROW(CycNum(0L).inv(), tjm::DivisionByZero); }

TEST(RootSum, ReductionIsAHomomorphism) {
  const std::uint32_t L = 24;
  const RootSum a = RootSum::root(L, 3) + RootSum::monomial(L, 17, Rational(2));
  const RootSum b = RootSum::root(L, 9) - RootSum(1L);
  EXPECT_EQ((a * b).reduce(), a.reduce() * b.reduce());
  EXPECT_EQ((a + b).reduce(), a.reduce() + b.reduce());
  EXPECT_TRUE(oracle::close(oracle::numeric(a.reduce()), oracle::zeta(L, 3) + 2.0 * oracle::zeta(L, 17)));
}

TEST(RootSum, EqualityIsFieldEquality) {
  RootSum all;
  for (int k = 0; k < 5; ++k) all += RootSum::root(5, k);
  EXPECT_FALSE(all.structurally_zero());
  EXPECT_EQ(all, RootSum());
  EXPECT_EQ(RootSum::root(8, 4), RootSum(-1L));
}

TEST(RootSum, RootExponentDetectsSingleRoots) {
  EXPECT_EQ(tjm::root_exponent(RootSum::root(24, 5)), 5u);
  EXPECT_EQ(tjm::root_exponent(RootSum::root(24, 17)), 17u);
  EXPECT_FALSE(tjm::root_exponent(RootSum::root(24, 1) + RootSum::root(24, 2)).has_value());
}

TEST(RootCounts, RotationAndReduction) {
  RootCounts a(12), b(12);
  a.add(1);
  a.add(5, 2);
  b.add_rotated(a, 3);
  EXPECT_EQ(b[4], 1);
  EXPECT_EQ(b[8], 2);
  EXPECT_EQ(b.reduce(), CycNum::root_of_unity(12, 4) + CycNum(2L) * CycNum::root_of_unity(12, 8));
  EXPECT_FALSE(b.single_exponent().has_value());
  RootCounts c(12);
  c.add(7, 3);
  EXPECT_EQ(c.single_exponent(), 7u);
}
