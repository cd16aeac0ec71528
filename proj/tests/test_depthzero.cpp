#include "tjm/depthzero.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using tjm::CycNum;
using tjm::DivisionParams;
using tjm::DxElement;
using tjm::FieldTower;
using tjm::TameRep;

namespace {

TameRep make_tau(std::uint32_t p, std::uint32_t n, std::uint32_t d, std::int64_t e, tjm::RootOfUnity pi = {1, 0}) {
  return TameRep(DivisionParams(FieldTower::build({p, 1, n, d, std::nullopt}), e, pi));
}

}  // namespace

TEST(DepthZero, InvariantsHold) {
  for (auto [p, n, d, e] : std::vector<std::array<std::int64_t, 4>>{{3, 2, 2, 1}, {3, 4, 2, 3}, {5, 2, 2, 7}, {3, 3, 3, 1}}) {
    const TameRep tau = make_tau(p, n, d, e, {4, 1});
    EXPECT_TRUE(tau.check_invariants(true).all()) << p << " " << n << " " << d << " " << e;
    EXPECT_EQ(tau.trace({tau.tower().one(n), 0}).reduce(), CycNum(d));
  }
}

TEST(DepthZero, TraceOnUnitsMatchesConjugateSum) {
  const std::uint64_t q = 3;
  const std::uint32_t n = 4, d = 2;
  const std::int64_t e = 3;
  const TameRep tau = make_tau(q, n, d, e);
  const std::uint64_t qd1 = q * q - 1;
  for (std::uint32_t k = 0; k + 1 < tau.tower().Q(); k += 5) {
    std::complex<double> expected = 0;
    std::uint64_t qi = 1;
    for (std::uint32_t i = 0; i < d; ++i, qi *= q) expected += oracle::zeta(static_cast<std::uint32_t>(qd1), static_cast<std::int64_t>((e * k * qi) % qd1));
    const CycNum tr = tau.trace({tau.tower().element(n, k), 0}).reduce();
    EXPECT_TRUE(oracle::close(oracle::numeric(tr), expected)) << k;
    EXPECT_TRUE(tau.trace({tau.tower().element(n, k), 1}).reduce().is_zero());
  }
}

TEST(DepthZero, CharacterIsIrreducible) {
  for (auto [p, n, d] : std::vector<std::array<std::uint32_t, 3>>{{3, 2, 2}, {3, 4, 2}, {3, 3, 3}}) {
    const TameRep tau = make_tau(p, n, d, 1, {4, 1});
    const auto group = tjm::enumerate_dx(tau.tower());
    ASSERT_EQ(group.size(), (tau.tower().Q() - 1) * n);
    double norm = 0;
    for (const DxElement& g : group) norm += std::norm(oracle::numeric(tau.trace(g).reduce()));
    EXPECT_NEAR(norm / static_cast<double>(group.size()), 1.0, 1e-9) << p << " " << n << " " << d;
  }
}

TEST(DepthZero, PiPowerIsLambda) {
  const TameRep tau = make_tau(3, 2, 2, 1, {4, 1});
  const auto& pd = tau.pi_power(2);
  const CycNum lambda = CycNum::root_of_unity(tau.L(), tau.params().lambda_exponent());
  EXPECT_EQ(pd(0, 0).reduce(), lambda);
  EXPECT_EQ(pd(1, 1).reduce(), lambda);
  EXPECT_TRUE(pd(0, 1).reduce().is_zero());
  // theta(-1) = (-1)^e, theta(pi_F) = i, m = 1
  EXPECT_EQ(lambda, CycNum::root_of_unity(4, 1));
}

TEST(DepthZero, NormCharactersAreHomomorphisms) {
  const TameRep tau = make_tau(3, 3, 3, 2, {2, 1});
  const auto group = tjm::enumerate_dx(tau.tower());
  const std::uint32_t L = tau.L();
  for (std::size_t a = 0; a < group.size(); a += 11)
    for (std::size_t b = 0; b < group.size(); b += 13) {
      const DxElement gh = group[a] * group[b];
      EXPECT_EQ(tjm::norm_character(tau.params(), gh),
                (tjm::norm_character(tau.params(), group[a]) + tjm::norm_character(tau.params(), group[b])) % L);
      EXPECT_EQ(tjm::omega_norm_character(tau, gh),
                (tjm::omega_norm_character(tau, group[a]) + tjm::omega_norm_character(tau, group[b])) % L);
    }
}

TEST(DepthZero, ExteriorSquareMethodsAgree) {
  const TameRep tau = make_tau(3, 3, 3, 1);
  const auto group = tjm::enumerate_dx(tau.tower());
  for (std::size_t a = 0; a < group.size(); a += 7) {
    const auto traces = tjm::ext_square_traces(tau, group[a]);
    EXPECT_EQ(traces.basis, traces.identity);
  }
}

TEST(DepthZero, MackeyTable) {
  const TameRep tau = make_tau(3, 3, 3, 1);
  for (std::int64_t y = 0; y < 3; ++y)
    for (std::int64_t y2 = 0; y2 < 3; ++y2) {
      const auto r = tjm::mackey_hom_dim(tau, y, y2);
      EXPECT_EQ(r.direct, y == y2 ? 1u : 0u) << y << "," << y2;
      EXPECT_EQ(r.twisted, (y + y2) % 3 == 0 ? 1u : 0u) << y << "," << y2;
    }
}

TEST(DepthZero, NonRegularThetaIsRejected) {
  EXPECT_THROW(make_tau(3, 2, 2, 4), tjm::PreconditionError);
  EXPECT_THROW(make_tau(3, 3, 3, 13), tjm::PreconditionError);
}
