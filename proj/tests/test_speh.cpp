#include "tjm/speh.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using tjm::CycNum;
using tjm::DivisionParams;
using tjm::DxElement;
using tjm::FieldTower;
using tjm::FqElem;
using tjm::Mat2;
using tjm::PSModel;
using tjm::RootSum;
using tjm::TameRep;
using tjm::Vector;
using tjm::WhittakerSpace;

namespace {

struct Fixture {
  std::shared_ptr<const FieldTower> tower;
  PSModel model;

  Fixture(std::uint32_t p, std::uint32_t n, std::uint32_t d, std::int64_t e, std::int64_t e2, tjm::RootOfUnity pi)
      : tower(FieldTower::build({p, 1, n, d, std::nullopt})),
        model(TameRep(DivisionParams(tower, e, pi)), TameRep(DivisionParams(tower, e2, pi))) {}
};

Vector<RootSum> test_vector(const PSModel& model) {
  Vector<RootSum> v(model.dimension());
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = RootSum::root(model.L(), (7 * k + 3) % model.L());
  return v;
}

}  // namespace

TEST(PrincipalSeries, DimensionAndBlocks) {
  const Fixture f(3, 2, 2, 1, 1, {1, 0});
  EXPECT_EQ(f.model.dimension(), 40u);
  EXPECT_EQ(f.model.block_count(), 4u);
  EXPECT_TRUE(f.model.diagonal());
  EXPECT_EQ(f.model.block_index(-1, 2), f.model.block_index(1, 0));
}

TEST(PrincipalSeries, RightTranslationIsAnAction) {
  const Fixture f(3, 2, 2, 1, 1, {4, 1});
  const FieldTower& t = *f.tower;
  const FqElem g = t.generator(2);
  const Mat2 x{g, g.pow(3), t.one(2), t.zero(2)};
  const Mat2 y{g.pow(6), t.one(2), g, g.pow(5)};
  const Vector<RootSum> v = test_vector(f.model);
  EXPECT_EQ(f.model.act(x * y, v), f.model.act(x, f.model.act(y, v)));
}

TEST(PrincipalSeries, EvaluationIsBorelEquivariant) {
  const Fixture f(3, 2, 2, 1, 3, {1, 0});
  const FieldTower& t = *f.tower;
  const Vector<RootSum> v = test_vector(f.model);
  const FqElem g = t.generator(2);
  const Mat2 b{g.pow(2), g, t.zero(2), g.pow(7)};
  for (std::uint32_t block = 0; block < f.model.block_count(); ++block) {
    const Vector<RootSum> local = f.model.block_of(v, block);
    const RootSum chi = RootSum::root(f.model.L(), f.model.block_character(block, b));
    for (std::uint32_t k = 0; k < f.model.block_size(); ++k)
      EXPECT_EQ(f.model.evaluate(block, local, b * f.model.cosets().rep(k)), chi * local(k));
  }
}

TEST(Whittaker, VectorAndEigenEquation) {
  const Fixture f(3, 2, 2, 1, 1, {1, 0});
  const WhittakerSpace W(f.model);
  const auto& w = W.whittaker_vector();
  const tjm::AddChar psi(*f.tower, 2);
  EXPECT_TRUE(w(0).reduce().is_zero());
  for (std::uint32_t k = 1; k < f.model.block_size(); ++k) EXPECT_EQ(w(k).reduce(), psi(f.model.cosets().x_of(k), f.model.L()));
  for (const Mat2& u : tjm::enumerate_unipotent(*f.tower)) {
    const RootSum factor = RootSum::root(f.model.L(), psi.value_exponent(u.b, f.model.L()));
    for (std::uint32_t block = 0; block < f.model.block_count(); ++block) {
      const Vector<RootSum> moved = f.model.act_block(block, u, w);
      for (Eigen::Index k = 0; k < w.size(); ++k) EXPECT_EQ(moved(k), factor * w(k));
    }
  }
}

TEST(Whittaker, ProjectorsHaveRankOne) {
  for (auto [p, n, d] : std::vector<std::array<std::uint32_t, 3>>{{3, 2, 2}, {5, 2, 2}, {3, 3, 3}}) {
    const Fixture f(p, n, d, 1, 1, {1, 0});
    const WhittakerSpace W(f.model);
    EXPECT_EQ(W.dimension(), d * d);
    for (const auto& c : W.projector_checks()) EXPECT_TRUE(c.ok());
    EXPECT_TRUE(W.theta_monomial());
    EXPECT_TRUE(W.unit_eigen());
  }
}

TEST(Whittaker, CharacterIsSquareOfTau) {
  const Fixture f(3, 2, 2, 3, 3, {4, 1});
  const WhittakerSpace W(f.model);
  for (const DxElement& g : tjm::enumerate_dx(*f.tower)) {
    const CycNum tr = f.model.left().trace(g).reduce();
    const CycNum lhs = W.dx_character(g).reduce();
    EXPECT_EQ(lhs, tr * tr);
    EXPECT_TRUE(oracle::close(oracle::numeric(lhs), std::pow(oracle::numeric(tr), 2)));
  }
  EXPECT_EQ(W.dx_character({f.tower->one(2), 0}).reduce(), CycNum(4L));
}

TEST(IntertwiningT, EigenvalueOnWhittakerVector) {
  const Fixture f(3, 2, 2, 1, 1, {1, 0});
  const WhittakerSpace W(f.model);
  const tjm::IntertwiningT T(f.model);
  EXPECT_TRUE(T.block_stable({W.whittaker_vector()}));
  const auto power = T.power_2m();
  EXPECT_TRUE(power.scalar);
  EXPECT_EQ(power.value, CycNum(1L));
  const auto eigen = T.eigen_on(W.whittaker_vector());
  EXPECT_TRUE(eigen.eigenvector);
  EXPECT_EQ(eigen.eigenvalue, CycNum(-1L));
}

TEST(IntertwiningT, RequiresQuadraticDiagonalModel) {
  const Fixture cubic(3, 3, 3, 1, 1, {1, 0});
  EXPECT_ANY_THROW(tjm::IntertwiningT{cubic.model});
  const Fixture mixed(3, 2, 2, 1, 3, {1, 0});
  EXPECT_ANY_THROW(tjm::IntertwiningT{mixed.model});
}
