#include "tjm/exact_linalg.hpp"

#include <gtest/gtest.h>

using tjm::CycNum;
using tjm::Matrix;

namespace {

Matrix<CycNum> zeros(Eigen::Index r, Eigen::Index c) {
  Matrix<CycNum> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = CycNum(0L);
  return m;
}

Matrix<CycNum> cyclic_shift(Eigen::Index n) {
  Matrix<CycNum> m = zeros(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m((i + 1) % n, i) = CycNum(1L);
  return m;
}

}  // namespace

TEST(ExactLinalg, RankOfKnownMatrices) {
  const std::uint32_t L = 5;
  Matrix<CycNum> vandermonde = zeros(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) vandermonde(i, j) = CycNum::root_of_unity(L, i * j);
  EXPECT_EQ(tjm::rank(vandermonde), 4u);

  Matrix<CycNum> outer = zeros(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) outer(i, j) = CycNum::root_of_unity(12, i) * (CycNum(1L) + CycNum::root_of_unity(12, j));
  EXPECT_EQ(tjm::rank(outer), 1u);

  Matrix<CycNum> hidden = zeros(2, 2);
  hidden(0, 0) = CycNum::root_of_unity(3, 1) + CycNum::root_of_unity(3, 2);
  hidden(0, 1) = CycNum(1L);
  hidden(1, 0) = CycNum(1L);
  hidden(1, 1) = CycNum(-1L);
  EXPECT_EQ(tjm::rank(hidden), 1u);
  EXPECT_EQ(tjm::rank(zeros(3, 2)), 0u);
}

TEST(ExactLinalg, IntertwinersOfCyclicGroup) {
  const Matrix<CycNum> shift = cyclic_shift(3);
  EXPECT_EQ(tjm::intertwiner_dimension({shift}, {shift}), 3u);

  Matrix<CycNum> trivial = zeros(1, 1);
  trivial(0, 0) = CycNum(1L);
  Matrix<CycNum> omega = zeros(1, 1);
  omega(0, 0) = CycNum::root_of_unity(3, 1);
  EXPECT_EQ(tjm::intertwiner_dimension({shift}, {trivial}), 1u);
  EXPECT_EQ(tjm::intertwiner_dimension({shift}, {omega}), 1u);
  EXPECT_EQ(tjm::intertwiner_dimension({trivial}, {omega}), 0u);
}

TEST(ExactLinalg, KroneckerAndPowers) {
  const Matrix<CycNum> shift = cyclic_shift(3);
  const Matrix<CycNum> k = tjm::kronecker(shift, shift);
  EXPECT_EQ(k.rows(), 9);
  EXPECT_EQ(tjm::rank(k), 9u);
  const Matrix<CycNum> cube = tjm::matrix_power(shift, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(cube(i, j), CycNum(i == j ? 1L : 0L));
}
