#pragma once

// Exact linear algebra over the cyclotomic scalars.

#include "tjm/cyclotomic.hpp"

#include <cstddef>

namespace tjm {

/// Rank by sparse Gaussian elimination. Pivots are taken from the sparsest
/// remaining row and, within it, the entry with the fewest power-basis terms,
/// so singleton rows and root-of-unity pivots are consumed first.
std::size_t rank(const Matrix<CycNum>& m);

/// Dimension of { X : X A_k = B_k X for all k } for square families A_k
/// (dim n) and B_k (dim r).
std::size_t intertwiner_dimension(const std::vector<Matrix<CycNum>>& source,
                                  const std::vector<Matrix<CycNum>>& target);

template <typename Scalar>
Matrix<Scalar> kronecker(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

template <typename Scalar>
Matrix<Scalar> matrix_power(const Matrix<Scalar>& a, std::int64_t e) {
  Matrix<Scalar> result = Matrix<Scalar>::Identity(a.rows(), a.cols());
  for (std::int64_t i = 0; i < e; ++i) result = result * a;
  return result;
}

}  // namespace tjm
