#pragma once

#include <utility>

#include <Eigen/Core>

namespace hprop {

/// Rank by Gaussian elimination with exact zero tests. Intended for exact
/// scalars (rationals); floating-point input gets no tolerance handling.
template <typename Derived>
int exact_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = rank; r < rows; ++r) {
      if (m(r, c) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) m.row(pivot).swap(m.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (m(r, c) == Scalar(0)) continue;
      const Scalar factor = m(r, c) / m(rank, c);
      m.row(r) -= factor * m.row(rank);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

/// Affine dimension of the convex hull of the columns: rank of {p_j - p_0}.
/// Returns -1 for an empty point set.
template <typename Derived>
int affine_dimension(const Eigen::MatrixBase<Derived>& points) {
  if (points.cols() == 0) return -1;
  auto diffs = (points.rightCols(points.cols() - 1).colwise() - points.col(0)).eval();
  return exact_rank(diffs);
}

}  // namespace hprop
