#pragma once

#include <Eigen/Dense>

namespace fdcell {

/// Numeric rank: number of singular values above tol times the largest one.
template <typename Derived>
int numeric_rank(const Eigen::MatrixBase<Derived>& m, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = tol * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++r;
  return r;
}

/// Copy with every nonzero column rescaled to unit norm. Leaves the rank
/// unchanged while making a relative singular-value cutoff meaningful when
/// column scales differ by many orders of magnitude.
template <typename Derived>
Eigen::MatrixXd column_equilibrated(const Eigen::MatrixBase<Derived>& m) {
  Eigen::MatrixXd out = m;
  for (Eigen::Index c = 0; c < out.cols(); ++c) {
    const double n = out.col(c).norm();
    if (n > 0.0) out.col(c) /= n;
  }
  return out;
}

/// Orthogonal projector onto the complement of the column span of basis.
/// An empty basis gives the identity.
template <typename Derived>
Eigen::MatrixXd complement_projector(const Eigen::MatrixBase<Derived>& basis) {
  const Eigen::Index n = basis.rows();
  if (basis.cols() == 0) return Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd gram = basis.transpose() * basis;
  return Eigen::MatrixXd::Identity(n, n) -
         basis * gram.ldlt().solve(basis.transpose());
}

}  // namespace fdcell
