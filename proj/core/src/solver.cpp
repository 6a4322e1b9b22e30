#include "platewave/solver.hpp"

#include "platewave/errors.hpp"

namespace pw {

Factorization::Factorization(const Eigen::SparseMatrix<double>& upper)
    : n_(static_cast<int>(upper.rows())) {
  if (upper.rows() != upper.cols())
    throw InvalidArgumentError("Factorization: matrix must be square");
  llt_.compute(upper);
  if (llt_.info() != Eigen::Success)
    throw NotSpdError("Factorization: Cholesky failed, matrix is not SPD");
}

Eigen::VectorXd Factorization::solve(const Eigen::VectorXd& b) const {
  if (b.size() != n_)
    throw InvalidArgumentError("Factorization::solve: right-hand side length mismatch");
  return llt_.solve(b);
}

}  // namespace pw
