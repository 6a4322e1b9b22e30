#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "platewave/assembly.hpp"

namespace pw {

/// Sparse Cholesky factorization of an SPD matrix, computed once and
/// reused across right-hand sides. Immutable after construction; solve()
/// has no side effects, so concurrent solves are safe.
class Factorization {
 public:
  /// Factor a symmetric matrix given its upper triangle (a full symmetric
  /// matrix works too; the lower part is ignored). Throws NotSpdError when
  /// a non-positive pivot is met.
  explicit Factorization(const Eigen::SparseMatrix<double>& upper);

  /// Solve A x = b. Throws InvalidArgumentError on length mismatch.
  Eigen::VectorXd solve(const Eigen::VectorXd& b) const;

  int order() const { return n_; }

 private:
  Eigen::SimplicialLLT<Eigen::SparseMatrix<double>, Eigen::Upper> llt_;
  int n_ = 0;
};

/// Factor the assembled (Dirichlet-eliminated) system matrix.
inline Factorization factor(const AssembledSystem& sys) { return Factorization(sys.A); }

/// Factor an arbitrary SPD matrix.
inline Factorization factor_matrix(const Eigen::SparseMatrix<double>& a) {
  return Factorization(a);
}

inline Eigen::VectorXd solve(const Factorization& f, const Eigen::VectorXd& b) {
  return f.solve(b);
}

}  // namespace pw
