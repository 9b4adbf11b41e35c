#pragma once

#include <Eigen/Dense>
#include <vector>

namespace scx {

/// Dense symmetric eigensolver: cyclic Jacobi, run to full convergence with a
/// deterministic sweep order. Eigenvalues come back ascending. When `vectors`
/// is non-null the columns of *vectors are the matching eigenvectors.
std::vector<double> jacobi_eigenvalues(Eigen::MatrixXd a, Eigen::MatrixXd* vectors = nullptr);

/// Largest absolute asymmetry |a_ij - a_ji|.
double symmetry_defect(const Eigen::MatrixXd& a);

}  // namespace scx
