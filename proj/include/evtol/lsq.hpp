#pragma once

#include <Eigen/Dense>
#include <optional>

namespace evtol {

// Dense constrained least-squares building blocks, following the classic
// Lawson-Hanson chain: NNLS solves the nonnegative problem directly, LDP is
// reduced to NNLS, and LSI is reduced to LDP through a QR factorization.
// Problem sizes here are tiny (tens of rows, <= 20 columns), so plain dense
// factorizations per iteration are the right tradeoff.

struct NnlsResult {
  Eigen::VectorXd x;
  double residual_norm = 0.0;
  bool converged = false;
  int iterations = 0;
};

// Minimize ||A x - b|| subject to x >= 0. `max_iter` <= 0 picks a default
// proportional to the column count.
NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                int max_iter = 0);

struct LdpResult {
  Eigen::VectorXd x;
  // Lagrange multipliers of G x >= h, one per row, nonnegative.
  Eigen::VectorXd multipliers;
};

// Minimize ||x|| subject to G x >= h. Returns nullopt when the constraint
// set is empty (incompatible inequalities).
std::optional<LdpResult> least_distance(const Eigen::MatrixXd& G,
                                        const Eigen::VectorXd& h);

struct LsiResult {
  Eigen::VectorXd x;
  Eigen::VectorXd multipliers;
};

// Minimize ||A x - b|| subject to G x >= h. A must have full column rank;
// rows of G may be arbitrary (including none).
std::optional<LsiResult> constrained_lsq(const Eigen::MatrixXd& A,
                                         const Eigen::VectorXd& b,
                                         const Eigen::MatrixXd& G,
                                         const Eigen::VectorXd& h);

}  // namespace evtol
