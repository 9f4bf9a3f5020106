#include "evtol/lsq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace evtol {

NnlsResult nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b,
                int max_iter) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  NnlsResult res;
  res.x = Eigen::VectorXd::Zero(n);
  if (n == 0) {
    res.converged = true;
    res.residual_norm = b.norm();
    return res;
  }
  if (max_iter <= 0) max_iter = 3 * n + 30;

  const double eps = std::numeric_limits<double>::epsilon();
  const double norm_a = A.cwiseAbs().colwise().sum().maxCoeff();
  const double wtol = 10.0 * eps * norm_a * static_cast<double>(std::max(m, n));

  std::vector<bool> passive(n, false);
  std::vector<int> idx;
  idx.reserve(n);

  auto solve_passive = [&](Eigen::VectorXd* z) {
    idx.clear();
    for (int j = 0; j < n; ++j) {
      if (passive[j]) idx.push_back(j);
    }
    Eigen::MatrixXd Ap(m, static_cast<int>(idx.size()));
    for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
      Ap.col(k) = A.col(idx[k]);
    }
    *z = Ap.colPivHouseholderQr().solve(b);
  };

  int inner_budget = 10 * max_iter;
  for (int iter = 0; iter < max_iter; ++iter) {
    res.iterations = iter + 1;
    const Eigen::VectorXd w = A.transpose() * (b - A * res.x);

    int t = -1;
    double wmax = wtol;
    for (int j = 0; j < n; ++j) {
      if (!passive[j] && w(j) > wmax) {
        wmax = w(j);
        t = j;
      }
    }
    if (t < 0) {
      res.converged = true;
      break;
    }
    passive[t] = true;

    Eigen::VectorXd z;
    while (inner_budget-- > 0) {
      solve_passive(&z);
      bool all_positive = true;
      for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
        if (z(k) <= 0.0) {
          all_positive = false;
          break;
        }
      }
      if (all_positive) {
        res.x.setZero();
        for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
          res.x(idx[k]) = z(k);
        }
        break;
      }
      // Step back along the segment to the first coordinate that hits zero,
      // then retire every passive coordinate that just reached the boundary.
      double alpha = std::numeric_limits<double>::infinity();
      for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
        if (z(k) <= 0.0) {
          const double denom = res.x(idx[k]) - z(k);
          if (denom > 0.0) {
            alpha = std::min(alpha, res.x(idx[k]) / denom);
          } else {
            alpha = 0.0;
          }
        }
      }
      if (!std::isfinite(alpha)) alpha = 0.0;
      for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
        res.x(idx[k]) += alpha * (z(k) - res.x(idx[k]));
      }
      for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
        if (res.x(idx[k]) <= wtol) {
          res.x(idx[k]) = 0.0;
          passive[idx[k]] = false;
        }
      }
    }
    if (inner_budget <= 0) break;
  }

  res.residual_norm = (b - A * res.x).norm();
  return res;
}

std::optional<LdpResult> least_distance(const Eigen::MatrixXd& G,
                                        const Eigen::VectorXd& h) {
  const int m = static_cast<int>(G.rows());
  const int n = static_cast<int>(G.cols());
  if (m == 0) {
    LdpResult out;
    out.x = Eigen::VectorXd::Zero(n);
    out.multipliers = Eigen::VectorXd(0);
    return out;
  }

  // min ||x|| s.t. Gx >= h maps onto NNLS over the dual: stack G^T on top of
  // h^T, aim at the last unit vector, and read the primal point off the
  // residual. A vanishing residual certifies that the inequality set is empty.
  Eigen::MatrixXd E(n + 1, m);
  E.topRows(n) = G.transpose();
  E.row(n) = h.transpose();
  Eigen::VectorXd f = Eigen::VectorXd::Zero(n + 1);
  f(n) = 1.0;

  const NnlsResult nn = nnls(E, f);
  const Eigen::VectorXd r = E * nn.x - f;
  const double rsq = r.squaredNorm();
  if (rsq <= 1e-24 || !(r(n) < 0.0)) {
    return std::nullopt;
  }

  LdpResult out;
  out.x.resize(n);
  for (int j = 0; j < n; ++j) {
    out.x(j) = -r(j) / r(n);
  }
  out.multipliers = nn.x / rsq;
  return out;
}

std::optional<LsiResult> constrained_lsq(const Eigen::MatrixXd& A,
                                         const Eigen::VectorXd& b,
                                         const Eigen::MatrixXd& G,
                                         const Eigen::VectorXd& h) {
  const int n = static_cast<int>(A.cols());
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(A);
  Eigen::MatrixXd R = qr.matrixQR()
                          .topLeftCorner(n, n)
                          .triangularView<Eigen::Upper>();

  double diag_max = 0.0;
  for (int i = 0; i < n; ++i) diag_max = std::max(diag_max, std::abs(R(i, i)));
  for (int i = 0; i < n; ++i) {
    if (std::abs(R(i, i)) <= 1e-13 * diag_max) {
      return std::nullopt;  // rank deficient, transformation breaks down
    }
  }

  const Eigen::VectorXd qtb = (qr.householderQ().transpose() * b).head(n);

  if (G.rows() == 0) {
    LsiResult out;
    out.x = R.triangularView<Eigen::Upper>().solve(qtb);
    out.multipliers = Eigen::VectorXd(0);
    return out;
  }

  // Substitute y = Rx - Q^T b so the objective becomes ||y||, then hand the
  // transformed inequalities to LDP. Multipliers are invariant under the
  // change of variables, so they are returned untouched.
  const Eigen::MatrixXd mt =
      R.transpose().triangularView<Eigen::Lower>().solve(
          Eigen::MatrixXd(G.transpose()));
  const Eigen::MatrixXd M = mt.transpose();
  const Eigen::VectorXd h2 = h - M * qtb;

  const auto ldp = least_distance(M, h2);
  if (!ldp) return std::nullopt;

  LsiResult out;
  out.x = R.triangularView<Eigen::Upper>().solve(ldp->x + qtb);
  out.multipliers = ldp->multipliers;
  return out;
}

}  // namespace evtol
