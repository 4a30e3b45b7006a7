#include "isospec/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/SparseCholesky>

namespace isospec {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Columns of S made M-orthonormal through the Gram matrix; nearly dependent
/// directions are dropped.
MatrixXd m_orthonormalize(const MatrixXd& s, const SparseMatrix& m) {
  if (s.cols() == 0) return s;
  const MatrixXd gram = s.transpose() * (m * s);
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (gram + gram.transpose()));
  const VectorXd d = es.eigenvalues();
  const double dmax = d.maxCoeff();
  std::vector<int> keep;
  for (int i = 0; i < d.size(); ++i)
    if (d[i] > 1e-13 * dmax) keep.push_back(i);
  MatrixXd out(s.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = s * es.eigenvectors().col(keep[k]) / std::sqrt(d[keep[k]]);
  return out;
}

/// Removes the span of the M-orthonormal basis Q from Y (twice, for stability).
void project_out(MatrixXd& y, const MatrixXd& q, const SparseMatrix& m) {
  if (q.cols() == 0) return;
  for (int pass = 0; pass < 2; ++pass) y -= q * (q.transpose() * (m * y));
}

void normalize_signs(MatrixXd& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    Eigen::Index idx = 0;
    v.col(j).cwiseAbs().maxCoeff(&idx);
    if (v(idx, j) < 0) v.col(j) *= -1;
  }
}

EigenResult dense_solve(const DiscreteOperatorPair& op, const EigenOptions& opt) {
  const MatrixXd k = MatrixXd(op.K);
  const MatrixXd m = MatrixXd(op.M);
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXd> es(0.5 * (k + k.transpose()), 0.5 * (m + m.transpose()));
  if (es.info() != Eigen::Success) throw std::runtime_error("lowest_eigenpairs: dense eigensolver failed");
  EigenResult r;
  r.vectors = es.eigenvectors().leftCols(opt.count);
  for (int i = 0; i < opt.count; ++i) {
    VectorXd x = r.vectors.col(i);
    x /= std::sqrt(x.dot(op.M * x));
    r.vectors.col(i) = x;
    r.report.eigenvalues.push_back(es.eigenvalues()[i]);
  }
  r.report.iterations = 1;
  return r;
}

}  // namespace

double residual_norm(const DiscreteOperatorPair& op, double lambda, const VectorXd& x) {
  const double mnorm = std::sqrt(x.dot(op.M * x));
  if (!(mnorm > 0)) throw std::domain_error("residual_norm: zero vector");
  return (op.K * x - lambda * (op.M * x)).norm() / mnorm;
}

std::vector<int> cluster_eigenvalues(const std::vector<double>& ev, double rel_gap) {
  std::vector<int> cluster;
  int id = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (i > 0) {
      const double scale = std::max(std::abs(ev[i]), std::abs(ev[i - 1]));
      if (ev[i] - ev[i - 1] > rel_gap * scale + 1e-12) ++id;
    }
    cluster.push_back(id);
  }
  return cluster;
}

EigenResult lowest_eigenpairs(const DiscreteOperatorPair& op, const EigenOptions& opt) {
  const int n = op.dof_count();
  if (opt.count < 1) throw std::invalid_argument("lowest_eigenpairs: count must be positive");
  if (opt.count > n) throw std::invalid_argument("lowest_eigenpairs: count exceeds the degrees of freedom");
  if (!(opt.tol > 0)) throw std::invalid_argument("lowest_eigenpairs: tolerance must be positive");

  const double mass_total = VectorXd::Ones(n).dot(op.M * VectorXd::Ones(n));
  double shift = opt.shift.value_or(-1.0 / mass_total);
  const int extra = opt.extra > 0 ? opt.extra : std::max(opt.count / 2, 8);
  const int p = std::min(n, opt.count + extra);

  EigenResult result;
  if (n <= opt.dense_threshold || 3 * p >= n) {
    result = dense_solve(op, opt);
  } else {
    Eigen::SimplicialLDLT<SparseMatrix> ldlt;
    auto factor = [&](double sigma) {
      ldlt.compute(SparseMatrix(op.K - sigma * op.M));
      return ldlt.info() == Eigen::Success && ldlt.vectorD().minCoeff() > 0;
    };
    if (!factor(shift)) throw std::runtime_error("lowest_eigenpairs: shifted matrix is not positive definite");
    auto apply = [&](const MatrixXd& x) {
      MatrixXd y = ldlt.solve(op.M * x);
      return y;
    };

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal;
    MatrixXd x(n, p);
    for (Eigen::Index j = 0; j < p; ++j)
      for (Eigen::Index i = 0; i < n; ++i) x(i, j) = normal(rng);
    x = m_orthonormalize(x, op.M);

    VectorXd theta;
    double best = std::numeric_limits<double>::infinity();
    double previous_low = std::numeric_limits<double>::quiet_NaN();
    bool reshifted = false;
    int since_best = 0;
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
      MatrixXd y = apply(x);
      project_out(y, x, op.M);
      y = m_orthonormalize(y, op.M);
      MatrixXd z = apply(y);
      project_out(z, x, op.M);
      project_out(z, y, op.M);
      z = m_orthonormalize(z, op.M);
      MatrixXd s(n, x.cols() + y.cols() + z.cols());
      s << x, y, z;

      const MatrixXd h = s.transpose() * (op.K * s);
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (h + h.transpose()));
      const int keep = std::min<int>(p, static_cast<int>(s.cols()));
      x = s * es.eigenvectors().leftCols(keep);
      theta = es.eigenvalues().head(keep);

      const MatrixXd r = op.K * x.leftCols(opt.count) - (op.M * x.leftCols(opt.count)) * theta.head(opt.count).asDiagonal();
      const double worst = r.colwise().norm().maxCoeff();
      if (worst <= opt.tol) {
        ++it;
        break;
      }
      // Once the lowest Ritz value has settled, move the shift just below the wanted band.
      const double spread = theta[opt.count - 1] - theta[0];
      if (!reshifted && std::abs(theta[0] - previous_low) <= 1e-8 * std::max(std::abs(theta[0]), spread)) {
        reshifted = true;
        const double candidate = theta[0] - 0.05 * spread - 1e-3 * std::abs(theta[0]);
        if (candidate > shift) {
          if (factor(candidate)) shift = candidate;
          else if (!factor(shift)) throw std::runtime_error("lowest_eigenpairs: refactorization failed");
        }
      }
      previous_low = theta[0];
      if (worst < 0.9 * best) {
        best = worst;
        since_best = 0;
      } else if (++since_best > 40) {
        ++it;
        break;
      }
    }
    result.vectors = x.leftCols(opt.count);
    for (int i = 0; i < opt.count; ++i) result.report.eigenvalues.push_back(theta[i]);
    result.report.iterations = it;
  }

  normalize_signs(result.vectors);
  auto& rep = result.report;
  rep.seed = opt.seed;
  rep.shift = shift;
  rep.tol = opt.tol;
  rep.mode = to_string(op.mode);
  for (int i = 0; i < opt.count; ++i) rep.residuals.push_back(residual_norm(op, rep.eigenvalues[i], result.vectors.col(i)));
  rep.cluster = cluster_eigenvalues(rep.eigenvalues);
  rep.converged = std::all_of(rep.residuals.begin(), rep.residuals.end(), [&](double r) { return r <= opt.tol; });
  if (!rep.converged) {
    const double worst = *std::max_element(rep.residuals.begin(), rep.residuals.end());
    throw NonConvergenceError("lowest_eigenpairs: residual " + std::to_string(worst) + " above tolerance after " +
                                  std::to_string(rep.iterations) + " iterations",
                              result);
  }
  return result;
}

}  // namespace isospec
