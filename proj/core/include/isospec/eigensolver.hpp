#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "isospec/operators.hpp"

namespace isospec {

struct EigenOptions {
  int count = 10;
  /// Bound on ‖Kx − λMx‖₂ / ‖x‖_M for every returned pair.
  double tol = 1e-9;
  std::uint64_t seed = 20240601;
  /// Shift for the inverse iteration; defaults to −1 / (1ᵀM1).
  std::optional<double> shift;
  int max_iterations = 400;
  /// Extra block vectors beyond `count`; 0 picks max(count/2, 8).
  int extra = 0;
  /// Problems with at most this many degrees of freedom are solved densely.
  int dense_threshold = 600;
};

struct SpectrumReport {
  std::vector<double> eigenvalues;
  std::vector<double> residuals;
  std::vector<int> cluster;
  std::string mesh_id;
  int refinement = 0;
  std::string bc;
  std::string mode;
  int iterations = 0;
  std::uint64_t seed = 0;
  double shift = 0.0;
  double tol = 0.0;
  bool converged = false;
};

struct EigenResult {
  SpectrumReport report;
  /// One M-normalized eigenvector per column, in dof numbering.
  Eigen::MatrixXd vectors;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, EigenResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const EigenResult& partial() const { return partial_; }

 private:
  EigenResult partial_;
};

/// The `count` smallest eigenpairs of K x = λ M x by block Krylov shift-invert
/// iteration with Rayleigh-Ritz extraction, started from a seeded random block.
/// Throws NonConvergenceError with the best pairs found when the budget runs out.
EigenResult lowest_eigenpairs(const DiscreteOperatorPair& op, const EigenOptions& options);

double residual_norm(const DiscreteOperatorPair& op, double lambda, const Eigen::VectorXd& x);

/// Consecutive eigenvalues closer than rel_gap · max(|λ|) share a cluster id.
std::vector<int> cluster_eigenvalues(const std::vector<double>& eigenvalues, double rel_gap = 1e-6);

}  // namespace isospec
