#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec/eigensolver.hpp"

namespace isospec {

struct IndexConvergence {
  std::vector<double> values;  // one per refinement level
  double extrapolated = 0.0;
  double error_estimate = 0.0;
  double observed_order = 0.0;
  bool monotone = false;
};

struct ConvergenceResult {
  std::vector<int> refinements;
  std::vector<IndexConvergence> per_index;

  std::vector<double> extrapolated() const;
  std::vector<double> error_estimates() const;
};

/// Richardson extrapolation assuming O(h²) error on the last two level pairs.
/// The extrapolated value uses the finest pair and the error estimate is its
/// distance to the value from the coarser pair. Non-monotone sequences keep
/// the finest value and report the last difference as the error.
ConvergenceResult analyze_convergence(const std::vector<int>& refinements,
                                      const std::vector<std::vector<double>>& values_per_level);

/// Runs `solve(k)` for each refinement (ascending, at least three levels).
ConvergenceResult convergence_study(const std::vector<int>& refinements,
                                    const std::function<std::vector<double>(int)>& solve);

/// The first `count` eigenvalues after dropping those below zero_tol · max|λ|.
std::vector<double> nonzero_eigenvalues(const std::vector<double>& eigenvalues, int count, double zero_tol = 1e-8);

enum class Verdict { Pass, Distinguished, Inconclusive };

std::string to_string(Verdict v);

struct ComparisonEntry {
  int index = 0;
  double a = 0.0;
  double b = 0.0;
  double rel_diff = 0.0;
  double error_estimate = 0.0;
};

struct Comparison {
  std::vector<ComparisonEntry> entries;
  double max_rel_diff = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// PASS if every relative difference is within rel_tol; DISTINGUISHED if some
/// index differs by more than rel_tol and by more than 10× the summed error
/// estimates; INCONCLUSIVE otherwise.
Comparison compare_spectra(const std::vector<double>& a, const std::vector<double>& b, double rel_tol,
                           const std::vector<double>& err_a = {}, const std::vector<double>& err_b = {});
Comparison compare_spectra(const SpectrumReport& a, const SpectrumReport& b, int count, double rel_tol);
Comparison compare_extrapolated(const ConvergenceResult& a, const ConvergenceResult& b, double rel_tol);

double relative_difference(double a, double b);

nlohmann::json to_json(const ConvergenceResult& c);
nlohmann::json to_json(const Comparison& c);

}  // namespace isospec
