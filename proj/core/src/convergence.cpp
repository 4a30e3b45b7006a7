#include "isospec/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace isospec {

std::vector<double> ConvergenceResult::extrapolated() const {
  std::vector<double> v;
  for (const auto& p : per_index) v.push_back(p.extrapolated);
  return v;
}

std::vector<double> ConvergenceResult::error_estimates() const {
  std::vector<double> v;
  for (const auto& p : per_index) v.push_back(p.error_estimate);
  return v;
}

ConvergenceResult analyze_convergence(const std::vector<int>& ks, const std::vector<std::vector<double>>& values) {
  if (ks.size() < 3) throw std::invalid_argument("convergence: at least three refinement levels are required");
  if (values.size() != ks.size()) throw std::invalid_argument("convergence: one value list per level required");
  for (std::size_t i = 1; i < ks.size(); ++i)
    if (ks[i] <= ks[i - 1]) throw std::invalid_argument("convergence: refinements must be ascending");
  std::size_t count = values[0].size();
  for (const auto& v : values) count = std::min(count, v.size());

  ConvergenceResult out;
  out.refinements = ks;
  const std::size_t L = ks.size();
  for (std::size_t i = 0; i < count; ++i) {
    IndexConvergence c;
    for (const auto& v : values) c.values.push_back(v[i]);
    const double l0 = c.values[L - 3], l1 = c.values[L - 2], l2 = c.values[L - 1];
    const double r1 = static_cast<double>(ks[L - 2]) / ks[L - 3];
    const double r2 = static_cast<double>(ks[L - 1]) / ks[L - 2];
    const double d1 = l0 - l1, d2 = l1 - l2;
    c.monotone = d1 != 0 && d2 != 0 && (d1 > 0) == (d2 > 0);
    if (c.monotone) {
      const double coarse = (r1 * r1 * l1 - l0) / (r1 * r1 - 1);
      const double fine = (r2 * r2 * l2 - l1) / (r2 * r2 - 1);
      c.extrapolated = fine;
      c.error_estimate = std::abs(fine - coarse);
      c.observed_order = std::log(std::abs(d1) / std::abs(d2)) / std::log(r2);
    } else {
      c.extrapolated = l2;
      c.error_estimate = std::abs(d2);
      c.observed_order = std::nan("");
    }
    out.per_index.push_back(c);
  }
  return out;
}

ConvergenceResult convergence_study(const std::vector<int>& ks, const std::function<std::vector<double>(int)>& solve) {
  std::vector<std::vector<double>> values;
  for (int k : ks) values.push_back(solve(k));
  return analyze_convergence(ks, values);
}

std::vector<double> nonzero_eigenvalues(const std::vector<double>& ev, int count, double zero_tol) {
  double scale = 0;
  for (double v : ev) scale = std::max(scale, std::abs(v));
  std::vector<double> out;
  for (double v : ev) {
    if (std::abs(v) <= zero_tol * scale) continue;
    if (static_cast<int>(out.size()) == count) break;
    out.push_back(v);
  }
  if (static_cast<int>(out.size()) < count)
    throw std::invalid_argument("nonzero_eigenvalues: fewer than " + std::to_string(count) + " nonzero eigenvalues");
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Distinguished: return "DISTINGUISHED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0 ? 0.0 : std::abs(a - b) / scale;
}

Comparison compare_spectra(const std::vector<double>& a, const std::vector<double>& b, double rel_tol,
                           const std::vector<double>& err_a, const std::vector<double>& err_b) {
  if (a.size() != b.size()) throw std::invalid_argument("compare_spectra: mismatched counts");
  if ((!err_a.empty() && err_a.size() != a.size()) || (!err_b.empty() && err_b.size() != b.size()))
    throw std::invalid_argument("compare_spectra: error estimates do not match the spectra");
  Comparison c;
  bool all_pass = true;
  bool distinguished = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ComparisonEntry e;
    e.index = static_cast<int>(i);
    e.a = a[i];
    e.b = b[i];
    e.rel_diff = relative_difference(a[i], b[i]);
    e.error_estimate = (err_a.empty() ? 0.0 : err_a[i]) + (err_b.empty() ? 0.0 : err_b[i]);
    c.max_rel_diff = std::max(c.max_rel_diff, e.rel_diff);
    if (e.rel_diff > rel_tol) {
      all_pass = false;
      if (std::abs(a[i] - b[i]) > 10 * e.error_estimate) distinguished = true;
    }
    c.entries.push_back(e);
  }
  c.verdict = all_pass ? Verdict::Pass : (distinguished ? Verdict::Distinguished : Verdict::Inconclusive);
  return c;
}

Comparison compare_spectra(const SpectrumReport& a, const SpectrumReport& b, int count, double rel_tol) {
  if (static_cast<int>(a.eigenvalues.size()) < count || static_cast<int>(b.eigenvalues.size()) < count)
    throw std::invalid_argument("compare_spectra: mismatched counts");
  return compare_spectra(std::vector<double>(a.eigenvalues.begin(), a.eigenvalues.begin() + count),
                         std::vector<double>(b.eigenvalues.begin(), b.eigenvalues.begin() + count), rel_tol);
}

Comparison compare_extrapolated(const ConvergenceResult& a, const ConvergenceResult& b, double rel_tol) {
  return compare_spectra(a.extrapolated(), b.extrapolated(), rel_tol, a.error_estimates(), b.error_estimates());
}

nlohmann::json to_json(const ConvergenceResult& c) {
  nlohmann::json j;
  j["refinements"] = c.refinements;
  nlohmann::json idx = nlohmann::json::array();
  for (const auto& p : c.per_index) {
    idx.push_back({{"values", p.values},
                   {"extrapolated", p.extrapolated},
                   {"error_estimate", p.error_estimate},
                   {"observed_order", std::isfinite(p.observed_order) ? nlohmann::json(p.observed_order) : nlohmann::json()},
                   {"monotone", p.monotone}});
  }
  j["per_index"] = idx;
  return j;
}

nlohmann::json to_json(const Comparison& c) {
  nlohmann::json j;
  j["verdict"] = to_string(c.verdict);
  j["max_rel_diff"] = c.max_rel_diff;
  nlohmann::json e = nlohmann::json::array();
  for (const auto& x : c.entries)
    e.push_back({{"index", x.index}, {"a", x.a}, {"b", x.b}, {"rel_diff", x.rel_diff}, {"error_estimate", x.error_estimate}});
  j["entries"] = e;
  return j;
}

}  // namespace isospec
