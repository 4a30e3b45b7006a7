#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "isospec_cli/config.hpp"

namespace isospec::cli {

struct StageResult {
  std::string name;
  std::string verdict;
  std::string expected;  // empty when the config sets no expectation
  bool matches = true;
  nlohmann::json detail;
};

struct PipelineResult {
  std::vector<StageResult> stages;
  bool ok = false;
  nlohmann::json report;
};

/// A stage threw; the pipeline stops there.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& what);
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

/// Stages in order: triple, graphs, orientability, cone_points, neumann,
/// transplant, dirichlet. Verdicts:
///   triple          PASS | FAIL
///   orientability   "<M1>,<M2>" as true/false
///   cone_points     NONE | ONE | BOTH
///   neumann         PASS | DISTINGUISHED | INCONCLUSIVE
///   transplant      PASS | FAIL | SKIPPED
///   dirichlet       PASS | DISTINGUISHED | INCONCLUSIVE
/// `ok` holds when every verdict named in cfg.expected matches.
PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& log);

}  // namespace isospec::cli
