#include <filesystem>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isospec/finite_group.hpp"
#include "isospec/mesh_io.hpp"
#include "isospec/rep_theory.hpp"
#include "isospec/schreier.hpp"
#include "isospec/spectrum_io.hpp"
#include "isospec/transplant.hpp"
#include "isospec_cli/commands.hpp"
#include "isospec_cli/output.hpp"
#include "isospec_cli/pipeline.hpp"

namespace isospec::cli {

namespace {

const std::set<std::string> kStages{"triple", "orientability", "cone_points", "neumann", "transplant", "dirichlet"};

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::string comparison_table(const Comparison& c, const std::vector<double>& err_a, const std::vector<double>& err_b) {
  std::ostringstream os;
  os << "# index lambda_1 lambda_2 rel_diff" << (err_a.empty() ? "" : " err_1 err_2") << "\n";
  for (std::size_t i = 0; i < c.entries.size(); ++i) {
    const auto& e = c.entries[i];
    os << e.index << ' ' << num(e.a) << ' ' << num(e.b) << ' ' << num(e.rel_diff);
    if (!err_a.empty()) os << ' ' << num(err_a[i]) << ' ' << num(err_b[i]);
    os << "\n";
  }
  return os.str();
}

std::string levels_table(const ConvergenceResult& a, const ConvergenceResult& b) {
  std::ostringstream os;
  os << "# k";
  for (std::size_t i = 0; i < a.per_index.size(); ++i) os << " lambda" << i << "_1 lambda" << i << "_2";
  os << "\n";
  for (std::size_t l = 0; l < a.refinements.size(); ++l) {
    os << a.refinements[l];
    for (std::size_t i = 0; i < a.per_index.size(); ++i)
      os << ' ' << num(a.per_index[i].values[l]) << ' ' << num(b.per_index[i].values[l]);
    os << "\n";
  }
  return os.str();
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& log) : cfg_(cfg), log_(log) {}

  PipelineResult run() {
    for (const auto& [stage, v] : cfg_.expected)
      if (!kStages.count(stage)) throw std::invalid_argument("expected verdict for unknown stage '" + stage + "'");
    if (!cfg_.out.empty()) std::filesystem::create_directories(cfg_.out);

    stage("triple", [&] { return triple(); });
    stage("graphs", [&] { return graphs(); });
    stage("orientability", [&] { return orientability(); });
    stage("cone_points", [&] { return surfaces(); });
    stage("neumann", [&] { return neumann(); });
    stage("transplant", [&] { return transplant(); });
    stage("dirichlet", [&] { return dirichlet(); });

    result_.ok = true;
    for (const auto& s : result_.stages) result_.ok = result_.ok && s.matches;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& s : result_.stages)
      stages.push_back({{"stage", s.name},
                        {"verdict", s.verdict},
                        {"expected", s.expected.empty() ? nlohmann::json() : nlohmann::json(s.expected)},
                        {"matches", s.matches},
                        {"detail", s.detail}});
    result_.report = {{"settings", settings()}, {"stages", stages}, {"ok", result_.ok}};
    if (!cfg_.out.empty()) write_artifact_json(cfg_.out, "report.json", result_.report);
    log_ << (result_.ok ? "pipeline: all expected verdicts matched\n" : "pipeline: verdict mismatch\n");
    return result_;
  }

 private:
  struct Outcome {
    std::string verdict;
    nlohmann::json detail;
  };

  template <class F>
  void stage(const std::string& name, F&& body) {
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      throw StageError(name, e.what());
    }
    StageResult s{name, o.verdict, "", true, o.detail};
    if (auto it = cfg_.expected.find(name); it != cfg_.expected.end()) {
      s.expected = it->second;
      s.matches = s.verdict == s.expected;
    }
    log_ << "[" << name << "] " << s.verdict;
    if (!s.expected.empty()) log_ << " (expected " << s.expected << (s.matches ? ", ok)" : ", MISMATCH)");
    log_ << "\n";
    result_.stages.push_back(std::move(s));
  }

  void write_text(const std::string& name, const std::string& text) {
    if (!cfg_.out.empty()) write_artifact_text(cfg_.out, name, text);
  }
  void write_json(const std::string& name, const nlohmann::json& j) {
    if (!cfg_.out.empty()) write_artifact_json(cfg_.out, name, j);
  }
  std::string path(const std::string& name) const { return (std::filesystem::path(cfg_.out) / name).string(); }

  nlohmann::json settings() const {
    return {{"group", cfg_.group},
            {"h1", cfg_.h1},
            {"h2", cfg_.h2},
            {"gens", cfg_.gens},
            {"tile", to_json(make_tile(cfg_))},
            {"coarse", cfg_.coarse},
            {"refine", cfg_.refine},
            {"dirichlet_refine", dirichlet_levels()},
            {"mode", cfg_.mode},
            {"count", cfg_.count},
            {"dirichlet_count", cfg_.dirichlet_count},
            {"tol", cfg_.tol},
            {"rel_tol", cfg_.rel_tol},
            {"transplant_tol", cfg_.transplant_tol},
            {"seed", cfg_.seed},
            {"params", cfg_.params}};
  }

  std::vector<int> dirichlet_levels() const { return cfg_.dirichlet_refine.empty() ? cfg_.refine : cfg_.dirichlet_refine; }

  Outcome triple() {
    RunConfig c = cfg_;
    c.out.clear();
    auto r = triple_verify(c);
    write_json("triple.json", r.report);
    return {r.report["verdict"], {{"almost_conjugate", r.report["almost_conjugate"]}, {"conjugate", r.report["conjugate"]}}};
  }

  Outcome graphs() {
    const FiniteGroup g = build_gerst_group();
    nlohmann::json d;
    for (const auto* h : {&cfg_.h1, &cfg_.h2}) {
      const auto graph = build_schreier(make_action(g, *h, cfg_));
      write_text("schreier_" + safe_name(*h) + ".dot", to_dot(graph, "schreier_" + safe_name(*h)));
      d[*h] = {{"vertices", graph.vertex_count()},
               {"edges", graph.full_edges().size()},
               {"half_edges", graph.half_edges().size()}};
    }
    return {"BUILT", d};
  }

  Outcome orientability() {
    const FiniteGroup g = build_gerst_group();
    std::string verdict;
    nlohmann::json d;
    for (const auto* h : {&cfg_.h1, &cfg_.h2}) {
      const auto graph = build_schreier(make_action(g, *h, cfg_));
      const auto v = is_orientable(graph);
      verdict += (verdict.empty() ? "" : ",") + std::string(v.orientable ? "true" : "false");
      d[*h] = to_json(graph, v);
    }
    return {verdict, d};
  }

  Outcome surfaces() {
    const int k = cfg_.refine.back();
    int with_cones = 0;
    nlohmann::json d;
    int index = 1;
    for (const auto* h : {&cfg_.h1, &cfg_.h2}) {
      const SurfaceMesh m = make_surface(cfg_, *h, k);
      const auto topo = topology(m);
      const auto cones = cone_points(m);
      with_cones += !cones.empty();
      nlohmann::json jc = nlohmann::json::array();
      for (const auto& c : cones) jc.push_back({{"node", c.node}, {"angle", c.angle}, {"tile", m.tile_ids[c.tile]}});
      d["M" + std::to_string(index)] = {{"subgroup", *h},
                                        {"euler_characteristic", topo.euler_characteristic},
                                        {"boundary_components", topo.boundary_components},
                                        {"area", m.area()},
                                        {"cone_points", jc}};
      if (!cfg_.out.empty()) {
        const std::string stem = "surface_M" + std::to_string(index) + "_k" + std::to_string(k);
        write_off(path(stem + ".off"), m);
        write_mesh_json(path(stem + ".json"), m);
      }
      ++index;
    }
    return {with_cones == 0 ? "NONE" : (with_cones == 1 ? "ONE" : "BOTH"), d};
  }

  Outcome neumann() {
    RunConfig c = cfg_;
    c.bc = "neumann";
    nlohmann::json d;
    Comparison cmp;
    if (parse_mode(c.mode) == DiscretizationMode::Fem && c.refine.size() >= 3) {
      std::vector<SpectrumReport> r1, r2;
      const auto a = spectrum_study(c, c.h1, c.refine, true, &r1);
      const auto b = spectrum_study(c, c.h2, c.refine, true, &r2);
      cmp = compare_extrapolated(a, b, c.rel_tol);
      write_spectra("neumann", r1, r2);
      write_text("neumann_levels.dat", levels_table(a, b));
      write_text("neumann_diff.dat", comparison_table(cmp, a.error_estimates(), b.error_estimates()));
      d["convergence"] = {{"M1", to_json(a)}, {"M2", to_json(b)}};
    } else {
      const int k = c.refine.back();
      const auto a = surface_spectrum(make_surface(c, c.h1, k), c, k, true);
      const auto b = surface_spectrum(make_surface(c, c.h2, k), c, k, true);
      cmp = compare_spectra(a, b, c.count, c.rel_tol);
      write_spectra("neumann", {a}, {b});
      write_text("neumann_diff.dat", comparison_table(cmp, {}, {}));
      d["spectra"] = {{"M1", to_json(a)}, {"M2", to_json(b)}};
    }
    d["comparison"] = to_json(cmp);
    return {to_string(cmp.verdict), d};
  }

  Outcome transplant() {
    RationalMatrix a;
    try {
      a = choose_intertwiner(cfg_);
    } catch (const std::invalid_argument& e) {
      return {"SKIPPED", {{"reason", e.what()}}};
    }
    const int k = cfg_.refine.back();
    const SurfaceMesh m1 = make_surface(cfg_, cfg_.h1, k), m2 = make_surface(cfg_, cfg_.h2, k);
    const auto mode = parse_mode(cfg_.mode);
    nlohmann::json d;
    bool exact_ok = true;
    if (mode == DiscretizationMode::Graph) {
      const auto ex = exact_transplant_check(m1, m2, a);
      exact_ok = ex.block_equivariant && ex.consistent && ex.commutes;
      d["exact"] = to_json(ex);
    }
    const auto rep = verify_transplantation(m1, m2, a, cfg_.count, mode, transplant_eigen_options(cfg_));
    d["verification"] = to_json(rep);
    d["matrix"] = to_json(a);
    write_json("transplant.json", d);
    const bool pass = exact_ok && rep.max_residual <= cfg_.transplant_tol &&
                      rep.max_inverse_residual <= cfg_.transplant_tol && rep.max_edge_mismatch <= 1e-12;
    return {pass ? "PASS" : "FAIL", d};
  }

  Outcome dirichlet() {
    RunConfig c = cfg_;
    c.bc = "dirichlet";
    c.mode = "fem";
    c.count = cfg_.dirichlet_count;
    const auto levels = dirichlet_levels();
    nlohmann::json d;
    Comparison cmp;
    if (levels.size() >= 3) {
      std::vector<SpectrumReport> r1, r2;
      const auto a = spectrum_study(c, c.h1, levels, false, &r1);
      const auto b = spectrum_study(c, c.h2, levels, false, &r2);
      cmp = compare_extrapolated(a, b, c.rel_tol);
      write_spectra("dirichlet", r1, r2);
      write_text("dirichlet_levels.dat", levels_table(a, b));
      write_text("dirichlet_diff.dat", comparison_table(cmp, a.error_estimates(), b.error_estimates()));
      d["convergence"] = {{"M1", to_json(a)}, {"M2", to_json(b)}};
    } else {
      const int k = levels.back();
      const auto a = surface_spectrum(make_surface(c, c.h1, k), c, k);
      const auto b = surface_spectrum(make_surface(c, c.h2, k), c, k);
      cmp = compare_spectra(a, b, c.count, c.rel_tol);
      write_spectra("dirichlet", {a}, {b});
      write_text("dirichlet_diff.dat", comparison_table(cmp, {}, {}));
    }
    d["comparison"] = to_json(cmp);
    return {to_string(cmp.verdict), d};
  }

  void write_spectra(const std::string& bc, const std::vector<SpectrumReport>& a, const std::vector<SpectrumReport>& b) {
    if (cfg_.out.empty()) return;
    for (const auto* list : {&a, &b})
      for (const auto& r : *list)
        write_spectrum_csv(path("spectrum_M" + std::string(list == &a ? "1" : "2") + "_" + bc + "_k" +
                                std::to_string(r.refinement) + ".csv"),
                           r);
  }

  const RunConfig& cfg_;
  std::ostream& log_;
  PipelineResult result_;
};

}  // namespace

StageError::StageError(std::string stage, const std::string& what)
    : std::runtime_error("stage " + stage + ": " + what), stage_(std::move(stage)) {}

PipelineResult run_pipeline(const RunConfig& cfg, std::ostream& log) { return Runner(cfg, log).run(); }

CommandResult pipeline(const RunConfig& cfg) {
  std::ostringstream log;
  const auto r = run_pipeline(cfg, log);
  return {r.ok ? 0 : 1, r.report, log.str()};
}

}  // namespace isospec::cli
