#include "isospec_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "isospec/finite_group.hpp"
#include "isospec/mesh_io.hpp"
#include "isospec/operators.hpp"
#include "isospec/rep_theory.hpp"
#include "isospec/schreier.hpp"
#include "isospec/spectrum_io.hpp"
#include "isospec/transplant.hpp"
#include "isospec_cli/output.hpp"

namespace isospec::cli {

namespace {

FiniteGroup group_for(const RunConfig& cfg) {
  if (cfg.group != "gerst") throw std::invalid_argument("unknown group '" + cfg.group + "' (only gerst is built in)");
  return build_gerst_group();
}

SchreierGraph graph_for(const FiniteGroup& g, const std::string& subgroup, const RunConfig& cfg) {
  return build_schreier(make_action(g, subgroup, cfg));
}

std::string label_sequence(const SchreierGraph& g, const OrientabilityVerdict& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.odd_cycle.size(); ++i) {
    if (i) os << ' ';
    os << v.odd_cycle[i] << g.labels()[v.odd_cycle_labels[i]];
  }
  return os.str();
}

bool is_all_neumann(const BCAssignment& bc) {
  for (auto c : bc.per_segment)
    if (c != BoundaryCondition::Neumann) return false;
  return true;
}

std::string fmt(double x, int digits = 12) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

int comparison_status(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Distinguished: return 1;
    case Verdict::Inconclusive: return 3;
  }
  return 3;
}

}  // namespace

SurfaceMesh make_surface(const RunConfig& cfg, const std::string& which, int k) {
  const TileSpec spec = make_tile(cfg);
  if (which == "S" || which == "C") {
    auto pair = fefferman_domains(spec, k);
    return which == "S" ? pair.s : pair.c;
  }
  const TileMesh tm = mesh_tile(spec, k);
  if (which == "single") return single_tile_surface(tm);

  std::string sub = which;
  bool quotient = false;
  if (const auto colon = sub.rfind(":quotient"); colon != std::string::npos && colon + 9 == sub.size()) {
    quotient = true;
    sub.erase(colon);
  }
  const FiniteGroup g = group_for(cfg);
  const SurfaceMesh m = assemble_surface(graph_for(g, sub, cfg), tm, "M(" + sub + ")");
  if (!quotient) return m;
  if (m.tile_count % 2) throw std::invalid_argument("quotient needs an even number of tiles");
  std::vector<int> perm(m.tile_count);
  for (int i = 0; i < m.tile_count; ++i) perm[i] = (i + m.tile_count / 2) % m.tile_count;
  auto q = quotient_by_involution(m, perm).mesh;
  q.name = "Q(" + sub + ")";
  return q;
}

EigenOptions eigen_options(const RunConfig& cfg, int count) {
  EigenOptions o;
  o.count = count;
  o.tol = cfg.tol;
  o.seed = cfg.seed;
  return o;
}

EigenOptions transplant_eigen_options(const RunConfig& cfg) {
  EigenOptions o = eigen_options(cfg, cfg.count);
  if (parse_mode(cfg.mode) == DiscretizationMode::Graph) o.tol = std::min(o.tol, 1e-2 * cfg.transplant_tol);
  return o;
}

SpectrumReport surface_spectrum(const SurfaceMesh& m, const RunConfig& cfg, int k, bool skip_kernel) {
  const BCAssignment bc = make_bc(m, cfg.bc);
  const auto op = assemble(m, bc, parse_mode(cfg.mode));
  const int kernel = skip_kernel && is_all_neumann(bc) ? topology(m).connected_components : 0;
  auto r = lowest_eigenpairs(op, eigen_options(cfg, cfg.count + kernel)).report;
  r.eigenvalues.erase(r.eigenvalues.begin(), r.eigenvalues.begin() + kernel);
  r.residuals.erase(r.residuals.begin(), r.residuals.begin() + kernel);
  r.cluster = cluster_eigenvalues(r.eigenvalues);
  r.mesh_id = m.name + "/" + m.tile->spec.name;
  r.refinement = k;
  r.bc = cfg.bc;
  return r;
}

ConvergenceResult spectrum_study(const RunConfig& cfg, const std::string& which, const std::vector<int>& levels,
                                 bool skip_kernel, std::vector<SpectrumReport>* reports) {
  return convergence_study(levels, [&](int k) {
    auto r = surface_spectrum(make_surface(cfg, which, k), cfg, k, skip_kernel);
    if (reports) reports->push_back(r);
    return r.eigenvalues;
  });
}

RationalMatrix choose_intertwiner(const RunConfig& cfg) {
  const FiniteGroup g = group_for(cfg);
  const Subgroup a = parse_subgroup(g, cfg.h1), b = parse_subgroup(g, cfg.h2);
  const Subgroup g1 = gerst_gamma1(g), g2 = gerst_gamma2(g);
  const auto& p = cfg.params;
  if (a == g1 && b == g2) return transplantation_matrix(p[0], p[1], p[2], p[3]).entries;
  if (a == g2 && b == g1) return inverse(transplantation_matrix(p[0], p[1], p[2], p[3]).entries);
  const auto p1 = perm_rep(make_action(g, cfg.h1, cfg));
  const auto p2 = perm_rep(make_action(g, cfg.h2, cfg));
  if (p1.degree != p2.degree) throw std::invalid_argument("subgroups of different index have no intertwiner");
  if (a == b) return RationalMatrix::identity(p1.degree);
  const auto basis = intertwiner_space(p1, p2);
  for (int trial = 0; trial < 32 && !basis.empty(); ++trial) {
    RationalMatrix m(p1.degree, p1.degree);
    for (std::size_t i = 0; i < basis.size(); ++i)
      m = m + scaled(basis[i], Rational(static_cast<std::int64_t>(1 + (trial + 3 * i) % 7)));
    if (rank(m) == static_cast<std::size_t>(p1.degree)) return m;
  }
  throw std::invalid_argument("no invertible intertwiner between " + cfg.h1 + " and " + cfg.h2);
}

CommandResult triple_verify(const RunConfig& cfg) {
  const FiniteGroup g = group_for(cfg);
  const Subgroup h1 = parse_subgroup(g, cfg.h1), h2 = parse_subgroup(g, cfg.h2);
  const auto v = almost_conjugate(g, h1, h2);
  const auto conj = conjugating_element(g, h1, h2);
  const auto classes = conjugacy_classes(g);

  CommandResult r;
  r.report = to_json(g, v);
  r.report["group"] = cfg.group;
  r.report["h1"] = {{"name", cfg.h1}, {"elements", to_json(h1)}};
  r.report["h2"] = {{"name", cfg.h2}, {"elements", to_json(h2)}};
  r.report["conjugate"] = conj.has_value();
  r.report["conjugator"] = conj ? nlohmann::json(g.name(*conj)) : nlohmann::json();
  r.report["verdict"] = v.almost_conjugate ? "PASS" : "FAIL";

  std::ostringstream os;
  os << "group " << cfg.group << " (order " << g.order() << "), H1 = " << cfg.h1 << " (order " << h1.order()
     << "), H2 = " << cfg.h2 << " (order " << h2.order() << ")\n";
  os << "class                 |H1 n C|  |H2 n C|\n";
  for (std::size_t c = 0; c < classes.size(); ++c)
    os << "  " << pad(g.name(classes[c].representative), 20) << std::setw(8)
       << v.counts1[c] << std::setw(10) << v.counts2[c] << (v.counts1[c] != v.counts2[c] ? "   <- mismatch" : "") << "\n";
  if (v.almost_conjugate) {
    os << "almost conjugate: yes\nbijection:\n";
    for (const auto& w : v.witness)
      os << "  " << g.name(w.from) << " -> " << g.name(w.to) << "  (conjugated by " << g.name(w.conjugator) << ")\n";
  } else {
    os << "almost conjugate: no, first failing class " << g.name(classes[*v.failing_class].representative) << "\n";
  }
  os << "conjugate: " << (conj ? "yes, by " + g.name(*conj) : std::string("no")) << "\n";
  os << "verdict: " << (v.almost_conjugate ? "PASS" : "FAIL");
  if (v.almost_conjugate) os << (conj ? " (conjugate subgroups, trivial triple)" : " (Gassmann-Sunada triple)");
  os << "\n";
  r.text = os.str();
  r.status = v.almost_conjugate ? 0 : 1;
  if (!cfg.out.empty()) write_artifact_json(cfg.out, "triple.json", r.report);
  return r;
}

CommandResult graph_build(const RunConfig& cfg) {
  const FiniteGroup g = group_for(cfg);
  const auto action = make_action(g, cfg.subgroup, cfg);
  const auto graph = build_schreier(action);
  CommandResult r;
  r.report = to_json(graph);
  r.report["action"] = to_json(action);
  std::ostringstream os;
  os << "Schreier graph of G/" << cfg.subgroup << ": " << graph.vertex_count() << " vertices, "
     << graph.full_edges().size() << " edges, " << graph.half_edges().size() << " half-edges\n";
  for (const auto& e : graph.full_edges()) os << "  " << e.a << " -" << graph.labels()[e.label] << "- " << e.b << "\n";
  for (const auto& h : graph.half_edges()) os << "  " << h.vertex << " half-edge " << graph.labels()[h.label] << "\n";
  os << "\n" << to_dot(graph, "schreier_" + cfg.subgroup);
  r.text = os.str();
  if (!cfg.out.empty()) {
    write_artifact_text(cfg.out, "schreier_" + cfg.subgroup + ".dot", to_dot(graph, "schreier_" + cfg.subgroup));
    write_artifact_json(cfg.out, "schreier_" + cfg.subgroup + ".json", r.report);
  }
  return r;
}

CommandResult graph_orient(const RunConfig& cfg) {
  const FiniteGroup g = group_for(cfg);
  const auto graph = graph_for(g, cfg.subgroup, cfg);
  const auto v = is_orientable(graph);
  CommandResult r;
  r.report = to_json(graph, v);
  std::ostringstream os;
  os << "G/" << cfg.subgroup << ": " << (v.orientable ? "orientable" : "nonorientable") << "\n";
  if (v.orientable) {
    os << "  sides:";
    for (int c : v.coloring) os << ' ' << (c > 0 ? '+' : '-');
    os << "\n";
  } else {
    os << "  odd cycle (" << v.odd_cycle.size() << " tiles): " << label_sequence(graph, v) << "\n";
  }
  r.text = os.str();
  if (!cfg.out.empty()) write_artifact_json(cfg.out, "orientability_" + cfg.subgroup + ".json", r.report);
  return r;
}

CommandResult chars_table(const RunConfig& cfg, bool csv) {
  const FiniteGroup g = group_for(cfg);
  const auto table = character_table(g);
  const std::vector<ClassFunction> extra{induced_character(g, parse_subgroup(g, cfg.h1), table),
                                         induced_character(g, parse_subgroup(g, cfg.h2), table)};
  const std::vector<std::string> names{"Ind " + cfg.h1, "Ind " + cfg.h2};
  CommandResult r;
  r.text = csv ? character_table_csv(table, extra, names) : format_character_table(table, extra, names);
  nlohmann::json rows = nlohmann::json::object();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    std::vector<std::string> vals;
    for (const auto& z : table.rows[i].values) vals.push_back(to_string(z));
    rows[table.irrep_names[i]] = vals;
  }
  r.report = {{"classes", table.class_names}, {"class_sizes", table.class_sizes}, {"rows", rows}};
  if (!cfg.out.empty()) {
    write_artifact_text(cfg.out, "character_table.csv", character_table_csv(table, extra, names));
    write_artifact_json(cfg.out, "character_table.json", r.report);
  }
  return r;
}

CommandResult chars_decompose(const RunConfig& cfg) {
  const FiniteGroup g = group_for(cfg);
  const auto table = character_table(g);
  const auto chi = induced_character(g, parse_subgroup(g, cfg.subgroup), table);
  const auto mult = decompose(table, chi);
  CommandResult r;
  std::ostringstream os;
  os << "C[G/" << cfg.subgroup << "] =";
  bool first = true;
  nlohmann::json m = nlohmann::json::object();
  for (std::size_t i = 0; i < mult.size(); ++i) {
    m[table.irrep_names[i]] = mult[i];
    if (!mult[i]) continue;
    os << (first ? " " : " + ") << (mult[i] > 1 ? std::to_string(mult[i]) + " " : "") << table.irrep_names[i];
    first = false;
  }
  os << "\n  character:";
  std::vector<std::string> vals;
  for (const auto& z : chi.values) {
    os << ' ' << to_string(z);
    vals.push_back(to_string(z));
  }
  os << "\n";
  r.text = os.str();
  r.report = {{"subgroup", cfg.subgroup}, {"character", vals}, {"multiplicities", m}};
  if (!cfg.out.empty()) write_artifact_json(cfg.out, "decompose_" + cfg.subgroup + ".json", r.report);
  return r;
}

CommandResult intertwine_solve(const RunConfig& cfg) {
  const FiniteGroup g = group_for(cfg);
  const auto p1 = perm_rep(make_action(g, cfg.h1, cfg));
  const auto p2 = perm_rep(make_action(g, cfg.h2, cfg));
  const auto basis = intertwiner_space(p1, p2);
  CommandResult r;
  nlohmann::json jb = nlohmann::json::array();
  for (const auto& b : basis) jb.push_back(to_json(b));
  r.report = {{"h1", cfg.h1}, {"h2", cfg.h2}, {"dimension", basis.size()}, {"basis", jb}};

  std::ostringstream os;
  os << "intertwiners C[G/" << cfg.h1 << "] -> C[G/" << cfg.h2 << "]: dimension " << basis.size() << "\n";
  const Subgroup a = parse_subgroup(g, cfg.h1), b = parse_subgroup(g, cfg.h2);
  if (a == gerst_gamma1(g) && b == gerst_gamma2(g)) {
    const auto& p = cfg.params;
    const auto t = transplantation_matrix(p[0], p[1], p[2], p[3]);
    bool intertwines = true;
    for (std::size_t k = 0; k < p1.matrices.size(); ++k)
      intertwines = intertwines && t.entries * p1.matrices[k] == p2.matrices[k] * t.entries;
    os << "(a,b,c,d) = (" << p[0] << "," << p[1] << "," << p[2] << "," << p[3] << "): alpha=" << to_string(t.alpha)
       << " beta=" << to_string(t.beta) << " gamma=" << to_string(t.gamma) << " delta=" << to_string(t.delta)
       << (t.singular ? "  [singular]" : "") << (intertwines ? "" : "  [does not intertwine]") << "\n";
    os << format_matrix(t.entries);
    r.report["transplant"] = {{"params", p},
                              {"alpha", to_string(t.alpha)},
                              {"beta", to_string(t.beta)},
                              {"gamma", to_string(t.gamma)},
                              {"delta", to_string(t.delta)},
                              {"singular", t.singular},
                              {"intertwines", intertwines},
                              {"matrix", to_json(t.entries)}};
  }
  r.text = os.str();
  r.status = basis.empty() ? 1 : 0;
  if (!cfg.out.empty()) write_artifact_json(cfg.out, "intertwiners.json", r.report);
  return r;
}

CommandResult surface_build(const RunConfig& cfg) {
  const int k = cfg.refine.back();
  const SurfaceMesh m = make_surface(cfg, cfg.subgroup, k);
  const auto topo = topology(m);
  const auto cones = cone_points(m);
  int free_arcs = 0, half = 0, mirror = 0;
  for (const auto& b : m.boundary) {
    free_arcs += b.origin == BoundaryOrigin::FreeArc;
    half += b.origin == BoundaryOrigin::HalfEdge;
    mirror += b.origin == BoundaryOrigin::Mirror;
  }
  std::optional<bool> orientable;
  if (m.graph) orientable = is_orientable(*m.graph).orientable;
  else if (!m.placements.empty()) orientable = true;

  CommandResult r;
  nlohmann::json jc = nlohmann::json::array();
  for (const auto& c : cones)
    jc.push_back({{"node", c.node}, {"angle", c.angle}, {"tile", m.tile_ids[c.tile]}, {"local", {c.local.x, c.local.y}}});
  r.report = {{"name", m.name},
              {"tile", to_json(m.tile->spec)},
              {"refinement", k},
              {"tiles", m.tile_count},
              {"nodes", m.node_count},
              {"triangles", m.triangles().size()},
              {"area", m.area()},
              {"euler_characteristic", topo.euler_characteristic},
              {"boundary_components", topo.boundary_components},
              {"connected_components", topo.connected_components},
              {"orientable", orientable ? nlohmann::json(*orientable) : nlohmann::json()},
              {"cone_points", jc},
              {"boundary_segments", {{"free", free_arcs}, {"half_edge", half}, {"mirror", mirror}}}};

  std::ostringstream os;
  os << m.name << " on " << m.tile->spec.name << ", k=" << k << "\n";
  os << "  tiles " << m.tile_count << ", nodes " << m.node_count << ", triangles " << m.triangles().size()
     << ", area " << fmt(m.area()) << "\n";
  os << "  euler characteristic " << topo.euler_characteristic << ", boundary components " << topo.boundary_components
     << ", connected components " << topo.connected_components << "\n";
  os << "  orientable: " << (orientable ? (*orientable ? "yes" : "no") : "unknown") << "\n";
  os << "  boundary segments: " << free_arcs << " free, " << half << " half-edge, " << mirror << " mirror\n";
  for (const auto& b : m.boundary)
    if (b.origin == BoundaryOrigin::Mirror)
      os << "    mirror " << m.tile_ids[b.tile] << m.tile->spec.labels[b.label] << "\n";
  os << "  cone points: " << cones.size() << "\n";
  for (const auto& c : cones)
    os << "    node " << c.node << " on tile " << m.tile_ids[c.tile] << ", angle " << fmt(c.angle / std::numbers::pi)
       << " pi\n";
  r.text = os.str();
  if (!cfg.out.empty()) write_artifact_json(cfg.out, "surface_" + safe_name(cfg.subgroup) + ".json", r.report);
  return r;
}

CommandResult surface_export(const RunConfig& cfg) {
  if (cfg.out.empty()) throw std::invalid_argument("surface export needs --out");
  const int k = cfg.refine.back();
  const SurfaceMesh m = make_surface(cfg, cfg.subgroup, k);
  const std::string stem = "surface_" + safe_name(cfg.subgroup) + "_k" + std::to_string(k);
  std::filesystem::create_directories(cfg.out);
  write_off((std::filesystem::path(cfg.out) / (stem + ".off")).string(), m);
  write_mesh_json((std::filesystem::path(cfg.out) / (stem + ".json")).string(), m);
  CommandResult r;
  r.report = {{"off", stem + ".off"}, {"json", stem + ".json"}};
  r.text = "wrote " + stem + ".off and " + stem + ".json to " + cfg.out + "\n";
  return r;
}

CommandResult spectrum_compute(const RunConfig& cfg) {
  CommandResult r;
  std::vector<SpectrumReport> reports;
  std::ostringstream os;
  if (cfg.refine.size() >= 3) {
    const auto conv = spectrum_study(cfg, cfg.subgroup, cfg.refine, false, &reports);
    r.report["convergence"] = to_json(conv);
    os << "index";
    for (int k : cfg.refine) os << ",k" << k;
    os << ",extrapolated,error_estimate,observed_order\n";
    for (std::size_t i = 0; i < conv.per_index.size(); ++i) {
      const auto& c = conv.per_index[i];
      os << i;
      for (double v : c.values) os << ',' << fmt(v, 15);
      os << ',' << fmt(c.extrapolated, 15) << ',' << fmt(c.error_estimate, 3) << ',' << fmt(c.observed_order, 3) << "\n";
    }
  } else {
    for (int k : cfg.refine) reports.push_back(surface_spectrum(make_surface(cfg, cfg.subgroup, k), cfg, k));
    write_spectrum_csv(os, reports.back());
  }
  r.report["spectra"] = nlohmann::json::array();
  for (const auto& s : reports) r.report["spectra"].push_back(to_json(s));
  r.text = os.str();
  if (!cfg.out.empty()) {
    for (const auto& s : reports) {
      const std::string stem = "spectrum_" + safe_name(cfg.subgroup) + "_" + safe_name(cfg.bc) + "_" + cfg.mode + "_k" +
                               std::to_string(s.refinement);
      std::filesystem::create_directories(cfg.out);
      write_spectrum_csv((std::filesystem::path(cfg.out) / (stem + ".csv")).string(), s);
    }
    write_artifact_json(cfg.out, "spectrum_" + safe_name(cfg.subgroup) + ".json", r.report);
  }
  return r;
}

CommandResult compare(const RunConfig& cfg, const std::vector<std::string>& files) {
  Comparison cmp;
  CommandResult r;
  if (files.size() == 2) {
    auto a = read_spectrum_csv(files[0]), b = read_spectrum_csv(files[1]);
    const int n = std::min({cfg.count, static_cast<int>(a.eigenvalues.size()), static_cast<int>(b.eigenvalues.size())});
    cmp = compare_spectra(a, b, n, cfg.rel_tol);
    r.report["inputs"] = files;
  } else if (files.empty()) {
    const bool neumann = cfg.bc == "neumann";
    if (cfg.refine.size() >= 3) {
      const auto ca = spectrum_study(cfg, cfg.h1, cfg.refine, neumann);
      const auto cb = spectrum_study(cfg, cfg.h2, cfg.refine, neumann);
      cmp = compare_extrapolated(ca, cb, cfg.rel_tol);
      r.report["convergence"] = {{cfg.h1, to_json(ca)}, {cfg.h2, to_json(cb)}};
    } else {
      const int k = cfg.refine.back();
      const auto a = surface_spectrum(make_surface(cfg, cfg.h1, k), cfg, k, neumann);
      const auto b = surface_spectrum(make_surface(cfg, cfg.h2, k), cfg, k, neumann);
      cmp = compare_spectra(a, b, cfg.count, cfg.rel_tol);
      r.report["spectra"] = {to_json(a), to_json(b)};
    }
  } else {
    throw std::invalid_argument("compare takes zero or two spectrum files");
  }
  r.report["comparison"] = to_json(cmp);
  r.report["rel_tol"] = cfg.rel_tol;
  std::ostringstream os;
  os << "index  a                    b                    rel_diff    error_est\n";
  for (const auto& e : cmp.entries)
    os << std::setw(5) << e.index << "  " << std::left << std::setw(19) << fmt(e.a, 15) << "  " << std::setw(19)
       << fmt(e.b, 15) << std::right << "  " << std::setw(10) << fmt(e.rel_diff, 3) << "  " << fmt(e.error_estimate, 3)
       << "\n";
  os << "verdict: " << to_string(cmp.verdict) << " (max relative difference " << fmt(cmp.max_rel_diff, 3) << ")\n";
  r.text = os.str();
  r.status = comparison_status(cmp.verdict);
  if (!cfg.out.empty()) write_artifact_json(cfg.out, "compare.json", r.report);
  return r;
}

CommandResult transplant_verify(const RunConfig& cfg) {
  const int k = cfg.refine.back();
  const SurfaceMesh m1 = make_surface(cfg, cfg.h1, k), m2 = make_surface(cfg, cfg.h2, k);
  const RationalMatrix a = choose_intertwiner(cfg);
  const auto mode = parse_mode(cfg.mode);
  CommandResult r;
  std::ostringstream os;
  if (mode == DiscretizationMode::Graph) {
    const auto exact = exact_transplant_check(m1, m2, a);
    r.report["exact"] = to_json(exact);
    os << "exact check: equivariant " << (exact.block_equivariant ? "yes" : "no") << ", consistent "
       << (exact.consistent ? "yes" : "no") << ", commutes " << (exact.commutes ? "yes" : "no") << " ("
       << exact.nonzero_defect << " nonzero defect entries)\n";
  }
  const auto rep = verify_transplantation(m1, m2, a, cfg.count, mode, transplant_eigen_options(cfg));
  r.report["verification"] = to_json(rep);
  r.report["matrix"] = to_json(a);
  const bool pass = rep.max_residual <= cfg.transplant_tol && rep.max_inverse_residual <= cfg.transplant_tol &&
                    rep.max_edge_mismatch <= 1e-12;
  r.report["verdict"] = pass ? "PASS" : "FAIL";
  os << "lambda             residual   inverse    edge       round trip\n";
  for (const auto& e : rep.entries)
    os << std::left << std::setw(17) << fmt(e.lambda) << std::right << "  " << std::setw(9) << fmt(e.residual, 2) << "  "
       << std::setw(9) << fmt(e.inverse_residual, 2) << "  " << std::setw(9)
       << fmt(std::max(e.edge_mismatch, e.inverse_edge_mismatch), 2) << "  " << fmt(e.round_trip_error, 2) << "\n";
  os << "max residual " << fmt(rep.max_residual, 3) << ", inverse " << fmt(rep.max_inverse_residual, 3) << ", edge "
     << fmt(rep.max_edge_mismatch, 3) << " (tolerance " << fmt(cfg.transplant_tol, 3) << ")\n";
  os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
  r.text = os.str();
  r.status = pass ? 0 : 1;
  if (!cfg.out.empty()) write_artifact_json(cfg.out, "transplant.json", r.report);
  return r;
}

}  // namespace isospec::cli
