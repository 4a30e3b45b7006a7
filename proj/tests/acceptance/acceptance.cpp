// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "isospec/convergence.hpp"
#include "isospec/eigensolver.hpp"
#include "isospec/finite_group.hpp"
#include "isospec/operators.hpp"
#include "isospec/rep_theory.hpp"
#include "isospec/schreier.hpp"
#include "isospec/surface.hpp"
#include "isospec/tile.hpp"
#include "isospec/transplant.hpp"
#include "oracles.hpp"

using namespace isospec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const FiniteGroup& gerst() {
  static const FiniteGroup g = build_gerst_group();
  return g;
}

SchreierGraph schreier(const Subgroup& h, GeneratorSet set) {
  const auto gens = gerst_generators(gerst(), set);
  return build_schreier(coset_action(gerst(), h, gens.elements, gens.labels, gerst_coset_reps()));
}

SurfaceMesh gerst_surface(const TileSpec& tile, bool second, int k, GeneratorSet set = GeneratorSet::SigmaTU) {
  const auto h = second ? gerst_gamma2(gerst()) : gerst_gamma1(gerst());
  return assemble_surface(schreier(h, set), mesh_tile(tile, k), second ? "M2" : "M1");
}

EigenOptions options(int count, double tol = 1e-9) {
  EigenOptions o;
  o.count = count;
  o.tol = tol;
  return o;
}

std::vector<double> spectrum(const SurfaceMesh& m, BoundaryCondition bc, DiscretizationMode mode, int count) {
  return lowest_eigenpairs(assemble(m, BCAssignment::uniform(m, bc), mode), options(count)).report.eigenvalues;
}

// ---------------------------------------------------------------------------

Outcome gassmann_triple() {
  const auto& g = gerst();
  const auto h1 = gerst_gamma1(g), h2 = gerst_gamma2(g);
  const auto v = almost_conjugate(g, h1, h2);
  std::set<Element> from, to;
  bool witness_ok = v.witness.size() == static_cast<std::size_t>(h1.order());
  for (const auto& w : v.witness) {
    witness_ok = witness_ok && h1.contains(w.from) && h2.contains(w.to) && g.conjugate(w.conjugator, w.from) == w.to;
    from.insert(w.from);
    to.insert(w.to);
  }
  witness_ok = witness_ok && from.size() == v.witness.size() && to.size() == v.witness.size();
  const bool conj = are_conjugate_subgroups(g, h1, h2);
  return {v.almost_conjugate && witness_ok && !conj,
          fmt("almost conjugate=%s, bijection witness %s, conjugate=%s", v.almost_conjugate ? "yes" : "no",
              witness_ok ? "valid" : "invalid", conj ? "yes" : "no")};
}

Outcome character_table_check() {
  static const int kTable[11][11] = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},         {1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1},
      {1, 1, 1, -1, -1, 1, 1, -1, 1, -1, -1},    {1, 1, 1, 1, 1, 1, -1, -1, -1, -1, 1},
      {1, 1, 1, 1, 1, -1, 1, 1, -1, -1, -1},     {1, 1, 1, -1, -1, -1, -1, 1, 1, -1, 1},
      {1, 1, 1, -1, -1, -1, 1, -1, -1, 1, 1},    {1, 1, 1, 1, 1, -1, -1, -1, 1, 1, -1},
      {2, 2, -2, 2, -2, 0, 0, 0, 0, 0, 0},       {2, 2, -2, -2, 2, 0, 0, 0, 0, 0, 0},
      {4, -4, 0, 0, 0, 0, 0, 0, 0, 0, 0},
  };
  const auto& g = gerst();
  const auto t = character_table(g);
  const Element s = gerst_element(1, 0), tt = gerst_element(0, 1), u = gerst_element(0, 2), v = g.mul(tt, u);
  const std::vector<Element> reps = {g.identity(), g.power(s, 4), g.power(s, 2), v, g.mul(g.power(s, 2), v),
                                     s, tt, u, g.mul(s, tt), g.mul(s, u), g.mul(s, v)};
  int bad = 0;
  for (int c = 0; c < 11; ++c) bad += t.class_of(reps[c]) != c;
  for (int r = 0; r < 11; ++r)
    for (int c = 0; c < 11; ++c) bad += !(t.rows[r].values[c] == GaussRational(kTable[r][c]));

  const auto m = decompose(t, induced_character(g, gerst_gamma1(g), t));
  std::set<std::string> ones;
  bool only_zero_one = true;
  for (int r = 0; r < 11; ++r) {
    if (m[r] == 1) ones.insert(t.irrep_names[r]);
    only_zero_one = only_zero_one && (m[r] == 0 || m[r] == 1);
  }
  const bool decomp_ok = only_zero_one && ones == std::set<std::string>{"1", "1^-", "W+", "X"};
  return {bad == 0 && decomp_ok, fmt("%d mismatched cells, induced character decomposes as 1 + 1^- + W+ + X: %s", bad,
                                     decomp_ok ? "yes" : "no")};
}

Outcome intertwiner_check() {
  const auto gens = gerst_generators(gerst(), GeneratorSet::SigmaTU);
  const auto p1 = perm_rep(coset_action(gerst(), gerst_gamma1(gerst()), gens.elements, gens.labels, gerst_coset_reps()));
  const auto p2 = perm_rep(coset_action(gerst(), gerst_gamma2(gerst()), gens.elements, gens.labels, gerst_coset_reps()));
  const auto basis = intertwiner_space(p1, p2);

  // Every basis element lies in the parametrised family, and a generic member
  // of the family is an intertwiner with the closed-form symbols.
  bool family_ok = true;
  for (const auto& a : basis) {
    try {
      const auto p = transplant_parameters(a);
      family_ok = family_ok && transplantation_matrix(p[0], p[1], p[2], p[3]).entries == a;
    } catch (const std::exception&) {
      family_ok = false;
    }
  }
  const Rational a(3), b(5), c(7), d(11);
  const auto gen = transplantation_matrix(a, b, c, d);
  const std::array<Rational, 4> sym = {(a + b + 2 * c) / 8, (a - b + 4 * d) / 8, (a + b - 2 * c) / 8,
                                       (a - b - 4 * d) / 8};
  for (int r = 0; r < 8; ++r)
    for (int col = 0; col < 8; ++col) family_ok = family_ok && gen.entries(r, col) == sym[transplant_pattern(r, col)];
  for (std::size_t k = 0; k < p1.matrices.size(); ++k)
    family_ok = family_ok && gen.entries * p1.matrices[k] == p2.matrices[k] * gen.entries;

  const auto def = transplantation_matrix(6, -2, 2, 2);
  const std::vector<int> col0 = {1, 2, 0, 0, 1, 0, 0, 2};
  bool def_ok = def.alpha == 1 && def.beta == 2 && def.gamma == 0 && def.delta == 0;
  for (int r = 0; r < 8; ++r) def_ok = def_ok && def.entries(r, 0) == col0[r];
  return {basis.size() == 4 && family_ok && def_ok,
          fmt("dimension %zu, generic pattern %s, default (6,-2,2,2) %s", basis.size(), family_ok ? "ok" : "wrong",
              def_ok ? "gives alpha=1 beta=2 gamma=delta=0, column 0 = (1,2,0,0,1,0,0,2)" : "wrong")};
}

Outcome orientability_check() {
  const auto v1 = is_orientable(schreier(gerst_gamma1(gerst()), GeneratorSet::SigmaTU));
  const auto v2 = is_orientable(schreier(gerst_gamma2(gerst()), GeneratorSet::SigmaTU));
  const std::set<int> cycle(v1.odd_cycle.begin(), v1.odd_cycle.end());
  const bool witness = v1.odd_cycle.size() == 5 && cycle == std::set<int>{1, 3, 6, 2, 7};
  std::string walk;
  for (int x : v1.odd_cycle) walk += std::to_string(x) + " ";
  return {!v1.orientable && witness && v2.orientable,
          fmt("G/Gamma1 orientable=%s (odd cycle %s), G/Gamma2 orientable=%s", v1.orientable ? "true" : "false",
              walk.c_str(), v2.orientable ? "true" : "false")};
}

Outcome neumann_fem();

Outcome neumann_graph() {
  const auto tile = builtin_tile("ytile");
  const auto m1 = gerst_surface(tile, false, 8);
  const auto m2 = gerst_surface(tile, true, 8);
  const auto exact = exact_transplant_check(m1, m2, transplantation_matrix(6, -2, 2, 2).entries);
  if (!exact.commutes) {
    const auto fb = neumann_fem();
    return {fb.pass, "exactness pre-check failed, fell back to fem: " + fb.detail};
  }
  const auto a = nonzero_eigenvalues(spectrum(m1, BoundaryCondition::Neumann, DiscretizationMode::Graph, 21), 20);
  const auto b = nonzero_eigenvalues(spectrum(m2, BoundaryCondition::Neumann, DiscretizationMode::Graph, 21), 20);
  const auto c = compare_spectra(a, b, 1e-9);
  return {c.verdict == Verdict::Pass,
          fmt("exact pre-check ||L2 T - T L1|| = 0; 20 nonzero eigenvalues, max rel diff %.2e (tol 1e-9)",
              c.max_rel_diff)};
}

Outcome neumann_fem() {
  const auto tile = builtin_tile("ytile");
  const std::vector<int> ks = {8, 16, 32};
  std::vector<std::vector<double>> a, b;
  for (int k : ks) {
    a.push_back(nonzero_eigenvalues(spectrum(gerst_surface(tile, false, k), BoundaryCondition::Neumann,
                                             DiscretizationMode::Fem, 11),
                                    10));
    b.push_back(nonzero_eigenvalues(spectrum(gerst_surface(tile, true, k), BoundaryCondition::Neumann,
                                             DiscretizationMode::Fem, 11),
                                    10));
  }
  // Per index: the M1/M2 difference either sits at the roundoff floor at every
  // level or shrinks with observed order near 2.
  constexpr double kFloor = 1e-10;
  int floor_count = 0, order_count = 0;
  double worst_diff = 0;
  for (int i = 0; i < 10; ++i) {
    double d[3];
    for (int l = 0; l < 3; ++l) d[l] = relative_difference(a[l][i], b[l][i]);
    worst_diff = std::max({worst_diff, d[0], d[1], d[2]});
    if (std::max({d[0], d[1], d[2]}) <= kFloor) {
      ++floor_count;
    } else if (d[1] > 0 && d[2] > 0 && std::log2(d[0] / d[1]) >= 1.5 && std::log2(d[1] / d[2]) >= 1.5) {
      ++order_count;
    }
  }
  const auto ca = analyze_convergence(ks, a);
  const auto cb = analyze_convergence(ks, b);
  const auto cmp = compare_spectra(ca.extrapolated(), cb.extrapolated(), 1e-6);
  double order = 0;
  for (const auto& p : ca.per_index) order += p.observed_order / 10;
  const bool pass = floor_count + order_count == 10 && cmp.verdict == Verdict::Pass;
  return {pass, fmt("k=8,16,32: %d/10 differences at roundoff (max %.1e), %d/10 shrinking at order>=1.5; "
                    "eigenvalue order %.2f; extrapolated max rel diff %.2e (tol 1e-6)",
                    floor_count, worst_diff, order_count, order, cmp.max_rel_diff)};
}

Outcome transplantation_check() {
  const auto tile = builtin_tile("ytile");
  const auto a = transplantation_matrix(6, -2, 2, 2).entries;
  const auto g = verify_transplantation(gerst_surface(tile, false, 8), gerst_surface(tile, true, 8), a, 20,
                                        DiscretizationMode::Graph, options(20, 1e-11));
  const bool graph_ok = g.entries.size() == 20 && g.max_residual <= 1e-9 && g.max_inverse_residual <= 1e-9 &&
                        g.max_edge_mismatch <= 1e-12;

  // fem at k=16; the discretisation error of each eigenvalue is estimated by
  // its change from k=8.
  const auto coarse = spectrum(gerst_surface(tile, false, 8), BoundaryCondition::Neumann, DiscretizationMode::Fem, 20);
  const auto f = verify_transplantation(gerst_surface(tile, false, 16), gerst_surface(tile, true, 16), a, 20,
                                        DiscretizationMode::Fem, options(20));
  bool fem_ok = f.entries.size() == 20 && f.max_edge_mismatch <= 1e-12;
  double worst_ratio = 0;
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    const double err = std::abs(f.entries[i].lambda - coarse[i]);
    const double allowed = 10 * err + 1e-9;
    const double r = std::max(f.entries[i].residual, f.entries[i].inverse_residual);
    fem_ok = fem_ok && r <= allowed;
    worst_ratio = std::max(worst_ratio, r / allowed);
  }
  return {graph_ok && fem_ok,
          fmt("graph k=8: residual %.1e, inverse %.1e, edge mismatch %.1e; fem k=16: residual %.1e, inverse %.1e, "
              "edge mismatch %.1e, worst residual/(10x disc. error) %.1e",
              g.max_residual, g.max_inverse_residual, g.max_edge_mismatch, f.max_residual, f.max_inverse_residual,
              f.max_edge_mismatch, worst_ratio)};
}

Outcome dirichlet_check() {
  const std::vector<int> ks = {16, 32, 64};
  std::string detail;
  bool pass = true;
  for (const auto& [name, tile] : {std::pair{"builtin mesh", builtin_tile("ytile")},
                                   std::pair{"ear-clipped mesh", with_ear_clipping(builtin_tile("ytile"))}}) {
    auto study = [&](bool second) {
      return convergence_study(ks, [&](int k) {
        return spectrum(gerst_surface(tile, second, k), BoundaryCondition::Dirichlet, DiscretizationMode::Fem, 1);
      });
    };
    const auto c1 = study(false);
    const auto c2 = study(true);
    const auto& p1 = c1.per_index[0];
    const auto& p2 = c2.per_index[0];
    const auto cmp = compare_spectra({p1.extrapolated}, {p2.extrapolated}, 1e-6, {p1.error_estimate},
                                     {p2.error_estimate});
    pass = pass && cmp.verdict == Verdict::Distinguished;
    if (!detail.empty()) detail += "; ";
    detail += fmt("%s: lambda1 %.6f vs %.6f, gap %.2e, error sum %.2e -> %s", name, p1.extrapolated,
                  p2.extrapolated, std::abs(p1.extrapolated - p2.extrapolated),
                  p1.error_estimate + p2.error_estimate, to_string(cmp.verdict).c_str());
  }
  return {pass, detail};
}

Outcome fefferman_check() {
  const std::vector<int> ks = {64, 128, 256};
  const auto l = builtin_tile("ltile");
  std::vector<std::vector<double>> s, c;
  for (int k : ks) {
    const auto pair = fefferman_domains(l, k);
    s.push_back(spectrum(pair.s, BoundaryCondition::Dirichlet, DiscretizationMode::Fem, 1));
    c.push_back(spectrum(pair.c, BoundaryCondition::Dirichlet, DiscretizationMode::Fem, 1));
  }
  const auto cs = analyze_convergence(ks, s).per_index[0];
  const auto cc = analyze_convergence(ks, c).per_index[0];
  const double gap = cs.extrapolated - cc.extrapolated;
  const double err = cs.error_estimate + cc.error_estimate;
  return {gap > 0 && gap > 10 * err,
          fmt("k=64,128,256: lambda_C %.6f +- %.1e < lambda_S %.6f +- %.1e, gap %.2e = %.1fx error sum "
              "(observed orders %.2f, %.2f)",
              cc.extrapolated, cc.error_estimate, cs.extrapolated, cs.error_estimate, gap, gap / err,
              cc.observed_order, cs.observed_order)};
}

Outcome cone_check() {
  const auto tile = builtin_tile("triangle");
  std::string detail;
  int with_cones = 0;
  bool topo_ok = true;
  for (bool second : {false, true}) {
    const auto m = gerst_surface(tile, second, 4, GeneratorSet::StTTu);
    const auto topo = topology(m);
    const auto cones = cone_points(m, 1e-12);
    const auto graph = schreier(second ? gerst_gamma2(gerst()) : gerst_gamma1(gerst()), GeneratorSet::StTTu);
    const auto walks = boundary_walks(graph, tile.edge_order(graph.labels()));
    with_cones += !cones.empty();
    topo_ok = topo_ok && topo.euler_characteristic == 0 && topo.boundary_components == 2 && walks.size() == 2;
    detail += fmt("%sM%d: chi=%d, %d boundary components, %zu cone point(s)", second ? "; " : "", second ? 2 : 1,
                  topo.euler_characteristic, topo.boundary_components, cones.size());
    for (const auto& c : cones) detail += fmt(" angle %.6f", c.angle);
  }
  return {with_cones == 1 && topo_ok, detail};
}

Outcome square_check() {
  constexpr double kCut = 5 * std::numbers::pi * std::numbers::pi;
  const std::vector<int> ks = {8, 16, 32};
  bool pass = true;
  std::string detail;
  for (bool dirichlet : {false, true}) {
    const auto want = oracle::square_eigenvalues(dirichlet, 40);
    const int count = static_cast<int>(std::count_if(want.begin(), want.end(), [&](double v) { return v <= kCut + 1e-9; }));
    const auto bc = dirichlet ? BoundaryCondition::Dirichlet : BoundaryCondition::Neumann;
    const auto c = convergence_study(ks, [&](int k) {
      return spectrum(single_tile_surface(mesh_tile(builtin_tile("square"), k)), bc, DiscretizationMode::Fem, count);
    });
    double worst = 0;
    for (int i = 0; i < count; ++i) {
      const double got = c.per_index[i].extrapolated;
      const double err = want[i] == 0 ? std::abs(got) : std::abs(got - want[i]) / want[i];
      worst = std::max(worst, err);
    }
    pass = pass && worst <= 1e-4;
    detail += fmt("%s%s: %d eigenvalues up to 5pi^2, worst rel error %.1e", dirichlet ? "; " : "",
                  dirichlet ? "Dirichlet" : "Neumann", count, worst);
  }
  return {pass, detail};
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Gassmann triple", 1, gassmann_triple},
      {2, "character table", 1, character_table_check},
      {3, "intertwiner space", 1, intertwiner_check},
      {4, "orientability", 1, orientability_check},
      {5, "Neumann isospectrality, graph mode", 60, neumann_graph},
      {6, "Neumann isospectrality, fem mode", 600, neumann_fem},
      {7, "transplantation", 300, transplantation_check},
      {8, "Dirichlet non-isospectrality", 600, dirichlet_check},
      {9, "planar L-domain inequality", 300, fefferman_check},
      {10, "cone singularities", 10, cone_check},
      {11, "solver validation", 60, square_check},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("criterion %2d %s  %s: %s [%.2f s, budget %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
