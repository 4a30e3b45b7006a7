#include <sstream>

#include <gtest/gtest.h>

#include "isospec/finite_group.hpp"
#include "isospec/mesh_io.hpp"
#include "isospec/operators.hpp"
#include "isospec/rep_theory.hpp"
#include "isospec/schreier.hpp"
#include "isospec/spectrum_io.hpp"

using namespace isospec;

TEST(SpectrumCsv, RoundTripIsExact) {
  SpectrumReport r;
  r.eigenvalues = {0.0, 1.0 / 3.0, 9.869604401089358, 1e-300};
  r.residuals = {1e-15, 2.5e-11, 3e-10, 0};
  r.cluster = {0, 1, 2, 2};
  std::stringstream ss;
  write_spectrum_csv(ss, r);
  EXPECT_EQ(ss.str().substr(0, 33), "index,eigenvalue,residual,cluster");
  const auto back = read_spectrum_csv(ss);
  EXPECT_EQ(back.eigenvalues, r.eigenvalues);
  EXPECT_EQ(back.residuals, r.residuals);
  EXPECT_EQ(back.cluster, r.cluster);
}

TEST(SpectrumCsv, RejectsMissingHeader) {
  std::stringstream ss("0,1.0,0,0\n");
  EXPECT_THROW(read_spectrum_csv(ss), std::invalid_argument);
}

TEST(SpectrumJson, RoundTrip) {
  SpectrumReport r;
  r.eigenvalues = {1.5, 2.5};
  r.residuals = {1e-12, 1e-11};
  r.cluster = {0, 1};
  r.mesh_id = "M(gamma1)/ytile";
  r.refinement = 8;
  r.bc = "neumann";
  r.mode = "graph";
  r.seed = 42;
  const auto back = spectrum_from_json(to_json(r));
  EXPECT_EQ(back.eigenvalues, r.eigenvalues);
  EXPECT_EQ(back.mesh_id, r.mesh_id);
  EXPECT_EQ(back.refinement, 8);
  EXPECT_EQ(back.seed, 42u);
}

TEST(Off, ExplodedLayoutHasOneVertexBlockPerCopy) {
  const FiniteGroup g = build_gerst_group();
  const auto gens = gerst_generators(g, GeneratorSet::SigmaTU);
  const auto graph = build_schreier(coset_action(g, gerst_gamma1(g), gens.elements, gens.labels, gerst_coset_reps()));
  const auto m = assemble_surface(graph, mesh_tile(builtin_tile("hexagon3"), 2));
  std::stringstream ss;
  write_off(ss, m);
  std::string magic;
  int nv = 0, nf = 0, ne = 0;
  ss >> magic >> nv >> nf >> ne;
  EXPECT_EQ(magic, "OFF");
  EXPECT_EQ(nv, 8 * m.tile->node_count());
  EXPECT_EQ(nf, static_cast<int>(8 * m.tile->triangles.size()));
}

TEST(Off, PlanarDomainSharesVertices) {
  const auto pair = fefferman_domains(builtin_tile("ltile"), 2);
  std::stringstream ss;
  write_off(ss, pair.s);
  std::string magic;
  int nv = 0;
  ss >> magic >> nv;
  EXPECT_EQ(nv, pair.s.node_count);
}

TEST(Json, SchreierGraphAndRationalMatrix) {
  const FiniteGroup g = build_gerst_group();
  const auto gens = gerst_generators(g, GeneratorSet::SigmaTU);
  const auto graph = build_schreier(coset_action(g, gerst_gamma2(g), gens.elements, gens.labels, gerst_coset_reps()));
  const auto j = to_json(graph);
  EXPECT_EQ(j.at("vertex_count").get<int>(), 8);
  const auto a = to_json(transplantation_matrix(6, -2, 2, 2).entries);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(a[1][0].get<std::string>(), "2");
}

TEST(Coordinate, WritesOneLinePerEntry) {
  const auto op = graph_laplacian(3, {{0, 1}, {1, 2}});
  std::stringstream ss;
  write_coordinate(ss, op.K);
  int lines = 0;
  for (std::string l; std::getline(ss, l);)
    if (!l.empty() && l[0] != '%') ++lines;
  EXPECT_EQ(lines, static_cast<int>(op.K.nonZeros()));
}
