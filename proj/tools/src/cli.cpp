#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "isospec_cli/commands.hpp"
#include "isospec_cli/pipeline.hpp"

namespace isospec::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isospectral surface construction and verification", "isospec"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string refine, dirichlet_refine, params, config_path;
  bool json = false, csv = false;
  std::vector<std::string> files;

  app.add_option("--group", cfg.group, "Group (gerst)");
  app.add_option("--tile", cfg.tile, "hexagon3, ytile, triangle, ltile or square");
  app.add_option("--coarse", cfg.coarse, "Coarse triangulation: builtin or earclip");
  app.add_option("--subgroup", cfg.subgroup,
                 "gamma1, gamma2, cyclic8, trivial, whole, elements:<names>; surfaces also accept "
                 "<subgroup>:quotient, single, S, C");
  app.add_option("--h1", cfg.h1, "First subgroup of a comparison");
  app.add_option("--h2", cfg.h2, "Second subgroup of a comparison");
  app.add_option("--gens", cfg.gens, "Generator set: sigma-t-u or st-t-tu");
  app.add_option("--refine", refine, "Refinement levels, comma separated and ascending");
  app.add_option("--dirichlet-refine", dirichlet_refine, "Refinement levels of the pipeline Dirichlet stage");
  app.add_option("--bc", cfg.bc, "neumann, dirichlet, mirror or mixed:<file>");
  app.add_option("--mode", cfg.mode, "fem or graph");
  app.add_option("--count", cfg.count, "Number of eigenpairs");
  app.add_option("--tol", cfg.tol, "Eigen-residual tolerance");
  app.add_option("--rel-tol", cfg.rel_tol, "Relative tolerance of spectrum comparisons");
  app.add_option("--transplant-tol", cfg.transplant_tol, "Residual tolerance of transplanted eigenfunctions");
  app.add_option("--seed", cfg.seed, "Seed of the eigensolver start block");
  app.add_option("--params", params, "Transplantation parameters a,b,c,d");
  app.add_option("--out", cfg.out, "Output directory for artifacts");
  app.add_option("--config", config_path, "key=value file applied after the flags");
  app.add_flag("--json", json, "Print the JSON report instead of the summary");

  std::function<CommandResult()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
    auto* sub = parent->add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* triple = app.add_subcommand("triple", "Gassmann-Sunada triples")->require_subcommand(1);
  leaf(triple, "verify", "Almost conjugacy and conjugacy of H1, H2", [&] { return triple_verify(cfg); });

  auto* graph = app.add_subcommand("graph", "Schreier graphs")->require_subcommand(1);
  leaf(graph, "build", "Schreier graph of G/subgroup", [&] { return graph_build(cfg); });
  leaf(graph, "orient", "Orientability of the glued surface", [&] { return graph_orient(cfg); });

  auto* chars = app.add_subcommand("chars", "Characters")->require_subcommand(1);
  leaf(chars, "table", "Character table with induced rows", [&] { return chars_table(cfg, csv); })
      ->add_flag("--csv", csv, "CSV instead of aligned text");
  leaf(chars, "decompose", "Decompose C[G/subgroup]", [&] { return chars_decompose(cfg); });

  auto* inter = app.add_subcommand("intertwine", "Intertwiners")->require_subcommand(1);
  leaf(inter, "solve", "Intertwiners C[G/H1] -> C[G/H2]", [&] { return intertwine_solve(cfg); });

  auto* surface = app.add_subcommand("surface", "Tiled surfaces")->require_subcommand(1);
  leaf(surface, "build", "Topology, cone points and boundary of a surface", [&] { return surface_build(cfg); });
  leaf(surface, "export", "OFF and JSON mesh files", [&] { return surface_export(cfg); });

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues")->require_subcommand(1);
  leaf(spectrum, "compute", "Lowest eigenvalues of a surface", [&] { return spectrum_compute(cfg); });

  leaf(&app, "compare", "Compare the spectra of the H1 and H2 surfaces, or two CSV files",
       [&] { return compare(cfg, files); })
      ->add_option("files", files, "Two spectrum CSV files");

  auto* transplant = app.add_subcommand("transplant", "Transplantation")->require_subcommand(1);
  leaf(transplant, "verify", "Transplant eigenfunctions from H1 to H2", [&] { return transplant_verify(cfg); });

  leaf(&app, "pipeline", "End-to-end run with expected verdicts", [&] { return pipeline(cfg); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "isospec: " << e.what() << "\n";
    return 2;
  }
  // Subcommand help is reported by CLI11 as a parse error above; anything
  // reaching here selected exactly one leaf.
  try {
    if (!refine.empty()) cfg.refine = parse_int_list(refine);
    if (!dirichlet_refine.empty()) cfg.dirichlet_refine = parse_int_list(dirichlet_refine);
    if (!params.empty()) apply_config_text(cfg, "params = " + params);
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    validate(cfg);
    if (!action) {
      err << "isospec: no command selected\n";
      return 2;
    }
    const CommandResult r = action();
    if (json) out << r.report.dump(2) << "\n";
    else out << r.text;
    return r.status;
  } catch (const StageError& e) {
    err << "isospec: pipeline aborted in stage " << e.stage() << "\n  " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "isospec: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace isospec::cli
