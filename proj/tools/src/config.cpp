#include "isospec_cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isospec::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size()) throw std::invalid_argument("config: " + key + " expects a number, got '" + v + "'");
  return x;
}

long long parse_integer(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  long long x = 0;
  try {
    x = std::stoll(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size()) throw std::invalid_argument("config: " + key + " expects an integer, got '" + v + "'");
  return x;
}

BoundaryCondition parse_condition(const std::string& v) {
  if (v == "neumann") return BoundaryCondition::Neumann;
  if (v == "dirichlet") return BoundaryCondition::Dirichlet;
  throw std::invalid_argument("boundary condition must be neumann or dirichlet, got '" + v + "'");
}

}  // namespace

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split(s, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<int>(parse_integer("list", item)));
  }
  return out;
}

void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0)) throw std::invalid_argument("tol must be positive");
  if (!(cfg.rel_tol >= 0)) throw std::invalid_argument("rel_tol must be nonnegative");
  if (!(cfg.transplant_tol > 0)) throw std::invalid_argument("transplant_tol must be positive");
  if (cfg.count < 1 || cfg.dirichlet_count < 1) throw std::invalid_argument("count must be at least 1");
  auto check_levels = [](const std::vector<int>& r, const char* what) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] < 1) throw std::invalid_argument(std::string(what) + ": refinement levels must be positive");
      if (i > 0 && r[i] <= r[i - 1]) throw std::invalid_argument(std::string(what) + ": refinement levels must ascend");
    }
  };
  if (cfg.refine.empty()) throw std::invalid_argument("refine: at least one level required");
  check_levels(cfg.refine, "refine");
  check_levels(cfg.dirichlet_refine, "dirichlet_refine");
  parse_generator_set(cfg.gens);
  parse_mode(cfg.mode);
  if (cfg.coarse != "builtin" && cfg.coarse != "earclip") throw std::invalid_argument("coarse must be builtin or earclip");
  if (cfg.params.size() != 4) throw std::invalid_argument("params: four integers a,b,c,d required");
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "group") cfg.group = value;
    else if (key == "tile") cfg.tile = value;
    else if (key == "coarse") cfg.coarse = value;
    else if (key == "subgroup") cfg.subgroup = value;
    else if (key == "h1") cfg.h1 = value;
    else if (key == "h2") cfg.h2 = value;
    else if (key == "gens") cfg.gens = value;
    else if (key == "refine") cfg.refine = parse_int_list(value);
    else if (key == "dirichlet_refine") cfg.dirichlet_refine = parse_int_list(value);
    else if (key == "bc") cfg.bc = value;
    else if (key == "mode") cfg.mode = value;
    else if (key == "count") cfg.count = static_cast<int>(parse_integer(key, value));
    else if (key == "dirichlet_count") cfg.dirichlet_count = static_cast<int>(parse_integer(key, value));
    else if (key == "tol") cfg.tol = parse_double(key, value);
    else if (key == "rel_tol") cfg.rel_tol = parse_double(key, value);
    else if (key == "transplant_tol") cfg.transplant_tol = parse_double(key, value);
    else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
    else if (key == "out") cfg.out = value;
    else if (key == "params") {
      cfg.params.clear();
      for (const auto& p : split(value, ',')) cfg.params.push_back(parse_integer(key, p));
    } else if (key.rfind("tile.point.", 0) == 0) {
      const int index = static_cast<int>(parse_integer(key, key.substr(11)));
      const auto xy = split(value, ',');
      if (xy.size() != 2) throw std::invalid_argument("config: " + key + " expects x,y");
      cfg.tile_points[index] = {parse_double(key, xy[0]), parse_double(key, xy[1])};
    } else if (key.rfind("expect.", 0) == 0) {
      cfg.expected[key.substr(7)] = value;
    } else {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str());
}

GeneratorSet parse_generator_set(const std::string& s) {
  if (s == "sigma-t-u" || s == "sigma,t,u") return GeneratorSet::SigmaTU;
  if (s == "st-t-tu" || s == "st,t,tu") return GeneratorSet::StTTu;
  throw std::invalid_argument("generator set must be sigma-t-u or st-t-tu, got '" + s + "'");
}

Subgroup parse_subgroup(const FiniteGroup& g, const std::string& spec) {
  if (spec == "gamma1") return gerst_gamma1(g);
  if (spec == "gamma2") return gerst_gamma2(g);
  if (spec == "cyclic8") return gerst_cyclic8(g);
  if (spec == "trivial") return Subgroup(g, {g.identity()});
  if (spec == "whole") {
    std::vector<Element> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return Subgroup(g, all);
  }
  if (spec.rfind("elements:", 0) == 0) {
    std::vector<Element> gens;
    for (const auto& name : split(spec.substr(9), ',')) gens.push_back(g.by_name(name));
    return Subgroup::generated_by(g, gens);
  }
  throw std::invalid_argument("unknown subgroup '" + spec + "'");
}

TileSpec make_tile(const RunConfig& cfg) {
  TileSpec t = builtin_tile(cfg.tile);
  if (!cfg.tile_points.empty()) t = with_points(t, cfg.tile_points);
  if (cfg.coarse == "earclip") t = with_ear_clipping(t);
  return t;
}

CosetAction make_action(const FiniteGroup& g, const std::string& subgroup, const RunConfig& cfg) {
  const Subgroup h = parse_subgroup(g, subgroup);
  const auto gens = gerst_generators(g, parse_generator_set(cfg.gens));
  const bool standard = h == gerst_gamma1(g) || h == gerst_gamma2(g);
  return coset_action(g, h, gens.elements, gens.labels, standard ? gerst_coset_reps() : std::vector<Element>{});
}

BCAssignment parse_mixed_bc(const SurfaceMesh& m, const std::string& text) {
  BCAssignment a = BCAssignment::uniform(m, BoundaryCondition::Dirichlet);
  const auto& labels = m.tile->spec.labels;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bc line " + std::to_string(lineno) + ": expected selector = condition");
    const std::string sel = trim(line.substr(0, eq));
    const BoundaryCondition bc = parse_condition(trim(line.substr(eq + 1)));

    bool matched = false;
    for (std::size_t i = 0; i < m.boundary.size(); ++i) {
      const auto& seg = m.boundary[i];
      bool hit = false;
      if (sel == "default") hit = true;
      else if (sel == "free") hit = seg.origin == BoundaryOrigin::FreeArc;
      else if (sel == "half") hit = seg.origin == BoundaryOrigin::HalfEdge;
      else if (sel == "mirror") hit = seg.origin == BoundaryOrigin::Mirror;
      else if (sel.rfind("segment.", 0) == 0) hit = std::to_string(seg.id) == sel.substr(8);
      else if (seg.label >= 0 && seg.origin != BoundaryOrigin::FreeArc)
        hit = std::to_string(m.tile_ids[seg.tile]) + labels[seg.label] == sel;
      if (hit) {
        a.per_segment[i] = bc;
        matched = true;
      }
    }
    const bool group_selector = sel == "default" || sel == "free" || sel == "half" || sel == "mirror";
    if (!matched && !group_selector)
      throw std::invalid_argument("bc line " + std::to_string(lineno) + ": selector '" + sel + "' matches no boundary segment");
  }
  return a;
}

BCAssignment make_bc(const SurfaceMesh& m, const std::string& spec) {
  if (spec == "neumann") return BCAssignment::uniform(m, BoundaryCondition::Neumann);
  if (spec == "dirichlet") return BCAssignment::uniform(m, BoundaryCondition::Dirichlet);
  if (spec == "mirror") return BCAssignment::mirror_neumann(m);
  if (spec.rfind("mixed:", 0) == 0) {
    std::ifstream in(spec.substr(6));
    if (!in) throw std::runtime_error("cannot read boundary file " + spec.substr(6));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_mixed_bc(m, ss.str());
  }
  throw std::invalid_argument("bc must be neumann, dirichlet, mirror or mixed:<file>, got '" + spec + "'");
}

}  // namespace isospec::cli
