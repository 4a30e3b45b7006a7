#include "isospec/spectrum_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace isospec {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_spectrum_csv(std::ostream& os, const SpectrumReport& r) {
  os << "index,eigenvalue,residual,cluster\n";
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    os << i << "," << fmt(r.eigenvalues[i]) << "," << fmt(i < r.residuals.size() ? r.residuals[i] : 0.0) << ","
       << (i < r.cluster.size() ? r.cluster[i] : 0) << "\n";
  }
}

void write_spectrum_csv(const std::string& path, const SpectrumReport& r) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_spectrum_csv(os, r);
}

SpectrumReport read_spectrum_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "index,eigenvalue,residual,cluster")
    throw std::invalid_argument("spectrum CSV: missing header");
  SpectrumReport r;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string idx, ev, res, cl;
    if (!std::getline(ss, idx, ',') || !std::getline(ss, ev, ',') || !std::getline(ss, res, ',') ||
        !std::getline(ss, cl, ','))
      throw std::invalid_argument("spectrum CSV: malformed line: " + line);
    r.eigenvalues.push_back(std::stod(ev));
    r.residuals.push_back(std::stod(res));
    r.cluster.push_back(std::stoi(cl));
  }
  return r;
}

SpectrumReport read_spectrum_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return read_spectrum_csv(is);
}

nlohmann::json to_json(const SpectrumReport& r) {
  return {{"eigenvalues", r.eigenvalues},
          {"residuals", r.residuals},
          {"cluster", r.cluster},
          {"meta",
           {{"mesh", r.mesh_id},
            {"refinement", r.refinement},
            {"bc", r.bc},
            {"mode", r.mode},
            {"iterations", r.iterations},
            {"seed", r.seed},
            {"shift", r.shift},
            {"tol", r.tol},
            {"converged", r.converged}}}};
}

SpectrumReport spectrum_from_json(const nlohmann::json& j) {
  SpectrumReport r;
  r.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
  r.residuals = j.value("residuals", std::vector<double>{});
  r.cluster = j.value("cluster", std::vector<int>{});
  if (j.contains("meta")) {
    const auto& m = j["meta"];
    r.mesh_id = m.value("mesh", "");
    r.refinement = m.value("refinement", 0);
    r.bc = m.value("bc", "");
    r.mode = m.value("mode", "");
    r.iterations = m.value("iterations", 0);
    r.seed = m.value("seed", std::uint64_t{0});
    r.shift = m.value("shift", 0.0);
    r.tol = m.value("tol", 0.0);
    r.converged = m.value("converged", false);
  }
  return r;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  os << j.dump(2) << "\n";
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path);
  return nlohmann::json::parse(is);
}

}  // namespace isospec
