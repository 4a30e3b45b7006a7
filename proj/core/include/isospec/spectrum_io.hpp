#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "isospec/eigensolver.hpp"

namespace isospec {

/// CSV with header `index,eigenvalue,residual,cluster`.
void write_spectrum_csv(std::ostream& os, const SpectrumReport& r);
void write_spectrum_csv(const std::string& path, const SpectrumReport& r);
SpectrumReport read_spectrum_csv(std::istream& is);
SpectrumReport read_spectrum_csv(const std::string& path);

nlohmann::json to_json(const SpectrumReport& r);
SpectrumReport spectrum_from_json(const nlohmann::json& j);

void write_json(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json(const std::string& path);

}  // namespace isospec
