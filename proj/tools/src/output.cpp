#include "isospec_cli/output.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace isospec::cli {

void write_artifact_text(const std::string& dir, const std::string& name, const std::string& text) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / name;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

void write_artifact_json(const std::string& dir, const std::string& name, const nlohmann::json& j) {
  write_artifact_text(dir, name, j.dump(2) + "\n");
}

std::string safe_name(const std::string& s) {
  std::string out;
  for (char c : s) {
    const bool keep = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
    out += keep ? c : '_';
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width) {
  std::size_t shown = 0;
  for (unsigned char c : s) shown += (c & 0xC0) != 0x80;
  return shown >= width ? s : s + std::string(width - shown, ' ');
}

std::string format_matrix(const RationalMatrix& m) {
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width = std::max(width, to_string(m(r, c)).size());
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << std::setw(static_cast<int>(width)) << to_string(m(r, c));
    os << "\n";
  }
  return os.str();
}

}  // namespace isospec::cli
