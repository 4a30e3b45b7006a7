#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "isospec/exact.hpp"

namespace isospec::cli {

/// Creates `dir` if needed and writes `dir/name`.
void write_artifact_text(const std::string& dir, const std::string& name, const std::string& text);
/// Pretty-printed with two-space indent and a trailing newline.
void write_artifact_json(const std::string& dir, const std::string& name, const nlohmann::json& j);

/// Replaces characters that are awkward in file names.
std::string safe_name(const std::string& s);

/// Left-justifies to `width` display columns, counting UTF-8 sequences once.
std::string pad(const std::string& s, std::size_t width);

/// Right-aligned columns of exact entries.
std::string format_matrix(const RationalMatrix& m);

}  // namespace isospec::cli
