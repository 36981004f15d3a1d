#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "walshkit/cube_function.hpp"
#include "walshkit/spectral_ops.hpp"

namespace walshkit::io {

// {"n": int, "kind": "point"|"walsh", "re": [...], "im": [...]} with
// arrays of length 2^n in index order.
nlohmann::json function_to_json(const CubeFunction& f);
nlohmann::json spectrum_to_json(const Spectrum& s);

struct LoadedFunction {
  std::string kind;
  std::optional<CubeFunction> point;
  std::optional<Spectrum> walsh;

  int n() const;
  // Synthesizes walsh data when needed.
  CubeFunction as_function() const;
  Spectrum as_spectrum() const;
};

// Throws DomainError on malformed data (wrong lengths, non-finite
// entries, unknown kind).
LoadedFunction function_from_json(const nlohmann::json& j);

nlohmann::json multiplier_to_json(const spectral::LevelMultiplier& m);

// Key-sorted, compact, newline-terminated.
std::string canonical_dump(const nlohmann::json& j);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace walshkit::io
