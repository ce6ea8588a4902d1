#pragma once

#include "traverse/geometry.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace traverse {

/// Parses a scene document. Rationals are [num, den] pairs, integers, or "p/q"
/// strings. Throws Error(Parse) on malformed JSON or schema violations.
Scene parse_scene(std::string_view json_text);

/// Throws Error(Io) when the file cannot be read, Error(Parse) as above.
Scene load_scene(const std::filesystem::path& path);

/// Canonical JSON of the scene (rationals as "p/q" strings).
std::string scene_to_json(const Scene& scene);

}  // namespace traverse
