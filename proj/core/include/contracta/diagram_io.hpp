#pragma once

#include <filesystem>

#include "contracta/persistence.hpp"

namespace contracta {

/// Text format: one point per line, "dim birth death", with the literal
/// token "inf" for infinite deaths. Save and load round-trip exactly.
void save_diagram(const PersistenceDiagram& d, const std::filesystem::path& path);
PersistenceDiagram load_diagram(const std::filesystem::path& path);

/// Scatter plot above the diagonal; essential classes are drawn as triangles
/// pinned to the top edge.
void emit_diagram_svg(const PersistenceDiagram& d, const std::filesystem::path& path);

}  // namespace contracta
