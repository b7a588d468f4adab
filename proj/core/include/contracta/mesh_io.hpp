#pragma once

#include <filesystem>
#include <string>

#include "contracta/filtered_complex.hpp"

namespace contracta {

/// Where vertex heights come from when loading a mesh.
struct HeightSpec {
  enum class Kind { Z, Curvature, File };
  Kind kind = Kind::Z;
  std::filesystem::path file;  // for Kind::File: lines of "index value"

  static HeightSpec z() { return {Kind::Z, {}}; }
  static HeightSpec curvature() { return {Kind::Curvature, {}}; }
  static HeightSpec from_file(std::filesystem::path p) { return {Kind::File, std::move(p)}; }

  /// "z", "curvature", or anything else as a height-file path.
  static HeightSpec parse(const std::string& text);
};

/// Loads an OFF or OBJ triangle mesh (picked by file extension, falling back
/// to content sniffing) into a lower-star filtered complex; vertex heights
/// per `heights`, simplex heights by maximum over vertices. Curvature means
/// the angle deficit 2*pi minus the sum of incident triangle angles.
/// Throws ParseError, NonTriangleFaceError, UnknownVertexInHeightFileError.
FilteredComplex load_mesh(const std::filesystem::path& path, const HeightSpec& heights);

/// Writes vertices and triangles as OFF, renumbering vertices in ascending
/// VertexId order. Vertices without stored positions get (0, 0, height).
void save_mesh_off(const FilteredComplex& K, const std::filesystem::path& path);

}  // namespace contracta
