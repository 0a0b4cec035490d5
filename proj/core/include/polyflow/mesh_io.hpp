#pragma once

#include "polyflow/configuration.hpp"
#include "polyflow/elements.hpp"
#include "polyflow/mesh.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace polyflow {

// Mesh JSON:
//   {"vertices": [[x,y,z], ...],
//    "elements": [{"type": "hexahedron", "nodes": [0-based indices]}, ...],
//    "fixed": [0-based indices]}          ("fixed" may be omitted)

/// Throws MeshFormatError (with line/column for syntax errors) on bad input.
Mesh parse_mesh(std::string_view text);

/// Throws FileNotFoundError if the file cannot be opened.
Mesh read_mesh(const std::filesystem::path& path);

/// Shortest round-trip representation of every coordinate.
std::string mesh_to_json(const Mesh& m, int indent = 2);

void write_mesh(const std::filesystem::path& path, const Mesh& m);

/// A single element configuration. Accepted forms: a mesh document with
/// exactly one element (vertices taken in that element's node order), a
/// document with only "vertices", or a bare [[x,y,z], ...] array. The vertex
/// count must match kind.
Configuration parse_configuration(std::string_view text, ElementKind kind);
Configuration read_configuration(const std::filesystem::path& path, ElementKind kind);

/// {"vertices": [[x,y,z], ...]}
std::string configuration_to_json(const Configuration& p, int indent = 2);

/// {"elements": [{"index", "type", "q"}], "mesh_mean_volume", "min_q", "mean_q",
///  "max_q", "inverted_count"}
std::string quality_report_to_json(const Mesh& m, const QualityReport& r, int indent = 2);

/// index,type,q
void write_quality_report_csv(std::ostream& os, const Mesh& m, const QualityReport& r);

/// Reads a whole file; throws FileNotFoundError.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace polyflow
