#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"
#include "normalsurf/curves2d.hpp"
#include "normalsurf/link.hpp"
#include "normalsurf/matching.hpp"
#include "normalsurf/triangulation.hpp"

namespace normalsurf::io {

using Json = nlohmann::ordered_json;

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Two-space indented JSON with a trailing newline.
std::string dump(const Json& j);

/// `{"tetrahedra": [...], "gluings": [{"tet", "face", "to": {"tet", "verts"}}]}`.
/// A gluing may be listed from either side or both; the reciprocal is inferred
/// and a conflicting entry is an InputError naming it. Syntax errors carry the
/// byte offset. Other top-level keys (e.g. "metadata") are ignored.
Triangulation parse_triangulation(std::string_view text);

/// Each gluing once, from its lower (tet, face) side, faces in ascending order.
Json triangulation_json(const Triangulation& tri);

/// `{"components": [{"edgeCycle": [{"tet", "edge": [a, b]}, ...]}, {"idealVertex": {"tet", "vertex"}}]}`.
LinkSpec parse_link(std::string_view text, const Triangulation& tri);
Json link_json(const LinkSpec& link, const Triangulation& tri);

/// A single cycle, `{"edgeCycle": [...]}`.
EdgeCycle parse_cycle(std::string_view text, const Triangulation& tri);
Json cycle_json(const EdgeCycle& cycle, const Triangulation& tri);

/// `{"triangles": [...], "gluings": [{"tri", "face": [a, b], "to": {"tri", "verts": [x, y]}}]}`.
SurfaceTriangulation parse_surface(std::string_view text);
Json surface_json(const SurfaceTriangulation& surf);

/// `{"coords": [...], "blocks": {name: [t0 t1 t2 t3 q01 q02 q03], ...}}`, blocks in file order.
Json vector_json(const Triangulation& tri, const CoordVector& v);

}  // namespace normalsurf::io
