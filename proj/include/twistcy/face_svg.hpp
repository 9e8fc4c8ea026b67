#pragma once

#include <filesystem>
#include <string>

#include "twistcy/lattice.hpp"
#include "twistcy/twist.hpp"

namespace twistcy {

/// SVG drawing of one 2-face: its 25 triangles and 21 divisor points in a
/// fixed equilateral frame, points of L filled. Output is deterministic.
/// Throws IndexError if `face` is not a 2-face.
std::string face_svg(VertexMask face, const BoundaryLattice& lattice, const Triangulation& tri, const TwistClass& L);

/// Throws IOError on an unwritable path.
void emit_face_svg(VertexMask face, const BoundaryLattice& lattice, const Triangulation& tri, const TwistClass& L,
                   const std::filesystem::path& path);

/// Parses "012" style face names. Throws IndexError.
VertexMask parse_face(const std::string& name);

}  // namespace twistcy
