#include "twistcy/face_svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "twistcy/errors.hpp"
#include "twistcy/serialization.hpp"

namespace twistcy {

namespace {

struct Xy {
  double x;
  double y;
};

constexpr Xy kCorners[3] = {{40.0, 400.0}, {460.0, 400.0}, {250.0, 36.27}};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

Xy position(const LatticePoint& p, VertexMask face) {
  Xy out{0.0, 0.0};
  std::size_t k = 0;
  for (int v = 0; v < kVertexCount; ++v) {
    if (!(face & (1u << v))) continue;
    const double w = p.bary[static_cast<std::size_t>(v)] / static_cast<double>(kDilation);
    out.x += w * kCorners[k].x;
    out.y += w * kCorners[k].y;
    ++k;
  }
  return out;
}

}  // namespace

VertexMask parse_face(const std::string& name) {
  VertexMask m = 0;
  for (char c : name) {
    if (c < '0' || c > '4') throw IndexError("bad face name '" + name + "'");
    m |= static_cast<VertexMask>(1u << (c - '0'));
  }
  const auto faces = BoundaryLattice::two_faces();
  if (name.size() != 3 || std::find(faces.begin(), faces.end(), m) == faces.end()) {
    throw IndexError("'" + name + "' is not a 2-face (expected three distinct vertices like 012)");
  }
  return m;
}

std::string face_svg(VertexMask face, const BoundaryLattice& lattice, const Triangulation& tri, const TwistClass& L) {
  const auto faces = BoundaryLattice::two_faces();
  if (std::find(faces.begin(), faces.end(), face) == faces.end()) throw IndexError("not a 2-face");

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"440\" viewBox=\"0 0 500 440\">\n";
  os << "<title>face " << mask_string(face) << "</title>\n";
  os << "<g fill=\"none\" stroke=\"#555\" stroke-width=\"1\">\n";
  for (const auto& t : tri.face_triangles(face)) {
    os << "<polygon points=\"";
    for (std::size_t i = 0; i < 3; ++i) {
      const auto xy = position(lattice[t[i]], face);
      os << (i ? " " : "") << fmt(xy.x) << "," << fmt(xy.y);
    }
    os << "\"/>\n";
  }
  os << "</g>\n<g font-family=\"monospace\" font-size=\"9\">\n";
  for (int p : face_points(lattice, face)) {
    const auto xy = position(lattice[p], face);
    const bool in = L.eps.get(static_cast<std::size_t>(p));
    os << "<circle cx=\"" << fmt(xy.x) << "\" cy=\"" << fmt(xy.y) << "\" r=\"6\" stroke=\"#000\" fill=\""
       << (in ? "#c00" : "#fff") << "\"" << (in ? " class=\"twist\"" : "") << "/>\n";
    os << "<text x=\"" << fmt(xy.x + 7) << "\" y=\"" << fmt(xy.y - 7) << "\">" << lattice[p].id << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

void emit_face_svg(VertexMask face, const BoundaryLattice& lattice, const Triangulation& tri, const TwistClass& L,
                   const std::filesystem::path& path) {
  write_text_file(path, face_svg(face, lattice, tri, L));
}

}  // namespace twistcy
