#include "twistcy/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "twistcy/errors.hpp"

namespace twistcy {

namespace {

VertexMask carrier_of(const Bary& b) {
  VertexMask m = 0;
  for (int i = 0; i < kVertexCount; ++i) {
    if (b[static_cast<std::size_t>(i)] > 0) m |= static_cast<VertexMask>(1u << i);
  }
  return m;
}

std::vector<int> vertices_of(VertexMask m) {
  std::vector<int> out;
  for (int i = 0; i < kVertexCount; ++i) {
    if (m & (1u << i)) out.push_back(i);
  }
  return out;
}

// Tuple of the barycentric coordinates restricted to the carrier, used to
// number interior points of faces and facets.
std::vector<int> restricted(const Bary& b, VertexMask face) {
  std::vector<int> out;
  for (int v : vertices_of(face)) out.push_back(b[static_cast<std::size_t>(v)]);
  return out;
}

std::int64_t det3(const std::array<std::array<std::int64_t, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::string cell_string(const BoundaryLattice& lattice, std::span<const int> pts) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ",";
    s += lattice[pts[i]].id;
  }
  return s + "}";
}

}  // namespace

int popcount(VertexMask m) { return std::popcount(static_cast<unsigned>(m)); }

std::string mask_string(VertexMask m) {
  std::string s;
  for (int v : vertices_of(m)) s += static_cast<char>('0' + v);
  return s;
}

std::vector<int> LatticePoint::carrier_vertices() const { return vertices_of(carrier); }

std::vector<LatticePoint> enumerate_boundary_points() {
  // Bucket points by carrier; ids depend on the rank within the bucket.
  std::map<VertexMask, std::vector<Bary>> by_carrier;
  Bary b{};
  for (b[0] = 0; b[0] <= kDilation; ++b[0]) {
    for (b[1] = 0; b[0] + b[1] <= kDilation; ++b[1]) {
      for (b[2] = 0; b[0] + b[1] + b[2] <= kDilation; ++b[2]) {
        for (b[3] = 0; b[0] + b[1] + b[2] + b[3] <= kDilation; ++b[3]) {
          b[4] = kDilation - b[0] - b[1] - b[2] - b[3];
          const VertexMask c = carrier_of(b);
          if (popcount(c) == kVertexCount) continue;  // the interior point
          by_carrier[c].push_back(b);
        }
      }
    }
  }

  auto make_point = [](const Bary& bary, VertexMask carrier, std::string id) {
    LatticePoint p;
    p.bary = bary;
    for (std::size_t i = 0; i < 4; ++i) p.ambient[i] = bary[i + 1] - 1;
    p.carrier = carrier;
    p.kind = static_cast<PointKind>(popcount(carrier) - 1);
    p.id = std::move(id);
    return p;
  };
  auto numbered = [&](VertexMask carrier) {
    auto pts = by_carrier.at(carrier);
    std::sort(pts.begin(), pts.end(), [&](const Bary& x, const Bary& y) {
      return restricted(x, carrier) > restricted(y, carrier);
    });
    return pts;
  };

  std::vector<LatticePoint> out;
  out.reserve(kBoundaryPointCount);
  for (int i = 0; i < kVertexCount; ++i) {
    const auto c = static_cast<VertexMask>(1u << i);
    out.push_back(make_point(by_carrier.at(c).front(), c, "V" + std::to_string(i)));
  }
  for (VertexMask c : BoundaryLattice::edges()) {
    const auto v = vertices_of(c);
    // E<i><j>:<l> sits at V_i + l (V_j - V_i)/5, i.e. b_j = l.
    for (int l = 1; l < kDilation; ++l) {
      Bary q{};
      q[static_cast<std::size_t>(v[0])] = kDilation - l;
      q[static_cast<std::size_t>(v[1])] = l;
      out.push_back(make_point(q, c, "E" + mask_string(c) + ":" + std::to_string(l)));
    }
  }
  for (VertexMask c : BoundaryLattice::two_faces()) {
    int l = 0;
    for (const auto& p : numbered(c)) out.push_back(make_point(p, c, "F" + mask_string(c) + ":" + std::to_string(++l)));
  }
  for (int f = 0; f < kVertexCount; ++f) {
    const auto c = static_cast<VertexMask>(0x1Fu & ~(1u << f));
    int l = 0;
    for (const auto& p : numbered(c)) out.push_back(make_point(p, c, "G" + std::to_string(f) + ":" + std::to_string(++l)));
  }
  return out;
}

// ---------------------------------------------------------------- BoundaryLattice

BoundaryLattice::BoundaryLattice() : points_(enumerate_boundary_points()) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    by_id_.emplace(points_[i].id, static_cast<int>(i));
    by_bary_.emplace(points_[i].bary, static_cast<int>(i));
  }
}

std::optional<int> BoundaryLattice::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

int BoundaryLattice::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw IndexError("unknown divisor id '" + std::string(id) + "'");
}

std::optional<int> BoundaryLattice::find(const Bary& b) const {
  auto it = by_bary_.find(b);
  if (it == by_bary_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> BoundaryLattice::points_on(VertexMask face) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if ((points_[i].carrier & ~face) == 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

int BoundaryLattice::permuted(int i, const std::array<int, kVertexCount>& sigma) const {
  const auto& b = (*this)[i].bary;
  Bary image{};
  for (std::size_t v = 0; v < kVertexCount; ++v) image[static_cast<std::size_t>(sigma[v])] = b[v];
  return *find(image);
}

std::vector<VertexMask> BoundaryLattice::two_faces() {
  std::vector<VertexMask> out;
  for (int i = 0; i < kVertexCount; ++i)
    for (int j = i + 1; j < kVertexCount; ++j)
      for (int k = j + 1; k < kVertexCount; ++k) out.push_back(static_cast<VertexMask>((1u << i) | (1u << j) | (1u << k)));
  return out;
}

std::vector<VertexMask> BoundaryLattice::edges() {
  std::vector<VertexMask> out;
  for (int i = 0; i < kVertexCount; ++i)
    for (int j = i + 1; j < kVertexCount; ++j) out.push_back(static_cast<VertexMask>((1u << i) | (1u << j)));
  return out;
}

// ---------------------------------------------------------------- Triangulation

Triangulation::Triangulation(const BoundaryLattice& lattice, std::vector<Facet> facets)
    : facets_(std::move(facets)), neighbors_(lattice.size()) {
  for (const auto& p : lattice.points()) carriers_.push_back(p.carrier);
  for (VertexMask face : BoundaryLattice::two_faces()) {
    auto tris = face_triangles(face);
    all_face_triangles_.insert(all_face_triangles_.end(), tris.begin(), tris.end());
  }
  std::vector<std::set<int>> adj(lattice.size());
  for (const auto& t : all_face_triangles_) {
    for (int a : t)
      for (int b : t)
        if (a != b) adj[static_cast<std::size_t>(a)].insert(b);
  }
  for (std::size_t i = 0; i < adj.size(); ++i) neighbors_[i].assign(adj[i].begin(), adj[i].end());
}

std::vector<Cell> Triangulation::cells() const {
  std::vector<Cell> out;
  for (const auto& f : facets_) out.insert(out.end(), f.cells.begin(), f.cells.end());
  return out;
}

std::vector<Triangle> Triangulation::face_triangles(VertexMask face, std::optional<int> via_facet) const {
  const Facet* source = nullptr;
  for (const auto& f : facets_) {
    const bool incident = !(face & (1u << f.omitted_vertex));
    if (!incident) continue;
    if (!via_facet || *via_facet == f.omitted_vertex) {
      source = &f;
      break;
    }
  }
  if (!source) throw IndexError("facet " + std::to_string(via_facet.value_or(-1)) + " does not contain face " + mask_string(face));

  auto on_face = [&](int p) { return (carriers_[static_cast<std::size_t>(p)] & ~face) == 0; };
  std::set<Triangle> tris;
  for (const auto& c : source->cells) {
    for (int skip = 0; skip < 4; ++skip) {
      Triangle t{};
      std::size_t n = 0;
      for (int k = 0; k < 4; ++k) {
        if (k != skip) t[n++] = c[static_cast<std::size_t>(k)];
      }
      if (std::all_of(t.begin(), t.end(), on_face)) tris.insert(t);
    }
  }
  return {tris.begin(), tris.end()};
}

std::vector<Segment> Triangulation::edge_segments(VertexMask edge) const {
  auto on_edge = [&](int p) { return (carriers_[static_cast<std::size_t>(p)] & ~edge) == 0; };
  std::set<Segment> segs;
  for (const auto& f : facets_) {
    for (const auto& c : f.cells) {
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b)
          if (on_edge(c[a]) && on_edge(c[b])) segs.insert({c[a], c[b]});
    }
  }
  return {segs.begin(), segs.end()};
}

bool Triangulation::face_adjacent(int a, int b) const {
  const auto& n = face_neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

std::vector<int> Triangulation::apexes(int a, int b) const {
  std::vector<int> out;
  for (const auto& t : all_face_triangles_) {
    const bool has_a = std::find(t.begin(), t.end(), a) != t.end();
    const bool has_b = std::find(t.begin(), t.end(), b) != t.end();
    if (!has_a || !has_b || a == b) continue;
    for (int p : t) {
      if (p != a && p != b) out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::int64_t facet_lattice_determinant(const BoundaryLattice& lattice, const Cell& cell, int omitted_vertex) {
  // Any 3 of the facet's 4 barycentric coordinates are lattice coordinates
  // on its affine hyperplane.
  std::vector<int> coords;
  for (int v = 0; v < kVertexCount; ++v) {
    if (v != omitted_vertex) coords.push_back(v);
  }
  coords.pop_back();
  std::array<std::array<std::int64_t, 3>, 3> m{};
  const auto& base = lattice[cell[0]].bary;
  for (std::size_t r = 0; r < 3; ++r) {
    const auto& p = lattice[cell[r + 1]].bary;
    for (std::size_t c = 0; c < 3; ++c) {
      const auto v = static_cast<std::size_t>(coords[c]);
      m[r][c] = p[v] - base[v];
    }
  }
  return det3(m);
}

Triangulation staircase_triangulation(const BoundaryLattice& lattice, const FacetOrdering& order) {
  constexpr int k = kDilation;
  std::vector<Triangulation::Facet> facets;
  for (int f = 0; f < kVertexCount; ++f) {
    Triangulation::Facet facet;
    facet.omitted_vertex = f;
    facet.vertex_order = order(f);
    const auto& u = facet.vertex_order;

    // Staircase coordinates z1 >= z2 >= z3 are suffix sums of the ordered
    // barycentric coordinates; the facet is the region k >= z1 >= z2 >= z3 >= 0
    // of the Freudenthal arrangement, and each unit cube splits into 3! cells.
    std::array<int, 3> perm{0, 1, 2};
    std::set<Cell> cells;
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y)
        for (int w = 0; w < k; ++w) {
          std::sort(perm.begin(), perm.end());
          do {
            std::array<std::array<int, 3>, 4> zs{};
            zs[0] = {x, y, w};
            for (std::size_t s = 0; s < 3; ++s) {
              zs[s + 1] = zs[s];
              ++zs[s + 1][static_cast<std::size_t>(perm[s])];
            }
            const bool inside = std::all_of(zs.begin(), zs.end(), [&](const auto& z) {
              return k >= z[0] && z[0] >= z[1] && z[1] >= z[2] && z[2] >= 0;
            });
            if (!inside) continue;
            Cell cell{};
            for (std::size_t s = 0; s < 4; ++s) {
              const auto& z = zs[s];
              Bary b{};
              b[static_cast<std::size_t>(u[0])] = k - z[0];
              b[static_cast<std::size_t>(u[1])] = z[0] - z[1];
              b[static_cast<std::size_t>(u[2])] = z[1] - z[2];
              b[static_cast<std::size_t>(u[3])] = z[2];
              cell[s] = *lattice.find(b);
            }
            std::sort(cell.begin(), cell.end());
            cells.insert(cell);
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
    facet.cells.assign(cells.begin(), cells.end());
    if (facet.cells.size() != static_cast<std::size_t>(k * k * k)) {
      throw TriangulationError("facet " + std::to_string(f) + " has " + std::to_string(facet.cells.size()) +
                               " cells, expected 125");
    }
    for (const auto& c : facet.cells) {
      const auto d = facet_lattice_determinant(lattice, c, f);
      if (d != 1 && d != -1) {
        throw TriangulationError("non-unimodular cell " + cell_string(lattice, c) + " (determinant " +
                                 std::to_string(d) + ")");
      }
    }
    facets.push_back(std::move(facet));
  }
  return Triangulation(lattice, std::move(facets));
}

namespace {
std::array<int, 4> facet_vertices(int omitted) {
  std::array<int, 4> out{};
  std::size_t n = 0;
  for (int v = 0; v < kVertexCount; ++v) {
    if (v != omitted) out[n++] = v;
  }
  return out;
}
}  // namespace

Triangulation standard_triangulation(const BoundaryLattice& lattice) {
  return staircase_triangulation(lattice, facet_vertices);
}

Triangulation alternate_triangulation(const BoundaryLattice& lattice) {
  return staircase_triangulation(lattice, [](int omitted) {
    auto u = facet_vertices(omitted);
    std::swap(u[1], u[2]);
    return u;
  });
}

Triangulation make_triangulation(const BoundaryLattice& lattice, TriangulationVariant variant) {
  return variant == TriangulationVariant::Standard ? standard_triangulation(lattice) : alternate_triangulation(lattice);
}

std::vector<std::string> check_triangulation(const BoundaryLattice& lattice, const Triangulation& t) {
  std::vector<std::string> failures;
  for (const auto& f : t.facets()) {
    const auto facet_mask = static_cast<VertexMask>(0x1Fu & ~(1u << f.omitted_vertex));
    if (f.cells.size() != 125) failures.push_back("facet " + std::to_string(f.omitted_vertex) + " cell count");
    for (const auto& c : f.cells) {
      for (int p : c) {
        if (lattice[p].carrier & ~facet_mask) failures.push_back("cell " + cell_string(lattice, c) + " leaves its facet");
      }
      const auto d = facet_lattice_determinant(lattice, c, f.omitted_vertex);
      if (d != 1 && d != -1) failures.push_back("cell " + cell_string(lattice, c) + " not unimodular");
    }
  }
  for (VertexMask face : BoundaryLattice::two_faces()) {
    std::vector<std::vector<Triangle>> restrictions;
    for (int f = 0; f < kVertexCount; ++f) {
      if (!(face & (1u << f))) restrictions.push_back(t.face_triangles(face, f));
    }
    for (const auto& r : restrictions) {
      if (r.size() != 25) failures.push_back("face " + mask_string(face) + " has " + std::to_string(r.size()) + " triangles");
    }
    if (restrictions.size() != 2 || restrictions[0] != restrictions[1]) {
      failures.push_back("face " + mask_string(face) + " restrictions disagree");
    }
  }
  for (VertexMask edge : BoundaryLattice::edges()) {
    const auto segs = t.edge_segments(edge);
    if (segs.size() != 5) failures.push_back("edge " + mask_string(edge) + " has " + std::to_string(segs.size()) + " segments");
  }
  return failures;
}

// ---------------------------------------------------------------- determinants

std::int64_t determinant4(const std::array<Ambient, 4>& m) {
  std::int64_t det = 0;
  for (std::size_t c = 0; c < 4; ++c) {
    std::array<std::array<std::int64_t, 3>, 3> minor{};
    for (std::size_t r = 1; r < 4; ++r) {
      std::size_t mc = 0;
      for (std::size_t cc = 0; cc < 4; ++cc) {
        if (cc != c) minor[r - 1][mc++] = m[r][cc];
      }
    }
    const std::int64_t term = m[0][c] * det3(minor);
    det += (c % 2 == 0) ? term : -term;
  }
  return det;
}

std::array<Ambient, 4> adjugate4(const std::array<Ambient, 4>& m) {
  std::array<Ambient, 4> adj{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      std::array<std::array<std::int64_t, 3>, 3> minor{};
      std::size_t mr = 0;
      for (std::size_t rr = 0; rr < 4; ++rr) {
        if (rr == r) continue;
        std::size_t mc = 0;
        for (std::size_t cc = 0; cc < 4; ++cc) {
          if (cc != c) minor[mr][mc++] = m[rr][cc];
        }
        ++mr;
      }
      const std::int64_t cof = ((r + c) % 2 == 0 ? 1 : -1) * det3(minor);
      adj[c][r] = cof;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

// ---------------------------------------------------------------- fan

std::uint32_t pack_subset(std::span<const int> sorted) {
  std::uint32_t key = 0;
  for (int r : sorted) key = (key << 8) | static_cast<std::uint32_t>(r + 1);
  return key;
}

SimplicialFan build_fan(const BoundaryLattice& lattice, const Triangulation& t) {
  SimplicialFan fan;
  for (const auto& p : lattice.points()) fan.rays_.push_back(p.ambient);
  fan.cones_ = t.cells();
  fan.star_.resize(fan.rays_.size());

  for (std::size_t ci = 0; ci < fan.cones_.size(); ++ci) {
    const auto& c = fan.cones_[ci];
    std::array<Ambient, 4> gens{};
    for (std::size_t k = 0; k < 4; ++k) gens[k] = fan.rays_[static_cast<std::size_t>(c[k])];
    const auto d = determinant4(gens);
    if (d != 1 && d != -1) {
      throw SmoothnessError("cone over " + cell_string(lattice, c) + " has determinant " + std::to_string(d));
    }
    for (unsigned mask = 1; mask < 16; ++mask) {
      std::vector<int> sub;
      for (std::size_t k = 0; k < 4; ++k) {
        if (mask & (1u << k)) sub.push_back(c[k]);
      }
      fan.faces_[pack_subset(sub)].push_back(static_cast<int>(ci));
    }
  }
  for (const auto& c : fan.cones_) {
    for (std::size_t skip = 0; skip < 4; ++skip) {
      std::vector<int> wall;
      for (std::size_t k = 0; k < 4; ++k) {
        if (k != skip) wall.push_back(c[k]);
      }
      const auto n = fan.faces_.at(pack_subset(wall)).size();
      if (n != 2) {
        throw CompletenessError("wall " + cell_string(lattice, wall) + " lies in " + std::to_string(n) +
                                " maximal cones");
      }
    }
  }
  for (std::size_t r = 0; r < fan.rays_.size(); ++r) {
    const int ray = static_cast<int>(r);
    std::set<int> star;
    for (int ci : fan.faces_.at(pack_subset(std::span<const int>(&ray, 1)))) {
      const auto& c = fan.cones_[static_cast<std::size_t>(ci)];
      star.insert(c.begin(), c.end());
    }
    fan.star_[r].assign(star.begin(), star.end());
  }
  return fan;
}

bool SimplicialFan::contains_cone(std::span<const int> rays) const {
  return !maximal_cones_containing(rays).empty();
}

std::vector<int> SimplicialFan::maximal_cones_containing(std::span<const int> rays) const {
  std::vector<int> s(rays.begin(), rays.end());
  for (int r : s) {
    if (r < 0 || static_cast<std::size_t>(r) >= rays_.size()) {
      throw IndexError("ray index " + std::to_string(r) + " out of range");
    }
  }
  if (s.size() > 4) throw IndexError("cone query with more than four rays");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) {
    std::vector<int> all(cones_.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  auto it = faces_.find(pack_subset(s));
  if (it == faces_.end()) return {};
  return it->second;
}

std::string SimplicialFan::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&](std::int64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  for (const auto& r : rays_)
    for (auto x : r) mix(x);
  auto sorted = cones_;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& c : sorted)
    for (int x : c) mix(x);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<int> SimplicialFan::locate(const Ambient& x) const {
  for (std::size_t ci = 0; ci < cones_.size(); ++ci) {
    std::array<Ambient, 4> gens{};
    for (std::size_t k = 0; k < 4; ++k) gens[k] = rays_[static_cast<std::size_t>(cones_[ci][k])];
    const auto det = determinant4(gens);
    const auto adj = adjugate4(gens);
    // x = sum_k lambda_k gens[k]  <=>  lambda = x * gens^{-1}.
    bool inside = true;
    for (std::size_t k = 0; k < 4 && inside; ++k) {
      std::int64_t num = 0;
      for (std::size_t j = 0; j < 4; ++j) num += x[j] * adj[j][k];
      if (num * det < 0) inside = false;
    }
    if (inside) return static_cast<int>(ci);
  }
  return std::nullopt;
}

bool cone_query(const SimplicialFan& fan, std::span<const int> rays) { return fan.contains_cone(rays); }

}  // namespace twistcy
