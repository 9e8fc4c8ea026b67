#pragma once

// Boundary lattice points of the dilated simplex P = 5 * simplex, its
// unimodular boundary triangulations, and the smooth complete fan they span.
//
// Points are addressed by barycentric coordinates (b0..b4) with sum 5; the
// ambient coordinate is (b1-1, b2-1, b3-1, b4-1). Divisor ids follow
//   V<i>            vertex i
//   E<i><j>:<l>     V_i + l (V_j - V_i) / 5,             i < j, l in 1..4
//   F<i><j><k>:<l>  l-th interior point of face ijk,      i < j < k, l in 1..6
//   G<f>:<l>        l-th interior point of the facet missing vertex f, l in 1..4
// where face and facet interior points are numbered by lexicographically
// decreasing barycentric tuple restricted to the face.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace twistcy {

inline constexpr int kDilation = 5;
inline constexpr int kVertexCount = 5;
inline constexpr std::size_t kBoundaryPointCount = 125;
/// Size of the divisor basis S: vertices, edge and 2-face interior points.
inline constexpr std::size_t kBasisSize = 105;

using Bary = std::array<int, kVertexCount>;
using Ambient = std::array<std::int64_t, 4>;
/// Subset of {0..4} as a bitmask.
using VertexMask = std::uint8_t;

enum class PointKind { Vertex, EdgeInterior, FaceInterior, FacetInterior };

struct LatticePoint {
  Bary bary{};
  Ambient ambient{};
  /// Vertices of the face whose relative interior contains the point.
  VertexMask carrier = 0;
  PointKind kind = PointKind::Vertex;
  std::string id;

  std::vector<int> carrier_vertices() const;
};

int popcount(VertexMask m);
std::string mask_string(VertexMask m);

std::vector<LatticePoint> enumerate_boundary_points();

/// The enumerated points plus lookup tables. Index order is the canonical
/// order: V, then E by (i,j,l), then F by (i,j,k,l), then G by (f,l); the
/// first kBasisSize indices form the basis S.
class BoundaryLattice {
 public:
  BoundaryLattice();

  const std::vector<LatticePoint>& points() const { return points_; }
  const LatticePoint& operator[](int i) const { return points_.at(static_cast<std::size_t>(i)); }
  std::size_t size() const { return points_.size(); }

  std::optional<int> find(std::string_view id) const;
  /// Throws IndexError for unknown ids.
  int index_of(std::string_view id) const;
  std::optional<int> find(const Bary& b) const;

  /// Point indices lying on the closed face spanned by `face` (any size).
  std::vector<int> points_on(VertexMask face) const;

  /// Image of point i under the vertex permutation sigma (vertex v -> sigma[v]).
  int permuted(int i, const std::array<int, kVertexCount>& sigma) const;

  static std::vector<VertexMask> two_faces();  // the 10 faces, i<j<k order
  static std::vector<VertexMask> edges();      // the 10 edges, i<j order

 private:
  std::vector<LatticePoint> points_;
  std::unordered_map<std::string, int> by_id_;
  std::map<Bary, int> by_bary_;
};

using Cell = std::array<int, 4>;      // sorted point indices
using Triangle = std::array<int, 3>;  // sorted point indices
using Segment = std::array<int, 2>;   // sorted point indices

enum class TriangulationVariant { Standard, Alternate };

/// Maps a facet (given by its omitted vertex) to the order of its four
/// vertices used by the staircase construction.
using FacetOrdering = std::function<std::array<int, 4>(int omitted)>;

class Triangulation {
 public:
  struct Facet {
    int omitted_vertex = 0;
    std::array<int, 4> vertex_order{};
    std::vector<Cell> cells;
  };

  Triangulation(const BoundaryLattice& lattice, std::vector<Facet> facets);

  const std::vector<Facet>& facets() const { return facets_; }
  std::vector<Cell> cells() const;

  /// Triangles of the induced subdivision of a 2-face, restricted from the
  /// given facet (or the first incident facet when omitted).
  std::vector<Triangle> face_triangles(VertexMask face, std::optional<int> via_facet = {}) const;
  std::vector<Segment> edge_segments(VertexMask edge) const;

  /// Neighbors of point p in the union of all 2-face subdivisions.
  const std::vector<int>& face_neighbors(int p) const { return neighbors_.at(static_cast<std::size_t>(p)); }
  bool face_adjacent(int a, int b) const;
  /// Third vertices of 2-face triangles containing the segment {a,b}.
  std::vector<int> apexes(int a, int b) const;

 private:
  std::vector<VertexMask> carriers_;
  std::vector<Facet> facets_;
  std::vector<Triangle> all_face_triangles_;
  std::vector<std::vector<int>> neighbors_;
};

/// Staircase (Freudenthal) triangulation of every facet in the given vertex
/// order. Throws TriangulationError if a cell fails to be unimodular or a
/// facet does not contain exactly 125 cells.
Triangulation staircase_triangulation(const BoundaryLattice& lattice, const FacetOrdering& order);
Triangulation standard_triangulation(const BoundaryLattice& lattice);
/// Same boundary restriction as the standard one, different facet interiors.
Triangulation alternate_triangulation(const BoundaryLattice& lattice);
Triangulation make_triangulation(const BoundaryLattice& lattice, TriangulationVariant variant);

/// Determinant of the three edge vectors of a cell in its facet's lattice.
std::int64_t facet_lattice_determinant(const BoundaryLattice& lattice, const Cell& cell, int omitted_vertex);

/// Failures of the per-triangulation invariants; empty means all hold.
std::vector<std::string> check_triangulation(const BoundaryLattice& lattice, const Triangulation& t);

std::int64_t determinant4(const std::array<Ambient, 4>& rows);
/// Adjugate, so that rows * adjugate4(rows) = det * identity.
std::array<Ambient, 4> adjugate4(const std::array<Ambient, 4>& rows);

class SimplicialFan {
 public:
  const std::vector<Ambient>& rays() const { return rays_; }
  const std::vector<Cell>& max_cones() const { return cones_; }

  /// True iff the rays span a cone of the fan. Throws IndexError on
  /// out-of-range indices or more than four rays.
  bool contains_cone(std::span<const int> rays) const;
  /// All maximal cones containing the given (sorted, distinct) ray set.
  std::vector<int> maximal_cones_containing(std::span<const int> rays) const;
  /// Rays sharing at least one maximal cone with `ray` (including itself).
  const std::vector<int>& star(int ray) const { return star_.at(static_cast<std::size_t>(ray)); }

  /// Stable hash of rays and cones, recorded as table provenance.
  std::string fingerprint() const;

  /// Index of a maximal cone containing the integer vector x, or nullopt if
  /// none does (only possible for an incomplete fan).
  std::optional<int> locate(const Ambient& x) const;

 private:
  friend SimplicialFan build_fan(const BoundaryLattice&, const Triangulation&);

  std::vector<Ambient> rays_;
  std::vector<Cell> cones_;
  std::unordered_map<std::uint32_t, std::vector<int>> faces_;  // packed subset -> cones
  std::vector<std::vector<int>> star_;
};

/// Throws SmoothnessError / CompletenessError naming the offending cone or wall.
SimplicialFan build_fan(const BoundaryLattice& lattice, const Triangulation& t);

bool cone_query(const SimplicialFan& fan, std::span<const int> rays);

/// Packs a sorted list of at most four ray indices (< 255) into a key.
std::uint32_t pack_subset(std::span<const int> sorted);

}  // namespace twistcy
