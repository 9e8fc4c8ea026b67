#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "twistcy/errors.hpp"
#include "twistcy/lattice.hpp"

using namespace twistcy;

namespace {

std::int64_t gcd4(const Ambient& a) {
  std::int64_t g = 0;
  for (auto x : a) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("boundary point counts match brute force") {
    // P = { x : x_i >= -1, sum x <= 1 }; boundary iff some inequality is tight.
    std::size_t total = 0, boundary = 0;
    for (int a = -1; a <= 4; ++a)
      for (int b = -1; b <= 4; ++b)
        for (int c = -1; c <= 4; ++c)
          for (int d = -1; d <= 4; ++d) {
            if (a + b + c + d > 1) continue;
            ++total;
            if (a == -1 || b == -1 || c == -1 || d == -1 || a + b + c + d == 1) ++boundary;
          }
    CHECK(total == 126);
    CHECK(boundary == 125);

    const BoundaryLattice lat;
    CHECK(lat.size() == boundary);
    std::map<PointKind, int> kinds;
    for (const auto& p : lat.points()) ++kinds[p.kind];
    CHECK(kinds[PointKind::Vertex] == 5);
    CHECK(kinds[PointKind::EdgeInterior] == 40);
    CHECK(kinds[PointKind::FaceInterior] == 60);
    CHECK(kinds[PointKind::FacetInterior] == 20);
    for (std::size_t i = 0; i < kBasisSize; ++i) CHECK(lat[static_cast<int>(i)].kind != PointKind::FacetInterior);
  }

  TEST_CASE("ids and coordinates") {
    const BoundaryLattice lat;
    CHECK(lat[lat.index_of("V0")].ambient == Ambient{-1, -1, -1, -1});
    CHECK(lat[lat.index_of("V1")].ambient == Ambient{4, -1, -1, -1});
    CHECK(lat[lat.index_of("E01:1")].ambient == Ambient{0, -1, -1, -1});
    CHECK(lat[lat.index_of("E01:1")].bary == Bary{4, 1, 0, 0, 0});
    CHECK(lat[lat.index_of("F012:1")].bary == Bary{3, 1, 1, 0, 0});
    CHECK(lat[lat.index_of("F012:2")].bary == Bary{2, 2, 1, 0, 0});
    CHECK(lat[lat.index_of("F012:6")].bary == Bary{1, 1, 3, 0, 0});
    CHECK(lat[lat.index_of("G4:1")].bary == Bary{2, 1, 1, 1, 0});
    CHECK_THROWS_AS(lat.index_of("E10:1"), IndexError);
    CHECK_FALSE(lat.find("Q"));
    for (const auto& p : lat.points()) {
      CHECK(std::accumulate(p.bary.begin(), p.bary.end(), 0) == kDilation);
      CHECK(gcd4(p.ambient) == 1);
      VertexMask carrier = 0;
      for (int v = 0; v < kVertexCount; ++v)
        if (p.bary[static_cast<std::size_t>(v)] > 0) carrier |= static_cast<VertexMask>(1u << v);
      CHECK(carrier == p.carrier);
      CHECK(lat.index_of(p.id) == lat.find(p.bary).value());
    }
  }

  TEST_CASE("S5 permutes the points and preserves kinds") {
    const BoundaryLattice lat;
    std::array<int, 5> sigma{0, 1, 2, 3, 4};
    int tested = 0;
    do {
      if (++tested % 7) continue;
      std::set<int> image;
      for (int i = 0; i < static_cast<int>(lat.size()); ++i) {
        const int j = lat.permuted(i, sigma);
        CHECK(lat[j].kind == lat[i].kind);
        image.insert(j);
      }
      CHECK(image.size() == lat.size());
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  TEST_CASE("standard and alternate triangulations satisfy the invariants") {
    const BoundaryLattice lat;
    for (auto variant : {TriangulationVariant::Standard, TriangulationVariant::Alternate}) {
      const auto tri = make_triangulation(lat, variant);
      CHECK(check_triangulation(lat, tri).empty());
      CHECK(tri.facets().size() == 5);
      for (const auto& f : tri.facets()) {
        CHECK(f.cells.size() == 125);
        for (const auto& c : f.cells) {
          const auto d = facet_lattice_determinant(lat, c, f.omitted_vertex);
          CHECK((d == 1 || d == -1));
        }
      }
      for (auto face : BoundaryLattice::two_faces()) {
        std::vector<int> incident;
        for (int f = 0; f < kVertexCount; ++f)
          if (!(face & (1u << f))) incident.push_back(f);
        REQUIRE(incident.size() == 2);
        auto a = tri.face_triangles(face, incident[0]);
        auto b = tri.face_triangles(face, incident[1]);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a.size() == 25);
        CHECK(a == b);
      }
      for (auto edge : BoundaryLattice::edges()) CHECK(tri.edge_segments(edge).size() == 5);
      for (const auto& p : lat.points()) {
        if (p.kind == PointKind::FaceInterior) CHECK(tri.face_neighbors(lat.index_of(p.id)).size() == 6);
      }
    }
  }

  TEST_CASE("the two triangulations differ only inside facets") {
    const BoundaryLattice lat;
    const auto a = standard_triangulation(lat);
    const auto b = alternate_triangulation(lat);
    auto ca = a.cells();
    auto cb = b.cells();
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    CHECK(ca != cb);
    for (auto face : BoundaryLattice::two_faces()) {
      auto ta = a.face_triangles(face);
      auto tb = b.face_triangles(face);
      std::sort(ta.begin(), ta.end());
      std::sort(tb.begin(), tb.end());
      CHECK(ta == tb);
    }
  }

  TEST_CASE("fan is smooth and complete") {
    const auto& p = standard_pipeline();
    const auto& fan = p.fan;
    CHECK(fan.rays().size() == 125);
    CHECK(fan.max_cones().size() == 625);
    std::map<std::array<int, 3>, int> walls;
    for (const auto& c : fan.max_cones()) {
      std::array<Ambient, 4> gens{};
      for (std::size_t i = 0; i < 4; ++i) gens[i] = fan.rays()[static_cast<std::size_t>(c[i])];
      const auto det = determinant4(gens);
      CHECK((det == 1 || det == -1));
      for (std::size_t skip = 0; skip < 4; ++skip) {
        std::array<int, 3> w{};
        std::size_t k = 0;
        for (std::size_t i = 0; i < 4; ++i)
          if (i != skip) w[k++] = c[i];
        ++walls[w];
      }
    }
    for (const auto& [w, count] : walls) CHECK(count == 2);

    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    for (int i = 0; i < 500; ++i) {
      const Ambient x{coord(rng), coord(rng), coord(rng), coord(rng)};
      CHECK(fan.locate(x).has_value());
    }
  }

  TEST_CASE("determinant of the cone over V0, E01:1, E02:1, E03:1") {
    const BoundaryLattice lat;
    const std::array<Ambient, 4> gens{lat[lat.index_of("V0")].ambient, lat[lat.index_of("E01:1")].ambient,
                                      lat[lat.index_of("E02:1")].ambient, lat[lat.index_of("E03:1")].ambient};
    const auto det = determinant4(gens);
    CHECK((det == 1 || det == -1));
    const auto adj = adjugate4(gens);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < 4; ++k) s += gens[i][k] * adj[k][j];
        CHECK(s == (i == j ? det : 0));
      }
  }

  TEST_CASE("cone queries") {
    const auto& p = standard_pipeline();
    const auto& lat = p.lattice;
    for (int r = 0; r < 125; ++r) {
      const std::array<int, 1> one{r};
      CHECK(cone_query(p.fan, one));
    }
    for (const auto& c : p.fan.max_cones()) CHECK(cone_query(p.fan, c));
    const std::array<int, 2> far{lat.index_of("V0"), lat.index_of("V4")};
    CHECK_FALSE(cone_query(p.fan, far));
    const std::array<int, 2> bad{0, 125};
    CHECK_THROWS_AS(cone_query(p.fan, bad), IndexError);
    const std::array<int, 5> too_many{0, 1, 2, 3, 4};
    CHECK_THROWS_AS(cone_query(p.fan, too_many), IndexError);
  }

  TEST_CASE("fingerprint is stable and distinguishes the variants") {
    const BoundaryLattice lat;
    const auto f1 = build_fan(lat, standard_triangulation(lat));
    const auto f2 = build_fan(lat, standard_triangulation(lat));
    const auto f3 = build_fan(lat, alternate_triangulation(lat));
    CHECK(f1.fingerprint() == f2.fingerprint());
    CHECK(f1.fingerprint() != f3.fingerprint());
  }
}
