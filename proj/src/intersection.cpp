#include "twistcy/intersection.hpp"

#include <algorithm>
#include <set>

#include "twistcy/errors.hpp"

namespace twistcy {

// ---------------------------------------------------------------- quad products

std::int64_t IntersectionCalculator::quad_product(std::array<int, 4> rays) const {
  return evaluate(rays, std::nullopt);
}

std::int64_t IntersectionCalculator::quad_product_with_choice(std::array<int, 4> rays, std::size_t choice) const {
  return evaluate(rays, choice);
}

std::int64_t IntersectionCalculator::evaluate(std::array<int, 4> m, std::optional<std::size_t> choice) const {
  std::sort(m.begin(), m.end());
  const std::uint32_t key = pack_subset(m);
  if (!choice) {
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  std::vector<int> support(m.begin(), m.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const auto cones = fan_->maximal_cones_containing(support);  // validates indices

  std::int64_t result = 0;
  if (cones.empty()) {
    result = 0;
  } else if (support.size() == 4) {
    result = 1;
  } else {
    int repeated = -1;
    for (std::size_t i = 0; i + 1 < 4; ++i) {
      if (m[i] == m[i + 1]) {
        repeated = m[i];
        break;
      }
    }
    const auto& cone = fan_->max_cones()[static_cast<std::size_t>(cones[choice.value_or(0) % cones.size()])];
    std::array<Ambient, 4> gens{};
    std::size_t pos = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      gens[k] = fan_->rays()[static_cast<std::size_t>(cone[k])];
      if (cone[k] == repeated) pos = k;
    }
    const auto det = determinant4(gens);
    if (det != 1 && det != -1) {
      throw NotSmoothError("dual vector system unsolvable: cone determinant " + std::to_string(det));
    }
    // Dual vector u with <u, gens[k]> = [k == pos]: column pos of gens^{-1}.
    const auto adj = adjugate4(gens);
    Ambient u{};
    for (std::size_t j = 0; j < 4; ++j) u[j] = adj[j][pos] * det;

    // Linear relation sum_w <u, v_w> D_w = 0 replaces one copy of the
    // repeated divisor by -sum over rays outside the cone.
    std::array<int, 4> rest = m;
    *std::find(rest.begin(), rest.end(), repeated) = -1;
    for (int w : fan_->star(repeated)) {
      if (std::find(cone.begin(), cone.end(), w) != cone.end()) continue;
      const auto& r = fan_->rays()[static_cast<std::size_t>(w)];
      std::int64_t coef = 0;
      for (std::size_t j = 0; j < 4; ++j) coef += u[j] * r[j];
      if (coef == 0) continue;
      std::array<int, 4> next = rest;
      *std::find(next.begin(), next.end(), -1) = w;
      result -= coef * evaluate(next, choice);
    }
  }
  if (!choice) memo_.emplace(key, result);
  return result;
}

std::int64_t IntersectionCalculator::anticanonical_triple(int a, int b, int c) const {
  const std::array<int, 3> abc{a, b, c};
  if (!fan_->contains_cone(abc)) return 0;
  std::int64_t total = 0;
  for (int w : fan_->star(a)) total += quad_product({a, b, c, w});
  return total;
}

// ---------------------------------------------------------------- TripleTable

TripleTable::TripleTable(std::vector<std::string> basis, std::string provenance, bool with_integer)
    : n_(basis.size()), basis_(std::move(basis)), provenance_(std::move(provenance)), mod2_(n_ * n_ * n_, 0) {
  if (with_integer) integer_.assign(n_ * n_ * n_, 0);
}

std::optional<std::int64_t> TripleTable::integer_value(int a, int b, int c) const {
  if (integer_.empty()) return std::nullopt;
  return integer_[index(a, b, c)];
}

void TripleTable::set(int a, int b, int c, std::int64_t value) {
  std::array<int, 3> p{a, b, c};
  std::sort(p.begin(), p.end());
  const auto bit = static_cast<std::uint8_t>(((value % 2) + 2) % 2);
  do {
    mod2_[index(p[0], p[1], p[2])] = bit;
    if (!integer_.empty()) integer_[index(p[0], p[1], p[2])] = value;
  } while (std::next_permutation(p.begin(), p.end()));
}

void TripleTable::set_mod2(int a, int b, int c, int value) {
  std::array<int, 3> p{a, b, c};
  std::sort(p.begin(), p.end());
  do {
    mod2_[index(p[0], p[1], p[2])] = static_cast<std::uint8_t>(value & 1);
  } while (std::next_permutation(p.begin(), p.end()));
}

bool TripleTable::same_mod2(const TripleTable& other) const {
  return basis_ == other.basis_ && mod2_ == other.mod2_;
}

TripleTable build_triple_table(const BoundaryLattice& lattice, const SimplicialFan& fan, bool keep_integer) {
  IntersectionCalculator calc(fan);
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < kBasisSize; ++i) basis.push_back(lattice.points()[i].id);
  TripleTable table(std::move(basis), fan.fingerprint(), keep_integer);

  const int total = static_cast<int>(lattice.size());
  const int n = static_cast<int>(kBasisSize);
  for (int a = 0; a < total; ++a) {
    for (int b : fan.star(a)) {
      if (b < a) continue;
      for (int c : fan.star(b)) {
        if (c < b) continue;
        const auto value = calc.anticanonical_triple(a, b, c);
        if (c >= n) {
          if (value != 0) {
            throw FacetDivisorNonzeroError("facet-interior triple (" + lattice[a].id + "," + lattice[b].id + "," +
                                           lattice[c].id + ") = " + std::to_string(value));
          }
          continue;
        }
        if (value != 0) table.set(a, b, c, value);
      }
    }
  }
  return table;
}

// ---------------------------------------------------------------- verification

std::string to_string(EdgeOrientation o) {
  switch (o) {
    case EdgeOrientation::Forward: return "forward";
    case EdgeOrientation::Reverse: return "reverse";
    case EdgeOrientation::Both: return "both";
    case EdgeOrientation::None: return "none";
  }
  return "none";
}

std::vector<int> squaring_support(const TripleTable& table, int d) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(table.size()); ++x) {
    if (table.value(d, d, x)) out.push_back(x);
  }
  return out;
}

bool share_two_face(const BoundaryLattice& lattice, std::initializer_list<int> pts) {
  VertexMask u = 0;
  for (int p : pts) u |= lattice[p].carrier;
  return popcount(u) <= 3;
}

VerificationReport verify_triple_rules(const TripleTable& t, const BoundaryLattice& lattice, const Triangulation& tri) {
  VerificationReport rep;
  rep.title = "Mod-2 triple intersections on the mirror quintic";
  const int n = static_cast<int>(t.size());
  auto name = [&](int i) { return t.basis()[static_cast<std::size_t>(i)]; };
  auto triple = [&](int a, int b, int c) { return "(" + name(a) + "," + name(b) + "," + name(c) + ")"; };

  auto& cubes_ve = rep.add("cubes of V and E divisors equal 1");
  auto& cubes_f = rep.add("cubes of F divisors equal 0");
  for (int d = 0; d < n; ++d) {
    const int v = t.value(d, d, d);
    if (lattice[d].kind == PointKind::FaceInterior) {
      cubes_f.record(v == 0, triple(d, d, d) + " = " + std::to_string(v));
    } else {
      cubes_ve.record(v == 1, triple(d, d, d) + " = " + std::to_string(v));
    }
  }

  auto& sv = rep.add("|S_D| = 5 for vertices");
  auto& se = rep.add("|S_D| = 8 for edge-interior divisors");
  for (int d = 0; d < n; ++d) {
    const auto s = squaring_support(t, d).size();
    if (lattice[d].kind == PointKind::Vertex) sv.record(s == 5, name(d) + ": " + std::to_string(s));
    if (lattice[d].kind == PointKind::EdgeInterior) se.record(s == 8, name(d) + ": " + std::to_string(s));
  }

  std::set<Triangle> small;
  for (VertexMask face : BoundaryLattice::two_faces()) {
    for (const auto& tr : tri.face_triangles(face)) small.insert(tr);
  }
  auto& tri_one = rep.add("distinct triples spanning a small triangle equal 1");
  auto& tri_zero = rep.add("distinct same-face triples not spanning a triangle equal 0");
  auto& off_face = rep.add("triples without a common 2-face equal 0");
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      for (int c = b; c < n; ++c) {
        const int v = t.value(a, b, c);
        if (!share_two_face(lattice, {a, b, c})) {
          off_face.record(v == 0, triple(a, b, c));
          continue;
        }
        if (a == b || b == c) continue;
        if (small.count({a, b, c})) {
          tri_one.record(v == 1, triple(a, b, c));
        } else {
          tri_zero.record(v == 0, triple(a, b, c));
        }
      }
    }
  }

  // Spot checks along every edge: T(E2,E2,E3) = 1 and T(E1,E1,E2) = 0 under
  // the forward numbering; the reverse numbering swaps l <-> 5 - l.
  auto edge_point = [&](VertexMask edge, int l) {
    return lattice.index_of("E" + mask_string(edge) + ":" + std::to_string(l));
  };
  bool forward_ok = true;
  bool reverse_ok = true;
  for (VertexMask edge : BoundaryLattice::edges()) {
    auto e = [&](int l) { return edge_point(edge, l); };
    forward_ok = forward_ok && t.value(e(2), e(2), e(3)) == 1 && t.value(e(1), e(1), e(2)) == 0;
    reverse_ok = reverse_ok && t.value(e(3), e(3), e(2)) == 1 && t.value(e(4), e(4), e(3)) == 0;
  }
  const auto orientation = forward_ok && reverse_ok ? EdgeOrientation::Both
                           : forward_ok             ? EdgeOrientation::Forward
                           : reverse_ok             ? EdgeOrientation::Reverse
                                                    : EdgeOrientation::None;
  auto& spot = rep.add("edge numbering spot checks under one orientation");
  spot.record(orientation != EdgeOrientation::None, "neither orientation of the E numbering matches on all edges");
  rep.facts["edge_orientation"] = to_string(orientation);
  if (orientation == EdgeOrientation::None) rep.facts["convention_flag"] = "E numbering convention unresolved";

  std::size_t asymmetric = 0;
  std::size_t graph_edges = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!share_two_face(lattice, {a, b})) continue;
      const int ab = t.value(a, a, b);
      const int ba = t.value(b, b, a);
      if (ab != ba) ++asymmetric;
      if (ab && ba) ++graph_edges;
    }
  }
  rep.facts["asymmetric_same_face_pairs"] = std::to_string(asymmetric);
  rep.facts["symmetric_graph_edges"] = std::to_string(graph_edges);
  return rep;
}

}  // namespace twistcy
