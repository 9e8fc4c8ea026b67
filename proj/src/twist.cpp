#include "twistcy/twist.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "twistcy/errors.hpp"

namespace twistcy {

// ---------------------------------------------------------------- TwistClass

TwistClass TwistClass::from_ids(const std::vector<std::string>& basis, const std::vector<std::string>& ids) {
  TwistClass L = zero(basis.size());
  for (const auto& id : ids) {
    auto it = std::find(basis.begin(), basis.end(), id);
    if (it == basis.end()) throw IndexError("'" + id + "' is not a basis divisor");
    L.eps.flip(static_cast<std::size_t>(it - basis.begin()));
  }
  return L;
}

std::vector<std::string> TwistClass::support(const std::vector<std::string>& basis) const {
  std::vector<std::string> out;
  for (auto i : eps.ones()) out.push_back(basis.at(i));
  return out;
}

// ---------------------------------------------------------------- pairings

PairingMatrices build_pairings(const TripleTable& table) {
  const std::size_t n = table.size();
  PairingMatrices p{n, gf2::BitMatrix(n, n), gf2::BitMatrix(n * n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const int ia = static_cast<int>(a);
      const int ib = static_cast<int>(b);
      if (table.value(ia, ia, ib)) p.squaring.set(a, b);
      for (std::size_t d = 0; d < n; ++d) {
        if (table.value(static_cast<int>(d), ia, ib)) p.action.set(a * n + b, d);
      }
    }
  }
  return p;
}

gf2::BitMatrix twisted_pairing(const PairingMatrices& p, const TwistClass& L) {
  if (L.eps.size() != p.n) throw DimensionError("twist length does not match the basis");
  const auto products = p.action.multiply(L.eps);
  gf2::BitMatrix q = p.squaring;
  for (std::size_t a = 0; a < p.n; ++a) {
    for (std::size_t b = 0; b < p.n; ++b) {
      if (products.get(a * p.n + b)) q.set(a, b, !q.get(a, b));
    }
  }
  return q;
}

std::size_t twisted_rank(const PairingMatrices& p, const TwistClass& L) { return gf2::rank(twisted_pairing(p, L)); }

std::optional<std::pair<int, int>> nonzero_witness(const PairingMatrices& p, const TwistClass& L) {
  const auto products = p.action.multiply(L.eps);
  const auto ones = products.ones();
  if (ones.empty()) return std::nullopt;
  return std::pair{static_cast<int>(ones.front() / p.n), static_cast<int>(ones.front() % p.n)};
}

TwistClass TwistCoset::member(std::uint64_t mask) const {
  TwistClass L = particular;
  for (std::size_t i = 0; i < kernel_basis.size(); ++i) {
    if ((mask >> i) & 1u) L.eps ^= kernel_basis[i];
  }
  return L;
}

TwistCoset solve_m2_twists(const PairingMatrices& p) {
  gf2::BitVector rhs(p.n * p.n);
  for (std::size_t a = 0; a < p.n; ++a)
    for (std::size_t b = 0; b < p.n; ++b)
      if (p.squaring.get(a, b)) rhs.set(a * p.n + b);

  const auto action_rank = gf2::rank(p.action);
  auto sol = gf2::solve_affine(p.action, rhs);
  if (!sol) {
    gf2::BitMatrix augmented(p.n * p.n, p.n + 1);
    for (std::size_t r = 0; r < p.n * p.n; ++r) {
      for (std::size_t c = 0; c < p.n; ++c) augmented.set(r, c, p.action.get(r, c));
      augmented.set(r, p.n, rhs.get(r));
    }
    throw NoSolutionError("D^2 + D L = 0 has no solution: rank(action) = " + std::to_string(action_rank) +
                          ", rank(action | squaring) = " + std::to_string(gf2::rank(augmented)) +
                          ", rank(squaring) = " + std::to_string(gf2::rank(p.squaring)));
  }
  TwistCoset coset{{sol->particular}, std::move(sol->kernel_basis), action_rank};

  const std::size_t dim = coset.dimension();
  const std::uint64_t members = dim <= 12 ? (std::uint64_t{1} << dim) : dim + 1;
  for (std::uint64_t k = 0; k < members; ++k) {
    // Beyond 12 dimensions only the particular solution and its single steps are checked.
    const std::uint64_t mask = dim <= 12 ? k : (k == 0 ? 0 : std::uint64_t{1} << (k - 1));
    const auto L = coset.member(mask);
    if (const auto r = twisted_rank(p, L); r != 0) {
      throw NoSolutionError("coset member " + std::to_string(mask) + " has twisted rank " + std::to_string(r));
    }
    if (!nonzero_witness(p, L)) {
      throw NoSolutionError("coset member " + std::to_string(mask) + " is zero in cohomology");
    }
  }
  return coset;
}

// ---------------------------------------------------------------- local checks

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::OffFace: return "off-face";
    case PairCase::FaceAdjacent: return "face-adjacent";
    case PairCase::FaceApart: return "face-apart";
    case PairCase::FaceInteriorSquare: return "face-interior-square";
    case PairCase::EdgeSquare: return "edge-square";
    case PairCase::EdgeLinked: return "edge-linked";
    case PairCase::EdgeUnlinked: return "edge-unlinked";
  }
  return "?";
}

const std::vector<PairCase>& all_pair_cases() {
  static const std::vector<PairCase> cases{PairCase::OffFace,      PairCase::FaceAdjacent,
                                           PairCase::FaceApart,    PairCase::FaceInteriorSquare,
                                           PairCase::EdgeSquare,   PairCase::EdgeLinked,
                                           PairCase::EdgeUnlinked};
  return cases;
}

bool CaseReport::all_passed() const { return failures() == 0; }

std::size_t CaseReport::failures() const {
  std::size_t f = formula_mismatches;
  for (const auto& [c, t] : tallies) f += t.pairs - t.passed;
  return f;
}

nlohmann::json CaseReport::to_json() const {
  nlohmann::json j;
  j["passed"] = all_passed();
  j["cases"] = nlohmann::json::object();
  for (const auto& [c, t] : tallies) {
    j["cases"][to_string(c)] = {{"pairs", t.pairs}, {"passed", t.passed}, {"witnesses", t.witnesses}};
  }
  j["formula_mismatches"] = formula_mismatches;
  j["mismatch_witnesses"] = mismatch_witnesses;
  return j;
}

std::string CaseReport::to_text() const {
  std::ostringstream os;
  os << "Local configuration check (ordered pairs)\n";
  for (const auto& [c, t] : tallies) {
    os << "  [" << (t.passed == t.pairs ? "PASS" : "FAIL") << "] " << to_string(c) << "  (" << t.passed << "/"
       << t.pairs << ")\n";
    for (const auto& w : t.witnesses) os << "         witness: " << w << "\n";
  }
  os << "  formula mismatches: " << formula_mismatches << "\n";
  for (const auto& w : mismatch_witnesses) os << "         witness: " << w << "\n";
  os << "  overall: " << (all_passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

CaseReport local_validate(const TripleTable& table, const BoundaryLattice& lattice, const Triangulation& tri,
                          const TwistClass& L) {
  const int n = static_cast<int>(table.size());
  if (L.eps.size() != table.size()) throw DimensionError("twist length does not match the basis");
  CaseReport report;
  for (auto c : all_pair_cases()) report.tallies[c];

  std::vector<std::vector<int>> sq(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) sq[static_cast<std::size_t>(d)] = squaring_support(table, d);

  auto name = [&](int i) { return table.basis()[static_cast<std::size_t>(i)]; };

  for (int d1 = 0; d1 < n; ++d1) {
    for (int d2 = 0; d2 < n; ++d2) {
      const auto& p1 = lattice[d1];
      const VertexMask joint = p1.carrier | lattice[d2].carrier;
      const int span = popcount(joint);
      const bool same = d1 == d2;
      const bool adjacent = !same && tri.face_adjacent(d1, d2);
      const int square = table.value(d1, d1, d2);

      const std::array<std::pair<PairCase, bool>, 7> fits{{
          {PairCase::OffFace, span > 3},
          {PairCase::FaceAdjacent, span == 3 && !same && adjacent},
          {PairCase::FaceApart, span == 3 && !same && !adjacent},
          {PairCase::FaceInteriorSquare, same && p1.kind == PointKind::FaceInterior},
          {PairCase::EdgeSquare, same && (p1.kind == PointKind::Vertex || p1.kind == PointKind::EdgeInterior)},
          {PairCase::EdgeLinked, span <= 2 && !same && square == 1},
          {PairCase::EdgeUnlinked, span <= 2 && !same && square == 0},
      }};
      std::vector<PairCase> matched;
      for (const auto& [c, ok] : fits) {
        if (ok) matched.push_back(c);
      }
      if (matched.size() != 1) {
        throw ClassificationError("pair (" + name(d1) + "," + name(d2) + ") matches " +
                                  std::to_string(matched.size()) + " local cases");
      }
      const PairCase c = matched.front();

      // Value of D1^2 D2 and the set whose L-parity gives L D1 D2.
      int required = 0;
      std::vector<int> local;
      switch (c) {
        case PairCase::OffFace:
        case PairCase::FaceApart:
          break;
        case PairCase::FaceAdjacent:
        case PairCase::EdgeLinked:
          required = 1;
          local = tri.apexes(d1, d2);
          local.push_back(d1);
          local.push_back(d2);
          break;
        case PairCase::FaceInteriorSquare:
          local = tri.face_neighbors(d1);
          break;
        case PairCase::EdgeSquare:
          required = 1;
          local = sq[static_cast<std::size_t>(d1)];
          break;
        case PairCase::EdgeUnlinked:
          local = tri.apexes(d1, d2);
          break;
      }
      std::sort(local.begin(), local.end());

      int parity = 0;
      for (int d : local) parity ^= L.eps.get(static_cast<std::size_t>(d)) ? 1 : 0;
      auto& tally = report.tallies[c];
      ++tally.pairs;
      if (parity == required) {
        ++tally.passed;
      } else if (tally.witnesses.size() < kMaxWitnesses) {
        tally.witnesses.push_back("(" + name(d1) + "," + name(d2) + "): |L cap local set| parity " +
                                  std::to_string(parity) + ", needs " + std::to_string(required));
      }

      // The local description must reproduce the table: D1^2 D2 = required
      // and D D1 D2 = 1 exactly for D in the local set.
      bool consistent = square == required;
      for (int d = 0; d < n && consistent; ++d) {
        const bool in_local = std::binary_search(local.begin(), local.end(), d);
        consistent = table.value(d, d1, d2) == (in_local ? 1 : 0);
      }
      if (!consistent) {
        ++report.formula_mismatches;
        if (report.mismatch_witnesses.size() < kMaxWitnesses) {
          report.mismatch_witnesses.push_back("(" + name(d1) + "," + name(d2) + ") case " + to_string(c));
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- face patterns

namespace {

std::array<int, 3> face_triple(const LatticePoint& p, VertexMask face) {
  std::array<int, 3> t{};
  std::size_t k = 0;
  for (int v = 0; v < kVertexCount; ++v) {
    if (face & (1u << v)) t[k++] = p.bary[static_cast<std::size_t>(v)];
  }
  return t;
}

}  // namespace

std::vector<int> face_points(const BoundaryLattice& lattice, VertexMask face) {
  auto pts = lattice.points_on(face);
  std::sort(pts.begin(), pts.end(), [&](int a, int b) {
    return face_triple(lattice[a], face) > face_triple(lattice[b], face);
  });
  return pts;
}

nlohmann::json FacePatternReport::to_json() const {
  nlohmann::json j;
  j["distinct_classes"] = distinct();
  j["faces"] = nlohmann::json::array();
  for (const auto& f : faces) {
    j["faces"].push_back({{"face", mask_string(f.face)}, {"raw", f.raw}, {"canonical", f.canonical}});
  }
  j["classes"] = nlohmann::json::array();
  for (const auto& [mask, count] : classes) j["classes"].push_back({{"canonical", mask}, {"faces", count}});
  return j;
}

FacePatternReport face_patterns(const BoundaryLattice& lattice, const TwistClass& L) {
  FacePatternReport report;
  for (VertexMask face : BoundaryLattice::two_faces()) {
    const auto pts = face_points(lattice, face);
    std::map<std::array<int, 3>, std::size_t> local;
    for (std::size_t i = 0; i < pts.size(); ++i) local[face_triple(lattice[pts[i]], face)] = i;

    FacePattern fp;
    fp.face = face;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (L.eps.get(static_cast<std::size_t>(pts[i]))) fp.raw |= 1u << i;
    }
    fp.canonical = fp.raw;
    std::array<int, 3> perm{0, 1, 2};
    do {
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!((fp.raw >> i) & 1u)) continue;
        const auto t = face_triple(lattice[pts[i]], face);
        const std::array<int, 3> moved{t[static_cast<std::size_t>(perm[0])], t[static_cast<std::size_t>(perm[1])],
                                       t[static_cast<std::size_t>(perm[2])]};
        image |= 1u << local.at(moved);
      }
      fp.canonical = std::min(fp.canonical, image);
    } while (std::next_permutation(perm.begin(), perm.end()));
    ++report.classes[fp.canonical];
    report.faces.push_back(fp);
  }
  return report;
}

std::pair<TwistClass, FacePatternReport> fewest_face_patterns(const BoundaryLattice& lattice, const TwistCoset& coset) {
  if (coset.dimension() > 20) throw InputError("coset too large to search exhaustively");
  std::optional<std::pair<TwistClass, FacePatternReport>> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << coset.dimension()); ++mask) {
    auto L = coset.member(mask);
    auto rep = face_patterns(lattice, L);
    if (!best || rep.distinct() < best->second.distinct()) best.emplace(std::move(L), std::move(rep));
  }
  return *best;
}

}  // namespace twistcy
