#pragma once

// Twisted squaring D -> D^2 + D L on the mirror quintic at the level of the
// 105 divisor generators: pairing matrices, the (M-2) twist system, and
// local checks of a twist against the 2-face triangulation.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "twistcy/gf2.hpp"
#include "twistcy/intersection.hpp"
#include "twistcy/lattice.hpp"

namespace twistcy {

/// A class L = sum_D eps_D D in H^2 with Z/2 coefficients, as a subset of S.
struct TwistClass {
  gf2::BitVector eps;

  static TwistClass zero(std::size_t n) { return {gf2::BitVector(n)}; }
  /// Throws IndexError for ids outside the basis.
  static TwistClass from_ids(const std::vector<std::string>& basis, const std::vector<std::string>& ids);
  std::vector<std::string> support(const std::vector<std::string>& basis) const;

  friend bool operator==(const TwistClass&, const TwistClass&) = default;
};

struct PairingMatrices {
  std::size_t n = 0;
  /// Q[d1][d2] = T(d1, d1, d2).
  gf2::BitMatrix squaring;
  /// Row d1 * n + d2, column d: T(d, d1, d2).
  gf2::BitMatrix action;
};

PairingMatrices build_pairings(const TripleTable& table);

/// Q_L[d1][d2] = Q[d1][d2] + sum_d eps_d T(d, d1, d2).
gf2::BitMatrix twisted_pairing(const PairingMatrices& p, const TwistClass& L);
std::size_t twisted_rank(const PairingMatrices& p, const TwistClass& L);

/// A pair (d1, d2) with L D1 D2 = 1, certifying L != 0 in cohomology.
std::optional<std::pair<int, int>> nonzero_witness(const PairingMatrices& p, const TwistClass& L);

/// The affine space of solutions of D^2 + D L = 0 for all D.
struct TwistCoset {
  TwistClass particular;
  std::vector<gf2::BitVector> kernel_basis;
  std::size_t action_rank = 0;

  std::size_t dimension() const { return kernel_basis.size(); }
  /// particular + sum of the kernel vectors selected by the bits of `mask`.
  TwistClass member(std::uint64_t mask) const;
};

/// Solves action * eps = vec(squaring). Every representative is checked
/// to have twisted rank 0 and a nonzero-class witness before returning.
/// Throws NoSolutionError with diagnostics otherwise.
TwistCoset solve_m2_twists(const PairingMatrices& p);

// ---------------------------------------------------------------- local checks

/// Local configuration of an ordered pair (D1, D2) of basis divisors.
enum class PairCase {
  OffFace,             // no common 2-face: both sides vanish
  FaceAdjacent,        // same 2-face, not co-edge, joined by a subdivision edge
  FaceApart,           // same 2-face, not co-edge, distinct, not joined
  FaceInteriorSquare,  // D1 = D2 in the interior of a 2-face
  EdgeSquare,          // D1 = D2 on an edge of P (vertices included)
  EdgeLinked,          // distinct, same edge of P, T(D1,D1,D2) = 1
  EdgeUnlinked,        // distinct, same edge of P, T(D1,D1,D2) = 0
};

std::string to_string(PairCase c);
const std::vector<PairCase>& all_pair_cases();

struct CaseTally {
  std::size_t pairs = 0;
  std::size_t passed = 0;
  std::vector<std::string> witnesses;
};

struct CaseReport {
  std::map<PairCase, CaseTally> tallies;
  /// Pairs where the local formulas disagree with the table itself.
  std::size_t formula_mismatches = 0;
  std::vector<std::string> mismatch_witnesses;

  bool all_passed() const;
  std::size_t failures() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Classifies every ordered pair of basis divisors into exactly one
/// PairCase and checks the parity condition that D1^2 D2 = L D1 D2 imposes
/// there, using only the triangulation and the sets S_D. Throws
/// ClassificationError if a pair matches zero or several cases.
CaseReport local_validate(const TripleTable& table, const BoundaryLattice& lattice, const Triangulation& tri,
                          const TwistClass& L);

// ---------------------------------------------------------------- face patterns

struct FacePattern {
  VertexMask face = 0;
  /// Bit i set iff the i-th point of the closed face (lexicographically
  /// decreasing barycentric order) lies in L.
  std::uint32_t raw = 0;
  /// Minimum of `raw` over the six symmetries of the triangle.
  std::uint32_t canonical = 0;
};

struct FacePatternReport {
  std::vector<FacePattern> faces;
  std::map<std::uint32_t, std::size_t> classes;  // canonical -> multiplicity

  std::size_t distinct() const { return classes.size(); }
  nlohmann::json to_json() const;
};

/// The 21 points of a closed 2-face in local order.
std::vector<int> face_points(const BoundaryLattice& lattice, VertexMask face);

FacePatternReport face_patterns(const BoundaryLattice& lattice, const TwistClass& L);

/// Coset member with the fewest distinct face pattern classes (first in
/// mask order on ties).
std::pair<TwistClass, FacePatternReport> fewest_face_patterns(const BoundaryLattice& lattice, const TwistCoset& coset);

}  // namespace twistcy
