#pragma once

// Functions on small Z2 affine spaces: affine decomposition, the quotient of
// all maps by affine maps, the degree filtration, and the trilinear identity
// behind the twisted squaring map.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "twistcy/gf2.hpp"
#include "twistcy/report.hpp"

namespace twistcy::finite {

/// A point of Z2^n is an integer whose bit i is coordinate i.
using Point = std::uint32_t;

/// The affine space basepoint + Z2^n, n in 1..4.
struct Z2Space {
  int n = 3;
  Point basepoint = 0;

  std::size_t size() const { return std::size_t{1} << n; }
  std::vector<Point> points() const;
};

/// An element of Maps(Z2^n, Z2), indexed by point.
struct FnTable {
  int n = 3;
  gf2::BitVector values;

  static FnTable zero(int n);
  static FnTable constant(int n, bool c);
  /// Indicator function of a set of points.
  static FnTable delta(int n, const std::vector<Point>& set);
  /// delta of the line {p, p + v}; the empty set when v = 0.
  static FnTable line(int n, Point p, Point v);
  /// The monomial prod_{i in S} (x_i + shift_i).
  static FnTable monomial(int n, Point subset, Point shift = 0);

  bool operator()(Point x) const { return values.get(x); }
  FnTable& operator+=(const FnTable& o);
  friend FnTable operator+(FnTable a, const FnTable& b) { return a += b; }
  friend bool operator==(const FnTable&, const FnTable&) = default;
};

/// Coefficients of the polynomial representation (bit S = coefficient of
/// prod_{i in S} x_i), by the Moebius transform.
gf2::BitVector algebraic_normal_form(const FnTable& f);
int degree(const FnTable& f);  // -1 for the zero function

struct AffineParts {
  Point linear = 0;  // covector: f(x) = <linear, x> + constant
  bool constant = false;
};

std::optional<AffineParts> affine_decompose(const FnTable& f);

/// Exhaustive over Maps(Z2^n, Z2): f is affine iff its support is empty,
/// everything, or an affine hyperplane (so f = delta_W or 1 + delta_W).
VerificationReport delta_w_characterization(int n);

/// Maps(Z2^n, Z2) modulo affine functions, with canonical coset
/// representatives.
class AffineQuotient {
 public:
  explicit AffineQuotient(int n);
  int n() const { return n_; }
  std::size_t dimension() const;
  /// Canonical representative of [f]; zero iff f is affine.
  gf2::BitVector class_of(const FnTable& f) const { return affine_.reduce(f.values); }

 private:
  int n_;
  gf2::Subspace affine_;
};

/// Checks on L^2 = Maps/Aff for n = 3 (line classes well defined, linear,
/// injective, cokernel generated by a point, equality iff parallel) and the
/// n = 2 quotient Maps/Aff = Z2.
VerificationReport check_l2_structure();

/// dim K^0, ..., dim K^n for n in 1..4.
std::vector<std::size_t> filtration_dimensions(int n, Point basepoint = 0);

/// K^p = maps of degree <= p: cumulative and quotient dimensions, K^n is
/// everything, and the filtration does not depend on the basepoint.
/// Throws InputError unless n is 2, 3 or 4.
VerificationReport filtration_check(int n);

/// Per-configuration case of a tuple (e1, e2, f1, f2).
enum class LineCase { Dependent, Concurrent, ThreePoint, Skew };
const char* to_string(LineCase c);
LineCase classify_lines(Point e1, Point e2, Point f1, Point f2);

/// alpha = delta_0 + delta_{e1+e2} + delta_{f1} + delta_{f1+e1} + delta_{f2} + delta_{f2+e2} on Z2^3.
FnTable beta_alpha(Point e1, Point e2, Point f1, Point f2);
/// Two-forms on Z2^3 as 3 bits: bit 0 = x1^x2, bit 1 = x1^x3, bit 2 = x2^x3.
std::uint32_t wedge(Point u, Point w);
/// Contraction of the volume form x1^x2^x3 with a covector.
std::uint32_t contract_volume(Point covector);
/// e1^e2 + e1^f1 + e2^f2.
std::uint32_t beta_two_form(Point e1, Point e2, Point f1, Point f2);

/// For all 4096 tuples: alpha is affine and the contraction of the volume
/// form with its linear part equals e1^e2 + e1^f1 + e2^f2. Facts hold the
/// per-case tallies.
VerificationReport beta_identity_check();

/// Applies `samples` seeded random elements of GL(3, Z2) to every tuple and
/// checks that both sides of the identity transform consistently.
VerificationReport beta_equivariance_check(std::uint64_t seed, int samples);

/// A 3x3 matrix over Z2 as three column images.
struct Linear3 {
  std::array<Point, 3> columns{};
  Point apply(Point x) const;
  bool invertible() const;
  Linear3 inverse() const;
  /// Induced map on two-forms.
  std::uint32_t apply_two_form(std::uint32_t w) const;
};

}  // namespace twistcy::finite
