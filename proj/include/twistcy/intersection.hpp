#pragma once

// Intersection numbers on the smooth toric 4-fold of a SimplicialFan, and
// their restriction to the anticanonical hypersurface (the mirror quintic).

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistcy/lattice.hpp"
#include "twistcy/report.hpp"

namespace twistcy {

/// Evaluates products D_a D_b D_c D_d of toric divisors by repeatedly
/// trading a repeated divisor for a linear combination of rays outside a
/// cone containing the support. Results are memoized, so a calculator is
/// not safe to share between threads.
class IntersectionCalculator {
 public:
  explicit IntersectionCalculator(const SimplicialFan& fan) : fan_(&fan) {}

  std::int64_t quad_product(std::array<int, 4> rays) const;

  /// Unmemoized variant that builds each dual vector from the
  /// (choice mod k)-th of the k maximal cones containing the support.
  /// Any choice must give the same answer.
  std::int64_t quad_product_with_choice(std::array<int, 4> rays, std::size_t choice) const;

  /// Sum over all rays w of quad_product(a, b, c, w): the product with the
  /// anticanonical class.
  std::int64_t anticanonical_triple(int a, int b, int c) const;

  std::size_t memo_size() const { return memo_.size(); }

 private:
  std::int64_t evaluate(std::array<int, 4> rays, std::optional<std::size_t> choice) const;

  const SimplicialFan* fan_;
  mutable std::unordered_map<std::uint32_t, std::int64_t> memo_;
};

/// Symmetric triple intersection numbers over the divisor basis S.
class TripleTable {
 public:
  TripleTable(std::vector<std::string> basis, std::string provenance, bool with_integer);

  std::size_t size() const { return n_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::string& provenance() const { return provenance_; }

  int value(int a, int b, int c) const { return mod2_[index(a, b, c)]; }
  bool has_integer_values() const { return !integer_.empty(); }
  std::optional<std::int64_t> integer_value(int a, int b, int c) const;

  /// Writes all six permutations.
  void set(int a, int b, int c, std::int64_t value);
  void set_mod2(int a, int b, int c, int value);

  /// Same basis and same mod-2 values.
  bool same_mod2(const TripleTable& other) const;

 private:
  std::size_t index(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)) * n_ + static_cast<std::size_t>(c);
  }

  std::size_t n_;
  std::vector<std::string> basis_;
  std::string provenance_;
  std::vector<std::uint8_t> mod2_;
  std::vector<std::int64_t> integer_;
};

/// Builds the table over the first kBasisSize lattice points. Every triple
/// whose support spans a cone is evaluated, so vanishing off common 2-faces
/// is checked rather than assumed. Throws FacetDivisorNonzeroError if a
/// triple involving a facet-interior divisor is nonzero.
TripleTable build_triple_table(const BoundaryLattice& lattice, const SimplicialFan& fan, bool keep_integer = true);

/// The numbering convention along edges that matched the spot checks.
enum class EdgeOrientation { Forward, Reverse, Both, None };
std::string to_string(EdgeOrientation o);

/// Checks the mod-2 cube values, |S_D| counts, 2-face triple rules,
/// off-face vanishing and edge-numbering spot checks. Facts record the
/// matching edge orientation and the number of same-face pairs where
/// T(a,a,b) != T(b,b,a).
VerificationReport verify_triple_rules(const TripleTable& table, const BoundaryLattice& lattice, const Triangulation& tri);

/// S_D = { D' : T(D, D, D') = 1 }.
std::vector<int> squaring_support(const TripleTable& table, int d);

/// True if the three points lie on a common closed 2-face of P.
bool share_two_face(const BoundaryLattice& lattice, std::initializer_list<int> pts);

}  // namespace twistcy
