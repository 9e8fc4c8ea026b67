#pragma once

// End-to-end reproduction run: builds the whole pipeline and evaluates each
// acceptance criterion with its published and computed values.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistcy/intersection.hpp"
#include "twistcy/lattice.hpp"
#include "twistcy/twist.hpp"

namespace twistcy {

/// Lattice, triangulation, fan and mod-2 table for one triangulation variant.
struct Pipeline {
  BoundaryLattice lattice;
  Triangulation triangulation;
  SimplicialFan fan;
  TripleTable table;
};

/// Throws the construction errors of the underlying modules.
Pipeline build_pipeline(TriangulationVariant variant, bool keep_integer = false);

struct CriterionResult {
  int number = 0;
  std::string name;
  std::string published;
  std::string computed;
  bool passed = false;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

struct ReproduceReport {
  std::uint64_t seed = 0;
  std::string triangulation;
  std::vector<CriterionResult> criteria;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Random twists for the local/global equivalence test: all coset members
/// first (up to half of `count`), then single-divisor perturbations of coset
/// members and uniformly random subsets, mixed by the seed.
std::vector<TwistClass> sample_twists(const TwistCoset& coset, std::size_t n, std::size_t count, std::uint64_t seed);

/// Checks rank, kernel and affine solutions of random matrices by
/// certificates: kernel vectors multiply to zero and are independent,
/// rank(m) = rank(m^T), solutions multiply back, and inconsistent systems
/// come with a left-kernel vector y with y^T m = 0 and y . b = 1.
/// Returns failure descriptions.
std::vector<std::string> gf2_certificate_run(std::uint64_t seed, int instances, std::size_t max_dim);

ReproduceReport reproduce(std::uint64_t seed, TriangulationVariant variant = TriangulationVariant::Standard);

}  // namespace twistcy
