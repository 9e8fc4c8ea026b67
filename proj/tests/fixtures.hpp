#pragma once

#include "twistcy/reproduce.hpp"
#include "twistcy/twist.hpp"

inline const twistcy::Pipeline& standard_pipeline() {
  static const auto p = twistcy::build_pipeline(twistcy::TriangulationVariant::Standard, true);
  return p;
}

inline const twistcy::PairingMatrices& standard_pairings() {
  static const auto p = twistcy::build_pairings(standard_pipeline().table);
  return p;
}

inline const twistcy::TwistCoset& standard_coset() {
  static const auto c = twistcy::solve_m2_twists(standard_pairings());
  return c;
}
