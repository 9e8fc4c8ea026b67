#pragma once

// Mod-2 Betti numbers of real Calabi-Yau loci from the Leray dimensions of
// the torus fibration and the rank of the connecting map.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace twistcy {

enum class BettiKind { Untwisted, Twisted, K3Twisted };
std::string to_string(BettiKind k);
/// Accepts "untwisted", "twisted", "k3-twisted". Throws InputError.
BettiKind parse_betti_kind(const std::string& s);

/// Leray dimensions, equal to Hodge numbers when the integral cohomology
/// has no 2-torsion. For the K3 calculation only h11 = dim H^1(B, R^1 f_* Z2)
/// is used.
struct HodgeInput {
  std::string preset = "custom";
  std::int64_t h11 = 0;
  std::int64_t h12 = 0;

  static HodgeInput quintic() { return {"quintic", 1, 101}; }
  static HodgeInput mirror_quintic() { return {"mirror-quintic", 101, 1}; }
  static HodgeInput k3() { return {"k3", 20, 0}; }
  /// Throws InputError for unknown names.
  static HodgeInput from_preset(const std::string& name);
};

struct TraceStep {
  std::string step;
  std::int64_t value = 0;
  std::string citation;
};

/// "M", "M-1", "M-2" or "other", from the deficit sum b(X) - sum b.
std::string classify_deficit(std::int64_t deficit);

struct BettiReport {
  BettiKind kind = BettiKind::Untwisted;
  HodgeInput input;
  std::int64_t rank = 0;
  std::int64_t components = 0;
  std::vector<std::int64_t> b;  // b_0..b_3, or b_0..b_2 for a surface
  std::optional<std::int64_t> genus;
  std::int64_t total = 0;
  std::int64_t total_complex = 0;
  std::string classification;
  std::vector<TraceStep> trace;
  std::vector<std::string> open_flags;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Untwisted: two components, b_1 = h11 + h12 - rank.
/// Twisted: one component, b_1 = h11 + (h12 - 1) - rank.
/// K3 twisted: one component, b = (1, h11 - 2, 1).
/// Throws InputError when rank exceeds the dimension of the source of the
/// connecting map or a dimension is negative.
BettiReport betti_report(BettiKind kind, const HodgeInput& h, std::int64_t rank);

/// b_1 reported in the literature for the twisted real mirror quintic.
inline constexpr std::int64_t kPublishedMirrorQuinticTwistedB1 = 100;

}  // namespace twistcy
