#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace twistcy {

/// One named check: how many cases were examined, how many failed, and a
/// bounded sample of failing witnesses.
struct Check {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& witness);
};

struct VerificationReport {
  std::string title;
  std::deque<Check> checks;
  /// Informational key/value facts that are not pass/fail.
  std::map<std::string, std::string> facts;

  bool passed() const;
  Check& add(std::string name);
  const Check* find(const std::string& name) const;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

inline constexpr std::size_t kMaxWitnesses = 8;

}  // namespace twistcy
