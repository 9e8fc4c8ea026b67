#include "twistcy/report.hpp"

#include <algorithm>
#include <sstream>

namespace twistcy {

void Check::record(bool ok, const std::string& witness) {
  ++cases;
  if (ok) return;
  ++failures;
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(witness);
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

Check& VerificationReport::add(std::string name) {
  checks.push_back(Check{std::move(name), 0, 0, {}});
  return checks.back();
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["title"] = title;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed()},
                           {"cases", c.cases},
                           {"failures", c.failures},
                           {"witnesses", c.witnesses}});
  }
  j["facts"] = facts;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << title << "\n";
  for (const auto& c : checks) {
    os << "  [" << (c.passed() ? "PASS" : "FAIL") << "] " << c.name << "  (" << (c.cases - c.failures) << "/"
       << c.cases << ")\n";
    for (const auto& w : c.witnesses) os << "         witness: " << w << "\n";
  }
  for (const auto& [k, v] : facts) os << "  " << k << ": " << v << "\n";
  os << "  overall: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace twistcy
