#include "twistcy/serialization.hpp"

#include <fstream>
#include <sstream>

#include "twistcy/errors.hpp"

namespace twistcy {

nlohmann::json lattice_to_json(const BoundaryLattice& lattice, const Triangulation& tri) {
  nlohmann::json j;
  j["points"] = nlohmann::json::array();
  for (const auto& p : lattice.points()) {
    j["points"].push_back({{"id", p.id}, {"bary", p.bary}, {"ambient", p.ambient}, {"carrier", p.carrier_vertices()}});
  }
  j["cells"] = nlohmann::json::array();
  for (const auto& cell : tri.cells()) {
    auto ids = nlohmann::json::array();
    for (int i : cell) ids.push_back(lattice[i].id);
    j["cells"].push_back(ids);
  }
  return j;
}

nlohmann::json table_to_json(const TripleTable& table, bool include_integer) {
  nlohmann::json j;
  j["basis"] = table.basis();
  j["fingerprint"] = table.provenance();
  j["triples"] = nlohmann::json::array();
  nlohmann::json integer = nlohmann::json::array();
  const int n = static_cast<int>(table.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      for (int c = b; c < n; ++c) {
        if (table.value(a, b, c)) j["triples"].push_back({a, b, c});
        if (include_integer) {
          const auto v = table.integer_value(a, b, c);
          if (v && *v != 0) integer.push_back({a, b, c, *v});
        }
      }
    }
  }
  if (include_integer) {
    if (!table.has_integer_values()) throw InputError("table carries no integer values");
    j["integer"] = integer;
  }
  return j;
}

TripleTable table_from_json(const nlohmann::json& j) {
  try {
    const auto basis = j.at("basis").get<std::vector<std::string>>();
    const bool with_integer = j.contains("integer");
    TripleTable table(basis, j.value("fingerprint", std::string{}), with_integer);
    const int n = static_cast<int>(basis.size());
    auto index = [n](const nlohmann::json& v) {
      const int i = v.get<int>();
      if (i < 0 || i >= n) throw InputError("triple index " + std::to_string(i) + " out of range");
      return i;
    };
    for (const auto& t : j.at("triples")) {
      if (!t.is_array() || t.size() != 3) throw InputError("each triple must have three indices");
      table.set_mod2(index(t[0]), index(t[1]), index(t[2]), 1);
    }
    if (with_integer) {
      for (const auto& t : j.at("integer")) {
        if (!t.is_array() || t.size() != 4) throw InputError("each integer entry must be [i, j, k, value]");
        const int a = index(t[0]), b = index(t[1]), c = index(t[2]);
        const auto v = t[3].get<std::int64_t>();
        if (((v % 2) != 0) != (table.value(a, b, c) == 1)) throw InputError("integer value disagrees with mod-2 value");
        table.set(a, b, c, v);
      }
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed table document: ") + e.what());
  }
}

nlohmann::json twist_to_json(const TwistDocument& doc) {
  nlohmann::json j;
  j["twist"] = doc.twist;
  if (doc.coset_dim) j["coset_dim"] = *doc.coset_dim;
  if (doc.rank_untwisted) j["rank_untwisted"] = *doc.rank_untwisted;
  j["verified"] = doc.verified;
  if (doc.seed) j["seed"] = *doc.seed;
  return j;
}

TwistDocument twist_from_json(const nlohmann::json& j) {
  try {
    TwistDocument doc;
    doc.twist = j.at("twist").get<std::vector<std::string>>();
    if (j.contains("coset_dim")) doc.coset_dim = j["coset_dim"].get<std::size_t>();
    if (j.contains("rank_untwisted")) doc.rank_untwisted = j["rank_untwisted"].get<std::size_t>();
    doc.verified = j.value("verified", false);
    if (j.contains("seed")) doc.seed = j["seed"].get<std::uint64_t>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed twist document: ") + e.what());
  }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + " is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IOError("cannot write " + path.string());
  out << text;
  if (!out) throw IOError("write failed for " + path.string());
}

}  // namespace twistcy
