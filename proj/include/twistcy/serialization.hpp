#pragma once

// JSON documents exchanged by the command-line tool.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistcy/intersection.hpp"
#include "twistcy/lattice.hpp"
#include "twistcy/twist.hpp"

namespace twistcy {

/// { "points": [{"id","bary","ambient","carrier"}], "cells": [[id x4]] }
nlohmann::json lattice_to_json(const BoundaryLattice& lattice, const Triangulation& tri);

/// { "basis", "triples": [[i,j,k]] with i <= j <= k and value 1,
///   "fingerprint", optionally "integer": [[i,j,k,value]] for nonzero values }
nlohmann::json table_to_json(const TripleTable& table, bool include_integer);
/// Throws InputError on a malformed document.
TripleTable table_from_json(const nlohmann::json& j);

struct TwistDocument {
  std::vector<std::string> twist;
  std::optional<std::size_t> coset_dim;
  std::optional<std::size_t> rank_untwisted;
  bool verified = false;
  std::optional<std::uint64_t> seed;
};

/// { "twist": [ids], "coset_dim", "rank_untwisted", "verified", "seed" }
nlohmann::json twist_to_json(const TwistDocument& doc);
/// Throws InputError on a malformed document.
TwistDocument twist_from_json(const nlohmann::json& j);

/// Throws IOError if the file cannot be read, InputError if it is not JSON.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Throws IOError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace twistcy
