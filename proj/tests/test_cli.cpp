#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "twistcy/cli.hpp"
#include "twistcy/errors.hpp"
#include "twistcy/face_svg.hpp"
#include "twistcy/serialization.hpp"

using namespace twistcy;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "twistcy");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "twistcy_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("lattice document") {
    const auto r = run({"lattice"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["points"].size() == 125);
    CHECK(j["cells"].size() == 625);
    CHECK(j["points"][0]["id"] == "V0");
    CHECK(j["points"][0]["ambient"] == nlohmann::json::array({-1, -1, -1, -1}));
    CHECK(j.contains("seed"));
  }

  TEST_CASE("table round trip") {
    const auto path = scratch("table.json");
    REQUIRE(run({"table", "--integer", "--out", path.string()}).code == 0);
    const auto loaded = table_from_json(read_json_file(path));
    const auto& original = standard_pipeline().table;
    CHECK(loaded.same_mod2(original));
    CHECK(loaded.provenance() == original.provenance());
    CHECK(loaded.has_integer_values());
    for (int a = 0; a < 105; a += 11)
      for (int b = 0; b < 105; b += 5)
        for (int c = 0; c < 105; c += 3) CHECK(loaded.integer_value(a, b, c) == original.integer_value(a, b, c));
    const auto j = table_to_json(original, false);
    CHECK(j["basis"].size() == 105);
    for (const auto& t : j["triples"]) CHECK((t[0] <= t[1] && t[1] <= t[2]));
  }

  TEST_CASE("find, validate and draw a twist") {
    const auto path = scratch("twist.json");
    const auto found = run({"find-twist", "--out", path.string(), "--seed", "7"});
    REQUIRE(found.code == 0);
    const auto doc = twist_from_json(read_json_file(path));
    CHECK(doc.verified);
    CHECK(doc.rank_untwisted == 73);
    CHECK(doc.seed == 7);
    CHECK(run({"validate-twist", path.string()}).code == 0);
    CHECK(run({"beta-rank", "--twist", path.string(), "--json"}).out.find("\"rank_twisted\": 0") != std::string::npos);

    const auto dir = scratch("svg");
    fs::remove_all(dir);
    const auto faces = run({"faces", "--twist", path.string(), "--svg", dir.string()});
    CHECK(faces.code == 0);
    CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 10);
    const auto first = slurp(dir / "face_012.svg");
    REQUIRE(run({"faces", "--twist", path.string(), "--svg", dir.string()}).code == 0);
    CHECK(slurp(dir / "face_012.svg") == first);
  }

  TEST_CASE("validate-twist rejects bad input") {
    const auto zero = scratch("zero.json");
    write_text_file(zero, R"({"twist": []})");
    CHECK(run({"validate-twist", zero.string()}).code == 1);
    const auto unknown = scratch("unknown.json");
    write_text_file(unknown, R"({"twist": ["V9"]})");
    CHECK(run({"validate-twist", unknown.string()}).code == 2);
    const auto garbage = scratch("garbage.json");
    write_text_file(garbage, "not json");
    CHECK(run({"validate-twist", garbage.string()}).code == 2);
    CHECK(run({"validate-twist", scratch("missing.json").string()}).code == 2);
  }

  TEST_CASE("betti subcommand") {
    const auto mirror = run({"betti", "--kind", "twisted", "--preset", "mirror-quintic", "--rank", "0"});
    CHECK(mirror.code == 0);
    CHECK(mirror.out.find("OPEN") != std::string::npos);
    const auto k3 = run({"betti", "--kind", "k3-twisted", "--json"});
    CHECK(k3.code == 0);
    CHECK(nlohmann::json::parse(k3.out)["genus"] == 9);
    const auto custom = run({"betti", "--kind", "untwisted", "--h11", "2", "--h12", "10", "--rank", "3", "--json"});
    CHECK(nlohmann::json::parse(custom.out)["b"] == nlohmann::json::array({2, 9, 9, 2}));
    CHECK(run({"betti", "--kind", "twisted", "--rank", "101"}).code == 2);
    CHECK(run({"betti", "--kind", "sideways"}).code == 2);
    CHECK(run({"betti", "--preset", "quartic"}).code == 2);
  }

  TEST_CASE("flags") {
    CHECK(run({}).code == 2);
    CHECK(run({"lattice", "--triangulation", "diagonal"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const auto alt = run({"verify-gross", "--triangulation", "alternate", "--json"});
    CHECK(alt.code == 0);
    CHECK(nlohmann::json::parse(alt.out)["passed"] == true);
  }

  TEST_CASE("check-core") {
    const auto r = run({"check-core", "--json", "--seed", "3"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["seed"] == 3);
  }

  TEST_CASE("face svg") {
    const auto& p = standard_pipeline();
    const auto face = parse_face("012");
    const auto empty = face_svg(face, p.lattice, p.triangulation, TwistClass::zero(105));
    CHECK(empty.find("class=\"twist\"") == std::string::npos);
    CHECK(empty == face_svg(face, p.lattice, p.triangulation, TwistClass::zero(105)));
    std::size_t polygons = 0, circles = 0;
    for (std::size_t pos = 0; (pos = empty.find("<polygon", pos)) != std::string::npos; ++pos) ++polygons;
    for (std::size_t pos = 0; (pos = empty.find("<circle", pos)) != std::string::npos; ++pos) ++circles;
    CHECK(polygons == 25);
    CHECK(circles == 21);

    const auto& L = standard_coset().particular;
    const auto drawn = face_svg(face, p.lattice, p.triangulation, L);
    std::size_t filled = 0;
    for (std::size_t pos = 0; (pos = drawn.find("class=\"twist\"", pos)) != std::string::npos; ++pos) ++filled;
    std::size_t expected = 0;
    for (int i : face_points(p.lattice, face)) expected += L.eps.get(static_cast<std::size_t>(i));
    CHECK(filled == expected);

    CHECK_THROWS_AS(parse_face("013x"), IndexError);
    CHECK_THROWS_AS(parse_face("01"), IndexError);
    CHECK_THROWS_AS(emit_face_svg(face, p.lattice, p.triangulation, L, "/nonexistent/dir/f.svg"), IOError);
  }
}
