#include "twistcy/cli.hpp"

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twistcy/betti.hpp"
#include "twistcy/errors.hpp"
#include "twistcy/face_svg.hpp"
#include "twistcy/finite_models.hpp"
#include "twistcy/gf2.hpp"
#include "twistcy/reproduce.hpp"
#include "twistcy/serialization.hpp"
#include "twistcy/twist.hpp"

namespace twistcy {

namespace {

struct RunConfig {
  std::string triangulation = "default";
  std::string out;
  bool json = false;
  std::uint64_t seed = 20250101;
  bool integer = false;
  bool fewest_patterns = false;
  std::string twist_file;
  std::string svg_dir;
  std::string kind = "untwisted";
  std::string preset;
  std::int64_t rank = 0;
  std::optional<std::int64_t> h11;
  std::optional<std::int64_t> h12;
};

class Session {
 public:
  Session(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  int lattice() {
    const BoundaryLattice lat;
    const auto tri = make_triangulation(lat, variant());
    auto j = lattice_to_json(lat, tri);
    j["triangulation"] = cfg_.triangulation;
    j["seed"] = cfg_.seed;
    deliver(j, std::to_string(lat.size()) + " points, " + std::to_string(tri.cells().size()) + " cells");
    return 0;
  }

  int table() {
    const auto p = build_pipeline(variant(), cfg_.integer);
    auto j = table_to_json(p.table, cfg_.integer);
    j["seed"] = cfg_.seed;
    deliver(j, std::to_string(j["triples"].size()) + " nonzero triples over " + std::to_string(p.table.size()) +
                   " divisors (fan " + p.fan.fingerprint() + ")");
    return 0;
  }

  int verify_triples() {
    const auto p = build_pipeline(variant());
    auto rep = verify_triple_rules(p.table, p.lattice, p.triangulation);
    rep.facts["seed"] = std::to_string(cfg_.seed);
    deliver_report(rep.to_json(), rep.to_text());
    return rep.passed() ? 0 : 1;
  }

  int beta_rank() {
    const auto p = build_pipeline(variant());
    const auto pairings = build_pairings(p.table);
    nlohmann::json j{{"rank_untwisted", gf2::rank(pairings.squaring)}, {"divisors", p.table.size()},
                     {"seed", cfg_.seed}};
    std::string text = "rank of the squaring pairing: " + std::to_string(gf2::rank(pairings.squaring));
    if (!cfg_.twist_file.empty()) {
      const auto L = load_twist(p.table);
      const auto r = twisted_rank(pairings, L);
      j["rank_twisted"] = r;
      text += "\nrank of the twisted pairing: " + std::to_string(r);
    }
    deliver_report(j, text + "\n");
    return 0;
  }

  int find_twist() {
    const auto p = build_pipeline(variant());
    const auto pairings = build_pairings(p.table);
    const auto coset = solve_m2_twists(pairings);
    TwistClass L = coset.particular;
    if (cfg_.fewest_patterns) L = fewest_face_patterns(p.lattice, coset).first;
    const bool verified = twisted_rank(pairings, L) == 0 && nonzero_witness(pairings, L).has_value() &&
                          local_validate(p.table, p.lattice, p.triangulation, L).all_passed();
    TwistDocument doc{L.support(p.table.basis()), coset.dimension(), gf2::rank(pairings.squaring), verified,
                      cfg_.seed};
    auto j = twist_to_json(doc);
    j["triangulation"] = cfg_.triangulation;
    deliver(j, "twist with " + std::to_string(doc.twist.size()) + " divisors, coset dimension " +
                   std::to_string(coset.dimension()) + (verified ? ", verified" : ", NOT verified"));
    return verified ? 0 : 1;
  }

  int validate_twist() {
    const auto p = build_pipeline(variant());
    const auto L = load_twist(p.table);
    const auto pairings = build_pairings(p.table);
    const auto rank = twisted_rank(pairings, L);
    const auto witness = nonzero_witness(pairings, L);
    const auto local = local_validate(p.table, p.lattice, p.triangulation, L);
    const bool ok = rank == 0 && witness && local.all_passed();

    nlohmann::json j;
    j["twisted_rank"] = rank;
    j["nonzero_class"] = witness.has_value();
    if (witness) j["witness"] = {p.table.basis()[static_cast<std::size_t>(witness->first)],
                                 p.table.basis()[static_cast<std::size_t>(witness->second)]};
    j["local"] = local.to_json();
    j["passed"] = ok;
    j["seed"] = cfg_.seed;
    std::string text = "twisted rank: " + std::to_string(rank) + "\nnonzero in cohomology: " +
                       (witness ? "yes, L.D1.D2 = 1 for (" + p.table.basis()[static_cast<std::size_t>(witness->first)] +
                                      "," + p.table.basis()[static_cast<std::size_t>(witness->second)] + ")"
                                : std::string("no")) +
                       "\n" + local.to_text() + "result: " + (ok ? "PASS" : "FAIL") + "\n";
    deliver_report(j, text);
    return ok ? 0 : 1;
  }

  int betti() {
    const auto kind = parse_betti_kind(cfg_.kind);
    HodgeInput h = HodgeInput::from_preset(
        !cfg_.preset.empty() ? cfg_.preset : (kind == BettiKind::K3Twisted ? "k3" : "quintic"));
    if (cfg_.h11 || cfg_.h12) {
      h.preset = "custom";
      if (cfg_.h11) h.h11 = *cfg_.h11;
      if (cfg_.h12) h.h12 = *cfg_.h12;
    }
    const auto rep = betti_report(kind, h, cfg_.rank);
    auto j = rep.to_json();
    j["seed"] = cfg_.seed;
    deliver_report(j, rep.to_text());
    return 0;
  }

  int faces() {
    const auto p = build_pipeline(variant());
    const auto L = cfg_.twist_file.empty() ? TwistClass::zero(p.table.size()) : load_twist(p.table);
    const auto rep = face_patterns(p.lattice, L);
    if (!cfg_.svg_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(cfg_.svg_dir, ec);
      if (ec) throw IOError("cannot create " + cfg_.svg_dir + ": " + ec.message());
      for (auto face : BoundaryLattice::two_faces()) {
        emit_face_svg(face, p.lattice, p.triangulation, L,
                      std::filesystem::path(cfg_.svg_dir) / ("face_" + mask_string(face) + ".svg"));
      }
    }
    auto j = rep.to_json();
    j["seed"] = cfg_.seed;
    std::string text = "distinct face pattern classes: " + std::to_string(rep.distinct()) + "\n";
    for (const auto& f : rep.faces) {
      text += "  face " + mask_string(f.face) + ": raw " + std::to_string(f.raw) + ", class " +
              std::to_string(f.canonical) + "\n";
    }
    deliver_report(j, text);
    return 0;
  }

  int check_core() {
    std::vector<VerificationReport> reps{finite::beta_identity_check(), finite::check_l2_structure(),
                                         finite::filtration_check(2), finite::filtration_check(3),
                                         finite::filtration_check(4), finite::delta_w_characterization(3),
                                         finite::beta_equivariance_check(cfg_.seed, 8)};
    bool ok = true;
    nlohmann::json j;
    j["seed"] = cfg_.seed;
    j["reports"] = nlohmann::json::array();
    std::string text;
    for (const auto& r : reps) {
      ok = ok && r.passed();
      j["reports"].push_back(r.to_json());
      text += r.to_text();
    }
    j["passed"] = ok;
    deliver_report(j, text);
    return ok ? 0 : 1;
  }

  int reproduce_all() {
    const auto rep = reproduce(cfg_.seed, variant());
    deliver_report(rep.to_json(), rep.to_text());
    return rep.passed() ? 0 : 1;
  }

 private:
  TriangulationVariant variant() const {
    if (cfg_.triangulation == "default") return TriangulationVariant::Standard;
    if (cfg_.triangulation == "alternate") return TriangulationVariant::Alternate;
    throw InputError("unknown triangulation '" + cfg_.triangulation + "'");
  }

  TwistClass load_twist(const TripleTable& table) const {
    if (cfg_.twist_file.empty()) throw InputError("no twist file given");
    const auto doc = twist_from_json(read_json_file(cfg_.twist_file));
    try {
      return TwistClass::from_ids(table.basis(), doc.twist);
    } catch (const IndexError& e) {
      throw InputError(e.what());
    }
  }

  // Documents: JSON goes to --out when given, otherwise to stdout.
  void deliver(const nlohmann::json& j, const std::string& summary) {
    if (!cfg_.out.empty()) {
      write_text_file(cfg_.out, j.dump(2) + "\n");
      out_ << summary << " -> " << cfg_.out << "\n";
    } else {
      out_ << j.dump(2) << "\n";
    }
  }

  // Reports: text or JSON on stdout, JSON copy to --out when given.
  void deliver_report(const nlohmann::json& j, const std::string& text) {
    if (!cfg_.out.empty()) write_text_file(cfg_.out, j.dump(2) + "\n");
    if (cfg_.json) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "seed: " << cfg_.seed << "\n" << text;
    }
  }

  const RunConfig& cfg_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Mod-2 intersection theory of the mirror quintic and twisted real Calabi-Yau topology", "twistcy"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--triangulation", cfg.triangulation, "Facet-interior triangulation")
      ->check(CLI::IsMember({"default", "alternate"}));
  app.add_option("--out", cfg.out, "Write the JSON document to this path");
  app.add_flag("--json", cfg.json, "Print JSON instead of text");
  app.add_option("--seed", cfg.seed, "Seed for sampled property checks");

  auto* lattice = app.add_subcommand("lattice", "Boundary lattice points and triangulation as JSON");
  auto* table = app.add_subcommand("table", "Mod-2 triple intersection table as JSON");
  table->add_flag("--integer", cfg.integer, "Include integer intersection numbers");
  auto* verify = app.add_subcommand("verify-gross", "Check the mod-2 triple intersection rules");
  auto* beta = app.add_subcommand("beta-rank", "Rank of the squaring pairing");
  beta->add_option("--twist", cfg.twist_file, "Also report the twisted rank for this twist file");
  auto* find = app.add_subcommand("find-twist", "Solve D^2 + D L = 0 for all D");
  find->add_flag("--fewest-patterns", cfg.fewest_patterns, "Pick the coset member with fewest face patterns");
  auto* validate = app.add_subcommand("validate-twist", "Check a twist file globally and locally");
  validate->add_option("file", cfg.twist_file, "Twist JSON")->required();
  auto* betti = app.add_subcommand("betti", "Betti numbers of the real locus");
  betti->add_option("--kind", cfg.kind, "untwisted, twisted or k3-twisted");
  betti->add_option("--preset", cfg.preset, "quintic, mirror-quintic or k3");
  betti->add_option("--rank", cfg.rank, "Rank of the connecting map");
  betti->add_option("--h11", cfg.h11, "Override h11");
  betti->add_option("--h12", cfg.h12, "Override h12");
  auto* faces = app.add_subcommand("faces", "Restriction of a twist to the 2-faces");
  faces->add_option("--twist", cfg.twist_file, "Twist JSON");
  faces->add_option("--svg", cfg.svg_dir, "Write one SVG per 2-face into this directory");
  auto* core = app.add_subcommand("check-core", "Exhaustive checks on finite Z2 spaces");
  auto* repro = app.add_subcommand("reproduce", "Evaluate every acceptance criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  Session s(cfg, out);
  try {
    if (lattice->parsed()) return s.lattice();
    if (table->parsed()) return s.table();
    if (verify->parsed()) return s.verify_triples();
    if (beta->parsed()) return s.beta_rank();
    if (find->parsed()) return s.find_twist();
    if (validate->parsed()) return s.validate_twist();
    if (betti->parsed()) return s.betti();
    if (faces->parsed()) return s.faces();
    if (core->parsed()) return s.check_core();
    if (repro->parsed()) return s.reproduce_all();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const IOError& e) {
    err << "io error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace twistcy
