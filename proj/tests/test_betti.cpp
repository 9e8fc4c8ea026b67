#include <doctest.h>

#include <algorithm>

#include "twistcy/betti.hpp"
#include "twistcy/errors.hpp"

using namespace twistcy;

using B = std::vector<std::int64_t>;

TEST_SUITE("betti") {
  TEST_CASE("untwisted quintic") {
    const auto r = betti_report(BettiKind::Untwisted, HodgeInput::quintic(), 73);
    CHECK(r.components == 2);
    CHECK(r.b == B{2, 29, 29, 2});
    CHECK(r.total_complex == 208);
    CHECK_FALSE(r.trace.empty());
  }

  TEST_CASE("twisted quintic is (M-2)") {
    const auto r = betti_report(BettiKind::Twisted, HodgeInput::quintic(), 0);
    CHECK(r.components == 1);
    CHECK(r.b == B{1, 101, 101, 1});
    CHECK(r.classification == "M-2");
    CHECK(r.total == 204);
    CHECK(r.open_flags.empty());
  }

  TEST_CASE("twisted mirror quintic carries the open flag") {
    const auto r = betti_report(BettiKind::Twisted, HodgeInput::mirror_quintic(), 0);
    CHECK(r.b[1] == 101);
    REQUIRE(r.open_flags.size() == 1);
    CHECK(r.open_flags[0].find("101") != std::string::npos);
    CHECK(r.open_flags[0].find("100") != std::string::npos);
    const auto j = r.to_json();
    CHECK(j["open_flags"].size() == 1);
    CHECK(r.to_text().find("OPEN") != std::string::npos);
  }

  TEST_CASE("twisted K3") {
    const auto r = betti_report(BettiKind::K3Twisted, HodgeInput::k3(), 0);
    CHECK(r.components == 1);
    CHECK(r.b == B{1, 18, 1});
    CHECK(r.genus == 9);
    CHECK(r.total_complex == 24);
    CHECK(r.classification == "M-2");
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(betti_report(BettiKind::Untwisted, HodgeInput::quintic(), 102), InputError);
    CHECK_THROWS_AS(betti_report(BettiKind::Twisted, HodgeInput::quintic(), 101), InputError);
    CHECK_THROWS_AS(betti_report(BettiKind::Twisted, HodgeInput{"custom", 3, 0}, 0), InputError);
    CHECK_THROWS_AS(betti_report(BettiKind::Untwisted, HodgeInput{"custom", -1, 3}, 0), InputError);
    CHECK_THROWS_AS(betti_report(BettiKind::K3Twisted, HodgeInput::k3(), 3), InputError);
    CHECK_THROWS_AS(HodgeInput::from_preset("quartic"), InputError);
    CHECK_THROWS_AS(parse_betti_kind("sideways"), InputError);
    CHECK_NOTHROW(betti_report(BettiKind::Twisted, HodgeInput::quintic(), 100));
  }

  TEST_CASE("bounds over every admissible rank") {
    for (const auto& h : {HodgeInput::quintic(), HodgeInput::mirror_quintic(), HodgeInput{"custom", 7, 12}}) {
      for (std::int64_t rank = 0; rank <= h.h12; ++rank) {
        const auto u = betti_report(BettiKind::Untwisted, h, rank);
        CHECK(u.b[1] <= h.h11 + h.h12);
        CHECK((u.b[1] == h.h11 + h.h12) == (rank == 0));
        CHECK(u.b[0] == u.b[3]);
        CHECK(u.b[1] == u.b[2]);
        if (rank > h.h12 - 1) continue;
        const auto t = betti_report(BettiKind::Twisted, h, rank);
        CHECK(t.b[0] == t.b[3]);
        CHECK(t.b[1] == t.b[2]);
        CHECK(t.b[1] == h.h11 + h.h12 - 1 - rank);
        CHECK(t.total <= t.total_complex - 4);
        CHECK((t.total_complex - t.total) % 2 == 0);
      }
    }
  }

  TEST_CASE("deficit classification") {
    CHECK(classify_deficit(0) == "M");
    CHECK(classify_deficit(2) == "M-1");
    CHECK(classify_deficit(4) == "M-2");
    CHECK(classify_deficit(6) == "other");
  }
}
