#include <doctest.h>

#include <bit>

#include "twistcy/errors.hpp"
#include "twistcy/finite_models.hpp"

using namespace twistcy;
using namespace twistcy::finite;

namespace {

// Affine functions on Z2^n listed directly from (covector, constant).
bool brute_affine(const FnTable& f) {
  const Point size = Point{1} << f.n;
  for (Point l = 0; l < size; ++l)
    for (int c = 0; c < 2; ++c) {
      bool all = true;
      for (Point x = 0; x < size && all; ++x) all = f(x) == ((std::popcount(l & x) & 1) != c);
      if (all) return true;
    }
  return false;
}

}  // namespace

TEST_SUITE("finite_models") {
  TEST_CASE("affine decomposition examples") {
    const auto one = affine_decompose(FnTable::constant(3, true));
    REQUIRE(one);
    CHECK(one->linear == 0);
    CHECK(one->constant);
    CHECK_FALSE(affine_decompose(FnTable::delta(3, {5})));
    CHECK(degree(FnTable::delta(3, {5})) == 3);
    CHECK(degree(FnTable::zero(3)) == -1);
    // W = { x : x1 + x3 = 1 }, so delta_W = l + 1 + 1 = l with l = x1 + x3.
    std::vector<Point> w;
    for (Point x = 0; x < 8; ++x)
      if (std::popcount(x & 0b101u) % 2 == 1) w.push_back(x);
    const auto dw = affine_decompose(FnTable::delta(3, w));
    REQUIRE(dw);
    CHECK(dw->linear == 0b101u);
    CHECK(dw->constant == false);
  }

  TEST_CASE("affine detection agrees with brute force") {
    for (int n = 1; n <= 3; ++n) {
      for (std::uint32_t m = 0; m < (1u << (1u << n)); ++m) {
        FnTable f = FnTable::zero(n);
        for (Point x = 0; x < (Point{1} << n); ++x)
          if ((m >> x) & 1u) f.values.set(x);
        CHECK(affine_decompose(f).has_value() == brute_affine(f));
      }
    }
  }

  TEST_CASE("sum of affine functions is affine") {
    for (Point l1 = 0; l1 < 8; ++l1)
      for (Point l2 = 0; l2 < 8; ++l2) {
        auto f = FnTable::zero(3);
        auto g = FnTable::constant(3, true);
        for (Point x = 0; x < 8; ++x) {
          f.values.set(x, std::popcount(l1 & x) & 1);
          g.values.set(x, !(std::popcount(l2 & x) & 1));
        }
        const auto s = affine_decompose(f + g);
        REQUIRE(s);
        CHECK(s->linear == (l1 ^ l2));
        CHECK(s->constant);
      }
  }

  TEST_CASE("delta_W characterization") {
    for (int n = 1; n <= 4; ++n) CHECK(delta_w_characterization(n).passed());
  }

  TEST_CASE("L2 structure") {
    const auto rep = check_l2_structure();
    CHECK(rep.passed());
    CHECK(rep.facts.at("dim_l2") == "4");
    CHECK(AffineQuotient(3).dimension() == 4);
    CHECK(AffineQuotient(2).dimension() == 1);
    CHECK(AffineQuotient(3).class_of(FnTable::line(3, 0, 0)).none());
  }

  TEST_CASE("filtration dimensions") {
    CHECK(filtration_dimensions(3) == std::vector<std::size_t>{1, 4, 7, 8});
    CHECK(filtration_dimensions(2) == std::vector<std::size_t>{1, 3, 4});
    CHECK(filtration_dimensions(4) == std::vector<std::size_t>{1, 5, 11, 15, 16});
    CHECK(filtration_dimensions(3, 5) == filtration_dimensions(3));
    for (int n = 2; n <= 4; ++n) CHECK(filtration_check(n).passed());
    CHECK(filtration_check(3).facts.at("quotient_dims") == "(1, 3, 3, 1)");
    CHECK_THROWS_AS(filtration_check(5), InputError);
  }

  TEST_CASE("trilinear identity") {
    CHECK(beta_alpha(0, 0, 0, 0) == FnTable::zero(3));
    // e1, e2 independent and f1 = f2 = e3.
    const auto parts = affine_decompose(beta_alpha(0b001, 0b010, 0b100, 0b100));
    REQUIRE(parts);
    CHECK(parts->linear == 0b111u);
    CHECK(contract_volume(parts->linear) == 0b111u);
    CHECK(beta_two_form(0b001, 0b010, 0b100, 0b100) == 0b111u);
    CHECK(classify_lines(0b001, 0b010, 0b100, 0b100) == LineCase::Skew);

    const auto rep = beta_identity_check();
    CHECK(rep.passed());
    CHECK(rep.find("alpha is affine")->cases == 4096);
    CHECK(rep.facts.at("tuples: dependent directions") == "1408");
    CHECK(rep.facts.at("tuples: coplanar concurrent lines") == "336");
    CHECK(rep.facts.at("tuples: coplanar lines meeting in three points") == "336");
    CHECK(rep.facts.at("tuples: one line off the plane") == "2016");
  }

  TEST_CASE("wedge and contraction") {
    CHECK(wedge(0b001, 0b010) == 0b001u);
    CHECK(wedge(0b010, 0b001) == 0b001u);
    CHECK(wedge(0b011, 0b011) == 0u);
    CHECK(contract_volume(0b001) == wedge(0b010, 0b100));
  }

  TEST_CASE("GL(3) equivariance") {
    CHECK(beta_equivariance_check(4, 6).passed());
    Linear3 a{{0b011, 0b010, 0b100}};
    REQUIRE(a.invertible());
    const auto inv = a.inverse();
    for (Point x = 0; x < 8; ++x) CHECK(inv.apply(a.apply(x)) == x);
    CHECK_FALSE(Linear3{{0b011, 0b011, 0b100}}.invertible());
  }
}
