#include <doctest.h>

#include "bfi/combination.hpp"
#include "bfi/independence.hpp"
#include "bfi/product_space.hpp"
#include "testutil.hpp"

using namespace bfi;
namespace tu = bfi::testutil;

namespace {

const Frame kOmega3{"w1", "w2", "w3"};

MassFunction source1_mass() {
  return MassFunction::make_bits(kOmega3, {{0b001, 0.2}, {0b011, 0.5}, {0b111, 0.3}});
}

Frame sized_frame(int n, const char* stem = "a") {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(stem + std::to_string(i));
  return Frame(labels);
}

}  // namespace

TEST_CASE("pair layout and cylinders") {
  ProductFrame pf(kOmega3, independence_frame());
  CHECK(pf.frame().size() == 9);
  CHECK(pf.pair_index(1, 2) == 5);
  // Ω×I
  std::uint64_t omega_i = pf.cylinder_bits(0b111, 0b001);
  CHECK(omega_i == ((1u << 0) | (1u << 3) | (1u << 6)));
  CHECK(pf.project_left_bits(omega_i) == 0b111);
  CHECK(pf.left_slice_bits(omega_i, 0) == 0b111);
  CHECK(pf.left_slice_bits(omega_i, 1) == 0b000);
  CHECK(pf.is_cylinder(FocalSet(pf.frame(), omega_i)));
  // (w1×I) ∪ (Ω×P) is not a cylinder
  std::uint64_t mixed = pf.cylinder_bits(0b001, 0b001) | pf.cylinder_bits(0b111, 0b010);
  CHECK(!pf.is_cylinder(FocalSet(pf.frame(), mixed)));
}

TEST_CASE("product set rendering") {
  ProductFrame pf(kOmega3, independence_frame());
  CHECK(pf.format_product_set(0) == "∅");
  CHECK(pf.format_product_set(pf.cylinder_bits(0b111, 0b010)) == "Ω×P");
  CHECK(pf.format_product_set(pf.cylinder_bits(0b111, 0b011)) == "Ω×(I∪P)");
  CHECK(pf.format_product_set(pf.cylinder_bits(0b001, 0b001) | pf.cylinder_bits(0b111, 0b010)) ==
        "(w1×I)∪(Ω×P)");
  CHECK(pf.format_product_set(pf.cylinder_bits(0b011, 0b001) |
                              pf.cylinder_bits(0b111, 0b110)) ==
        "((w1∪w2)×I)∪(Ω×(P∪~P))");
}

TEST_CASE("product frame size limit") {
  CHECK_THROWS_AS(ProductFrame(sized_frame(22), independence_frame()), Error);
}

TEST_CASE("vacuous extension lifts focals onto cylinders") {
  ProductFrame pf(kOmega3, independence_frame());
  // the three-parameter independence mass with alpha=0.95, beta=0.05, gamma=0.95
  auto mi = MassFunction::make_bits(
      independence_frame(),
      {{0b001, 0.0475}, {0b010, 0.857375}, {0b100, 0.045125}, {0b111, 0.05}});
  auto lifted = vacuous_extension(mi, pf);
  CHECK(lifted.focal_count() == 4);
  CHECK(std::abs(lifted.mass_bits(pf.cylinder_bits(0b111, 0b001)) - 0.0475) <= 1e-12);
  CHECK(std::abs(lifted.mass_bits(pf.cylinder_bits(0b111, 0b010)) - 0.857375) <= 1e-12);
  CHECK(std::abs(lifted.mass_bits(pf.cylinder_bits(0b111, 0b100)) - 0.045125) <= 1e-12);
  CHECK(std::abs(lifted.mass_bits(pf.cylinder_bits(0b111, 0b111)) - 0.05) <= 1e-12);

  CHECK(vacuous_extension(MassFunction::vacuous(independence_frame()), pf).is_vacuous());
  auto empty_lift = vacuous_extension(MassFunction::empty_mass(independence_frame()), pf);
  CHECK(empty_lift.conflict() == 1.0);

  CHECK_THROWS_AS(vacuous_extension(source1_mass(), pf), Error);
}

TEST_CASE("ballooning") {
  ProductFrame pf(kOmega3, independence_frame());
  auto up = balloon(source1_mass(), pf, 0);
  const std::uint64_t rest = pf.cylinder_bits(0b111, 0b110);  // Ω×(P∪~P)
  CHECK(up.focal_count() == 3);
  CHECK(std::abs(up.mass_bits(pf.cylinder_bits(0b001, 0b001) | rest) - 0.2) <= 1e-12);
  CHECK(std::abs(up.mass_bits(pf.cylinder_bits(0b011, 0b001) | rest) - 0.5) <= 1e-12);
  CHECK(std::abs(up.mass_bits(pf.frame().full_bits()) - 0.3) <= 1e-12);

  // conflict mass deconditioned on ~P covers Ω×(I∪P)
  auto neg = balloon(MassFunction::empty_mass(kOmega3), pf, 2);
  CHECK(neg.focal_count() == 1);
  CHECK(neg.mass_bits(pf.cylinder_bits(0b111, 0b011)) == 1.0);

  CHECK(balloon(MassFunction::vacuous(kOmega3), pf, 1).is_vacuous());
  CHECK_THROWS_AS(balloon(source1_mass(), pf, 3), Error);
  try {
    balloon(source1_mass(), pf, -1);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_an_atom);
  }
}

TEST_CASE("marginalization preserves mass and undoes cylinder extension") {
  auto gen = tu::rng(301);
  Frame left = sized_frame(3);
  Frame right = sized_frame(3, "c");
  ProductFrame pf(left, right);
  for (int t = 0; t < 200; ++t) {
    tu::MassOptions opt;
    opt.forbid_empty = false;
    auto m = tu::random_mass(left, gen, opt);
    CHECK(tu::mass_diff(marginalize_left(cylinder_extension_left(m, pf), pf), m) == 0.0);
  }
  // projection keeps the total at 1 for arbitrary product masses
  for (int t = 0; t < 200; ++t) {
    auto mp = tu::random_mass(pf.frame(), gen);
    CHECK(std::abs(marginalize_left(mp, pf).total() - 1.0) <= 1e-12);
  }
  CHECK(marginalize_left(MassFunction::vacuous(pf.frame()), pf).is_vacuous());
}

TEST_CASE("balloon then condition back recovers the conditional") {
  auto gen = tu::rng(302);
  for (int n = 2; n <= 3; ++n) {
    for (int c = 2; c <= 3; ++c) {
      Frame left = sized_frame(n);
      Frame right = sized_frame(c, "c");
      ProductFrame pf(left, right);
      for (int t = 0; t < 100; ++t) {
        tu::MassOptions opt;
        opt.forbid_empty = false;
        auto m = tu::random_mass(left, gen, opt);
        for (int atom = 0; atom < c; ++atom) {
          auto up = balloon(m, pf, atom);
          auto back = condition(up, pf.cylinder(FocalSet::full(left),
                                                FocalSet::singleton(right, atom)));
          CHECK(tu::mass_diff(marginalize_left(back, pf), m) <= 1e-15);
        }
      }
    }
  }
}

TEST_CASE("degenerate product with a singleton right frame") {
  Frame right{"c"};
  ProductFrame pf(kOmega3, right);
  auto m = source1_mass();
  auto up = balloon(m, pf, 0);
  CHECK(tu::mass_diff(marginalize_left(up, pf), m) == 0.0);
}
