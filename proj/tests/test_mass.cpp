#include <doctest.h>

#include "bfi/mass.hpp"
#include "testutil.hpp"

using namespace bfi;
namespace tu = bfi::testutil;

namespace {

const Frame kOmega3{"w1", "w2", "w3"};

MassFunction source1_mass() {
  return MassFunction::make_bits(kOmega3, {{0b001, 0.2}, {0b011, 0.5}, {0b111, 0.3}});
}

MassFunction source2_mass() {
  return MassFunction::make_bits(kOmega3, {{0b010, 0.1}, {0b011, 0.6}, {0b111, 0.3}});
}

Frame sized_frame(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return Frame(labels);
}

}  // namespace

TEST_CASE("frame basics") {
  CHECK(kOmega3.size() == 3);
  CHECK(kOmega3.index_of("w2") == 1);
  CHECK(kOmega3.index_of("nope") == -1);
  CHECK(kOmega3.full_bits() == 0b111);
  CHECK(kOmega3 == Frame({"w1", "w2", "w3"}));
  CHECK(kOmega3 != Frame({"w1", "w2"}));
  CHECK_THROWS_AS(Frame({}), Error);
  CHECK_THROWS_AS(Frame({"a", "a"}), Error);
  CHECK_THROWS_AS(Frame({""}), Error);
}

TEST_CASE("focal set operations stay inside one frame") {
  auto a = FocalSet::of_labels(kOmega3, {"w1", "w2"});
  CHECK(a.bits() == 0b011);
  CHECK(a.cardinality() == 2);
  CHECK(a.complement().bits() == 0b100);
  CHECK(a.sorted_labels() == std::vector<std::string>{"w1", "w2"});
  CHECK_THROWS_AS(FocalSet::of_labels(kOmega3, {"w9"}), Error);

  Frame other{"x", "y", "z"};
  auto b = FocalSet::full(other);
  CHECK_THROWS_AS((void)(a & b), Error);
  try {
    (void)(a & b);
  } catch (const Error& e) {
    CHECK(e.code() == errc::foreign_focal_set);
  }
}

TEST_CASE("format_set") {
  CHECK(format_set(kOmega3, 0) == "∅");
  CHECK(format_set(kOmega3, 0b111) == "Ω");
  CHECK(format_set(kOmega3, 0b011) == "w1∪w2");
}

TEST_CASE("mass construction validates the contract") {
  auto m1 = source1_mass();
  CHECK(m1.focal_count() == 3);
  CHECK(m1.mass_bits(0b001) == doctest::Approx(0.2));
  CHECK(m1.total() == doctest::Approx(1.0));

  auto vac = MassFunction::vacuous(kOmega3);
  CHECK(vac.is_vacuous());
  CHECK(vac.ignorance() == 1.0);

  // sum 1.1 must be rejected
  CHECK_THROWS_AS(MassFunction::make_bits(kOmega3, {{0b001, 0.5}, {0b010, 0.6}}), Error);
  try {
    MassFunction::make_bits(kOmega3, {{0b001, 0.5}, {0b010, 0.6}});
  } catch (const Error& e) {
    CHECK(e.code() == errc::sum_not_one);
  }
  CHECK_THROWS_AS(MassFunction::make_bits(kOmega3, {{0b001, -0.1}, {0b111, 1.1}}), Error);
  CHECK_THROWS_AS(MassFunction::make_bits(kOmega3, {{0b001, 0.5}, {0b001, 0.5}}), Error);
  // focal bound to a different frame
  Frame other{"x", "y"};
  CHECK_THROWS_AS(
      MassFunction::make(kOmega3, {{FocalSet::full(other), 1.0}}), Error);
  // zero entries are pruned
  auto pruned = MassFunction::make_bits(kOmega3, {{0b001, 0.0}, {0b111, 1.0}});
  CHECK(pruned.focal_count() == 1);
}

TEST_CASE("pl and bel worked examples") {
  auto m1 = source1_mass();
  auto m2 = source2_mass();
  CHECK(pl(m1, FocalSet::of_labels(kOmega3, {"w2"})) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(pl(m2, FocalSet::of_labels(kOmega3, {"w3"})) == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(pl(m1, FocalSet::full(kOmega3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bel(m1, FocalSet::of_labels(kOmega3, {"w1", "w2"})) ==
        doctest::Approx(0.7).epsilon(1e-12));
  CHECK(bel(m2, FocalSet::of_labels(kOmega3, {"w2"})) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(bel(m1, FocalSet::empty(kOmega3)) == 0.0);
}

TEST_CASE("pl/bel duality and monotonicity on random masses") {
  auto gen = tu::rng(101);
  for (int n = 2; n <= 4; ++n) {
    Frame frame = sized_frame(n);
    for (int t = 0; t < 300; ++t) {
      tu::MassOptions opt;
      opt.forbid_empty = (t % 3 != 0);  // exercise subnormal masses too
      auto m = tu::random_mass(frame, gen, opt);
      std::uniform_int_distribution<std::uint64_t> pick(0, frame.full_bits());
      std::uint64_t xb = pick(gen);
      FocalSet x(frame, xb);
      // duality: pl(X) = 1 - m(∅) - bel(X^c), exact
      CHECK(std::abs(pl(m, x) - (1.0 - m.conflict() - bel(m, x.complement()))) <= 1e-12);
      // against the dense-oracle definitions
      CHECK(std::abs(pl(m, x) - tu::oracle_pl(m, xb)) <= 1e-12);
      CHECK(std::abs(bel(m, x) - tu::oracle_bel(m, xb)) <= 1e-12);
      // monotonicity along X ⊆ Y
      std::uint64_t yb = xb | pick(gen);
      FocalSet y(frame, yb);
      CHECK(bel(m, x) <= bel(m, y) + 1e-15);
      CHECK(pl(m, x) <= pl(m, y) + 1e-15);
    }
  }
}

TEST_CASE("commonality worked examples and oracle") {
  auto q1 = commonality(source1_mass());
  CHECK(q1[0b001] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q1[0b010] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(q1[0b111] == doctest::Approx(0.3).epsilon(1e-12));

  auto qv = commonality(MassFunction::vacuous(kOmega3));
  for (double v : qv) CHECK(v == doctest::Approx(1.0));

  auto qe = commonality(MassFunction::empty_mass(kOmega3));
  CHECK(qe[0] == 1.0);
  for (std::size_t x = 1; x < qe.size(); ++x) CHECK(qe[x] == 0.0);

  auto gen = tu::rng(102);
  Frame frame = sized_frame(4);
  for (int t = 0; t < 100; ++t) {
    auto m = tu::random_mass(frame, gen);
    auto q = commonality(m);
    for (std::uint64_t x = 0; x < q.size(); ++x)
      CHECK(std::abs(q[x] - tu::oracle_commonality(m, x)) <= 1e-12);
  }
}

TEST_CASE("commonality refuses oversized frames") {
  Frame big = sized_frame(21);
  CHECK_THROWS_AS(commonality(MassFunction::vacuous(big)), Error);
}

TEST_CASE("canonical weights of a simple support") {
  Frame frame{"a", "b"};
  auto m = MassFunction::simple_support(FocalSet::of_labels(frame, {"a"}), 0.4);
  auto w = canonical_weights(m);
  CHECK(w.weight_bits(0b01) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(w.weight_bits(0b10) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.weight_bits(0b00) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("vacuous mass decomposes into all-ones weights") {
  auto w = canonical_weights(MassFunction::vacuous(kOmega3));
  for (double v : w.dense()) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("weights can exceed 1 and still round-trip") {
  Frame frame{"a", "b"};
  auto m = MassFunction::make_bits(frame, {{0b01, 0.3}, {0b10, 0.3}, {0b11, 0.4}});
  auto w = canonical_weights(m);
  CHECK(w.weight_bits(0b00) == doctest::Approx(1.225).epsilon(1e-12));
  CHECK(tu::mass_diff(from_weights(w), m) <= 1e-12);
}

TEST_CASE("decomposition round trip on random non-dogmatic masses") {
  auto gen = tu::rng(103);
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    Frame frame = sized_frame(n);
    for (int t = 0; t < 1000; ++t) {
      auto m = tu::random_nondogmatic(frame, gen);
      auto w = canonical_weights(m);
      worst = std::max(worst, tu::mass_diff(from_weights(w), m));
      // transform agrees with the explicit Möbius enumeration
      worst = std::max(worst, tu::max_dense_diff(w.dense(), tu::oracle_weights(m)));
      // and the literal simple-support fold reproduces the mass
      worst = std::max(worst,
                       tu::max_dense_diff(tu::oracle_recompose(frame, w.dense()), tu::to_dense(m)));
    }
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("weight extraction rejects dogmatic masses") {
  auto dog = MassFunction::make_bits(kOmega3, {{0b001, 1.0}});
  CHECK_THROWS_AS(canonical_weights(dog), Error);
  try {
    canonical_weights(dog);
  } catch (const Error& e) {
    CHECK(e.code() == errc::dogmatic_mass);
  }
}

TEST_CASE("from_weights input validation") {
  Frame frame{"a", "b"};
  std::vector<double> w(4, 1.0);
  CHECK(from_weights(WeightFunction(frame, w)).is_vacuous());
  w[0b01] = 0.4;
  auto m = from_weights(WeightFunction(frame, w));
  CHECK(m.mass_bits(0b01) == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(m.mass_bits(0b11) == doctest::Approx(0.4).epsilon(1e-12));
  w[0b10] = 0.0;
  CHECK_THROWS_AS(WeightFunction(frame, w), Error);
  try {
    WeightFunction(frame, w);
  } catch (const Error& e) {
    CHECK(e.code() == errc::non_positive_weight);
  }
}

TEST_CASE("canonical entries order by cardinality then mask") {
  auto m = MassFunction::make_bits(kOmega3,
                                   {{0b100, 0.1}, {0b011, 0.4}, {0b001, 0.2}, {0b111, 0.3}});
  auto entries = m.canonical_entries();
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].first == 0b001);
  CHECK(entries[1].first == 0b100);
  CHECK(entries[2].first == 0b011);
  CHECK(entries[3].first == 0b111);
}
