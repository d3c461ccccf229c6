#include "thompson/witness.hpp"

#include <random>

#include "doctest.h"
#include "support/generators.hpp"
#include "thompson/dynamics.hpp"
#include "thompson/error.hpp"
#include "thompson/metric.hpp"
#include "thompson/normal_form.hpp"

using namespace thompson;
using namespace thompson::testing;

TEST_CASE("first right caret index") {
  CHECK(first_right_caret_index(parse_tree("1010100")) == 1);
  CHECK(first_right_caret_index(build_balanced(3)) == 5);
  CHECK(first_right_caret_index(build_balanced(8)) == 191);
  CHECK_THROWS_AS(first_right_caret_index(leaf()), Error);
  CHECK_THROWS_AS(first_right_caret_index(make_caret(make_caret(leaf(), leaf()), leaf())),
                  Error);
}

TEST_CASE("witness construction for k = 2") {
  WitnessElement w = build_witness(2);
  CHECK(w.k == 2);
  CHECK(w.r == 191);
  CHECK(w.s == 253);
  CHECK(caret_count(w.element.neg()) == 255);
  CHECK(leaf_count(w.element.neg()) == 256);
  CHECK(leaf_count(w.element.pos()) == 256);
  CHECK(tree_equal(w.element.neg(), build_balanced(8)));
  CHECK(is_reduced(w.element.pair()));
  CHECK(exposed_leaf_starts(w.element.pos()) == std::vector<std::uint64_t>{1, 253});
  CHECK(w.n + 1 == fordham_length(w.element));

  // T+ realizes the positive word x0^(r-2) x1 x_s
  NormalForm nf = pair_to_normal_form(w.element);
  REQUIRE(nf.positive.size() == 3);
  CHECK(nf.positive[0] == NormalFormTerm{0, w.r - 2});
  CHECK(nf.positive[1] == NormalFormTerm{1, 1});
  CHECK(nf.positive[2] == NormalFormTerm{w.s, 1});
}

TEST_CASE("witness parameter errors") {
  CHECK_THROWS_AS(build_witness(1), Error);
  try {
    build_witness(4, 1000);
    FAIL("expected a resource error");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Resource);
    CHECK(std::string(e.what()).find("65536") != std::string::npos);
  }
}

TEST_CASE("witness validation") {
  WitnessValidation v = validate_witness(build_witness(2));
  CHECK(v.ok);
  CHECK(v.failures.empty());
  CHECK(v.len_wx0 == v.length - 1);
  CHECK(v.len_wx0inv == v.length - 1);
  CHECK(v.dist == 2);
}

TEST_CASE("corrupted witness fails validation") {
  WitnessElement w = build_witness(2);
  // wrong negative tree (one level short) with an arbitrary matching partner
  Element bogus = reduce(TreePair{build_balanced(7), pad_to_leaf_count(leaf(), 128)});
  WitnessElement corrupt{2, bogus, w.n, w.r, w.s};
  WitnessValidation v = validate_witness(corrupt);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.failures.empty());
}

TEST_CASE("x1 rotations stay applicable along the witness, k applications") {
  WitnessElement w = build_witness(2);
  Element cur = w.element;
  for (unsigned i = 0; i < w.k; ++i) {
    REQUIRE(rotation_applicable(cur, Gen::X1));
    RotationOutcome ro = apply_rotation(cur, Gen::X1);
    CHECK(ro.element.pos().get() == w.element.pos().get());
    cur = ro.element;
  }
}

TEST_CASE("random short walks match the delta chart and never touch T+") {
  for (unsigned k = 2; k <= 3; ++k) {
    WitnessElement w = build_witness(k);
    auto pos_types = classify_carets(w.element.pos());
    auto pos_exposed = exposed_leaf_starts(w.element.pos());
    std::mt19937 rng(kSeed + 50 + k);
    for (int walk = 0; walk < 60; ++walk) {
      Element cur = w.element;
      std::uint64_t len = w.n + 1;
      for (unsigned step = 0; step + 1 < k; ++step) {
        for (Gen g : kAllGens) CHECK(rotation_applicable(cur, g));
        Gen g = random_gen(rng);
        auto ro = try_rotation(cur, g, pos_exposed);
        REQUIRE(ro.has_value());
        CHECK(ro->element.pos().get() == w.element.pos().get());
        CaretType pairing = pos_types[ro->affected_index];
        REQUIRE((pairing == CaretType::LL || pairing == CaretType::RNI));
        std::uint64_t measured = fordham_length(ro->element);
        CHECK(static_cast<std::int64_t>(measured) - static_cast<std::int64_t>(len) ==
              predict_delta(pairing, g));
        len = measured;
        cur = ro->element;
      }
    }
  }
}
