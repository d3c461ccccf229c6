#include "thompson/normal_form.hpp"

#include <random>

#include "doctest.h"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "thompson/error.hpp"
#include "thompson/metric.hpp"

using namespace thompson;
using namespace thompson::testing;

TEST_CASE("normal form text round trip") {
  NormalForm nf = parse_normal_form(kFig1Text);
  REQUIRE(nf.positive.size() == 7);
  REQUIRE(nf.negative.size() == 5);
  CHECK(nf.positive.front() == NormalFormTerm{0, 2});
  CHECK(nf.negative.front() == NormalFormTerm{0, 2});
  CHECK(nf.negative.back() == NormalFormTerm{9, 1});
  CHECK(to_string(nf) == kFig1Text);
  CHECK(to_string(NormalForm{}) == "");
  CHECK(parse_normal_form("").empty());
  CHECK(parse_normal_form("  \n ").empty());
}

TEST_CASE("normal form validation") {
  CHECK_THROWS_AS(parse_normal_form("x1 x0"), Error);          // decreasing positive part
  CHECK_THROWS_AS(parse_normal_form("x0^-1 x1"), Error);       // positive after negative
  CHECK_THROWS_AS(parse_normal_form("x0^-1 x1^-1"), Error);    // negative must descend
  CHECK_THROWS_AS(parse_normal_form("x0^0"), Error);
  CHECK_THROWS_AS(parse_normal_form("y0"), ParseError);
  CHECK(parse_normal_form("x1^-1 x0^-1").negative.size() == 2);
}

TEST_CASE("leaf exponents of the worked example") {
  CHECK(leaf_exponents(parse_tree(kFig1Neg)) == kFig1NegExponents);
  CHECK(leaf_exponents(parse_tree(kFig1Pos)) == kFig1PosExponents);
}

TEST_CASE("leaf exponents of right spines vanish") {
  Tree spine = parse_tree("10101010100");
  ExponentVector e = leaf_exponents(spine);
  for (auto v : e) CHECK(v == 0);
  CHECK(e.size() == 6);
  // a right child always has exponent zero; the last leaf too
  std::mt19937 rng(kSeed + 20);
  for (int i = 0; i < 200; ++i) {
    Tree t = random_tree(rng, 1 + i % 30);
    ExponentVector ev = leaf_exponents(t);
    CHECK(ev.back() == 0);
  }
}

TEST_CASE("pair to normal form") {
  CHECK(pair_to_normal_form(Element::identity()).empty());
  Element fig1 = element_from_bitstrings(kFig1Neg, kFig1Pos);
  CHECK(to_string(pair_to_normal_form(fig1)) == kFig1Text);
  NormalForm x0 = pair_to_normal_form(generator_element(Gen::X0));
  REQUIRE(x0.positive.size() == 1);
  CHECK(x0.positive[0] == NormalFormTerm{0, 1});
  CHECK(x0.negative.empty());
}

TEST_CASE("normal form to pair") {
  NormalForm x0;
  x0.positive.push_back({0, 1});
  Element e0 = normal_form_to_pair(x0);
  CHECK(serialize(e0.neg()) == "10100");
  CHECK(serialize(e0.pos()) == "11000");

  NormalForm x1;
  x1.positive.push_back({1, 1});
  Element e1 = normal_form_to_pair(x1);
  CHECK(serialize(e1.neg()) == "1010100");
  CHECK(serialize(e1.pos()) == "1011000");

  Element fig1 = normal_form_to_pair(parse_normal_form(kFig1Text));
  CHECK(serialize(fig1.neg()) == kFig1Neg);
  CHECK(serialize(fig1.pos()) == kFig1Pos);

  NormalForm bad;
  bad.positive.push_back({3, 1});
  bad.positive.push_back({3, 1});
  CHECK_THROWS_AS(normal_form_to_pair(bad), Error);
}

TEST_CASE("round trips between pairs and normal forms") {
  std::mt19937 rng(kSeed + 21);
  for (int i = 0; i < 1000; ++i) {
    NormalForm nf = random_unique_normal_form(rng);
    Element e = normal_form_to_pair(nf);
    CHECK(is_reduced(e.pair()));
    CHECK(pair_to_normal_form(e) == nf);
  }
  for (int i = 0; i < 1000; ++i) {
    Element e = random_element(rng, 1 + i % 24);
    NormalForm nf = pair_to_normal_form(e);
    CHECK(is_unique_normal_form(nf));
    CHECK(equals(normal_form_to_pair(nf), e));
  }
}

TEST_CASE("padding does not change the normal form") {
  std::mt19937 rng(kSeed + 22);
  for (int i = 0; i < 200; ++i) {
    Element e = random_element(rng, 1 + i % 20);
    NormalForm nf = pair_to_normal_form(e);
    Tree padded_neg = pad_to_leaf_count(e.neg(), leaf_count(e.neg()) + 3);
    ExponentVector before = leaf_exponents(e.neg());
    ExponentVector after = leaf_exponents(padded_neg);
    before.resize(after.size(), 0);
    CHECK(before == after);
    (void)nf;
  }
}

TEST_CASE("uniqueness condition") {
  NormalForm bad;
  bad.positive.push_back({1, 1});
  bad.negative.push_back({1, 1});
  CHECK_FALSE(is_unique_normal_form(bad));
  bad.positive.push_back({2, 1});
  CHECK(is_unique_normal_form(bad));
  CHECK(is_unique_normal_form(NormalForm{}));
  CHECK(is_unique_normal_form(parse_normal_form(kFig1Text)));
}

TEST_CASE("burillo D") {
  CHECK(burillo_d(NormalForm{}) == 0);
  NormalForm fig1 = parse_normal_form(kFig1Text);
  CHECK(burillo_d(fig1) == 31);  // 8 + 6 + 8 + 9
  NormalForm x0;
  x0.positive.push_back({0, 1});
  CHECK(burillo_d(x0) == 1);

  // sandwich on the worked example
  CHECK(burillo_d(fig1) <= 3 * kFig1Length);
  CHECK(kFig1Length <= 3 * burillo_d(fig1));
}

TEST_CASE("burillo sandwich on random elements") {
  std::mt19937 rng(kSeed + 23);
  for (int i = 0; i < 2000; ++i) {
    Element e = random_element(rng, 1 + i % 40);
    std::uint64_t d = burillo_d(pair_to_normal_form(e));
    std::uint64_t len = fordham_length(e);
    CHECK(d <= 3 * len);
    CHECK(len <= 3 * d);
  }
}
