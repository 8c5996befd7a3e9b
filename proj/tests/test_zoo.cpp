#include "doctest.h"

#include "og4/zoo.hpp"
#include "oracle.hpp"

using namespace og4;

TEST_CASE("psl2 element canonicalization round trips at p=7 (exhaustive)") {
  auto all = enumerate_psl2(7);
  CHECK(all.size() == 168);
  for (const auto &e : all) {
    auto again = PSL2Element::make(7, e.m);
    CHECK(again == e);
    CHECK(e.multiplied_by(e.inverse()) == PSL2Element::make(7, {1, 0, 0, 1}));
  }
}

TEST_CASE("psl2 on the projective line") {
  auto pair = psl2_on_projective_line(7);
  CHECK(pair.group.degree() == 8);
  CHECK(pair.group.order() == 168);
  CHECK(oracle::brute_force_order(pair.group.generators(), 8) == 168);
  CHECK(pair.a.element_order() == 2);
  CHECK(pair.b.element_order() == 3);
  CHECK(compose(pair.a, pair.b).element_order() == 7);
  CHECK(compose(compose(pair.a, pair.b), pair.b).element_order() == 7);
  // 2-transitive, in particular transitive
  CHECK(pair.group.orbit(0).size() == 8);

  auto p11 = psl2_on_projective_line(11);
  CHECK(p11.group.order() == 660);

  CHECK_THROWS_AS(psl2_on_projective_line(6), Error);
  CHECK_THROWS_AS(psl2_on_projective_line(4), Error);
}

TEST_CASE("alternating pairs") {
  auto k2 = alt_with_pair(5, AltPairKind::k2_pair);
  CHECK(k2.a.element_order() == 3);
  CHECK(k2.b.element_order() == 5);
  CHECK(k2.group.order() == 60);

  auto k1 = alt_with_pair(5, AltPairKind::k1_pair);
  CHECK(k1.a.element_order() == 2);
  CHECK(compose(k1.a, k1.b).element_order() % 2 == 1);
  CHECK(k1.group.order() == 60);

  auto a7 = alt_with_pair(7, AltPairKind::k2_pair);
  CHECK(a7.group.order() == 2520);

  CHECK_THROWS_AS(alt_with_pair(4, AltPairKind::k2_pair), Error);
  CHECK_THROWS_AS(alt_with_pair(6, AltPairKind::k1_pair), Error);
}

TEST_CASE("inverting conjugator") {
  auto pair = alt_with_pair(5, AltPairKind::k2_pair);
  auto theta = find_inverting_conjugator(5, pair.a, pair.b);
  CHECK(conjugated(pair.a, theta) == pair.a.inverse());
  CHECK(conjugated(pair.b, theta) == pair.b.inverse());

  auto pair7 = alt_with_pair(7, AltPairKind::k2_pair);
  auto theta7 = find_inverting_conjugator(7, pair7.a, pair7.b);
  CHECK(conjugated(pair7.a, theta7) == pair7.a.inverse());
  CHECK(conjugated(pair7.b, theta7) == pair7.b.inverse());
}

TEST_CASE("cyclic and elementary abelian regular groups") {
  CHECK(cyclic_and_elementary(5, 1).order() == 5);
  auto z9 = cyclic_and_elementary(3, 2);
  CHECK(z9.order() == 9);
  CHECK(z9.degree() == 9);
  auto z49 = cyclic_and_elementary(7, 2);
  CHECK(z49.order() == 49);
  CHECK_THROWS_AS(cyclic_and_elementary(4, 1), Error);
  CHECK_THROWS_AS(cyclic_and_elementary(5, 3), Error);
}

TEST_CASE("word evaluation") {
  auto pair = psl2_on_projective_line(7);
  CHECK(eval_word("", pair.a, pair.b).is_identity());
  CHECK(eval_word("aa", pair.a, pair.b).is_identity());
  CHECK(eval_word("bB", pair.a, pair.b).is_identity());
  CHECK(eval_word("bb", pair.a, pair.b) == pair.b.inverse());
  CHECK_THROWS_AS(eval_word("x", pair.a, pair.b), Error);
}

TEST_CASE("wreath construction data 5.6") {
  auto data = construction_data_56(7);
  CHECK(data.k == 4);
  CHECK(data.H.degree() == 32);
  CHECK(data.t_order == 168);
  CHECK(data.h_order == order_pow(168, 4) * 4);
  CHECK(data.V.order() == 4);
  CHECK(compose(data.phi, data.phi) == data.y);
  REQUIRE(data.h2.has_value());
  CHECK(conjugated(data.h1, data.phi) == *data.h2);
  // phi itself lies outside H (its block action is not in V's)
  CHECK(!data.V.contains(data.y));
}

TEST_CASE("wreath construction data 5.7") {
  auto data = construction_data_57(7);
  CHECK(data.V.order() == 2);
  CHECK(!data.h2.has_value());
  CHECK(data.h_order == order_pow(168, 4) * 2);
  CHECK(compose(data.phi, data.phi) == data.y);
}

TEST_CASE("wreath construction data 5.8") {
  auto data = construction_data_58(7);
  CHECK(data.k == 8);
  CHECK(data.H.degree() == 64);
  CHECK(data.h_order == order_pow(168, 8) * 4);
  CHECK(data.V.order() == 4);
  // the printed y is the identity in blocks 0 and 4
  for (Point blk : {Point{0}, Point{4}})
    for (Point x = 0; x < data.block_degree; ++x) {
      Point pt = blk * data.block_degree + x;
      CHECK(data.y[pt] == pt);
    }
  CHECK_THROWS_AS(construction_data_58(6), Error);
}
