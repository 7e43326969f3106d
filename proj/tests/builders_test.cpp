#include <catch2/catch_amalgamated.hpp>

#include "cgt/builders.hpp"
#include "cgt/group.hpp"

using namespace cgt;

TEST_CASE("cyclic groups") {
  CHECK(Group::enumerate(cyclic_spec(1)).order() == 1);
  CHECK(Group::enumerate(cyclic_spec(6)).order() == 6);
  CHECK(Group::enumerate(cyclic_spec(2)).order() == 2);
  CHECK_THROWS_AS(cyclic_spec(0), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_spec(5000), std::invalid_argument);
}

TEST_CASE("symmetric and alternating groups") {
  CHECK(Group::enumerate(symmetric_spec(1)).order() == 1);
  CHECK(Group::enumerate(symmetric_spec(4)).order() == 24);
  CHECK(Group::enumerate(symmetric_spec(6)).order() == 720);
  CHECK(Group::enumerate(alternating_spec(3)).order() == 3);
  CHECK(Group::enumerate(alternating_spec(5)).order() == 60);
  CHECK(Group::enumerate(alternating_spec(6)).order() == 360);
  CHECK(Group::enumerate(alternating_spec(7)).order() == 2520);
  CHECK_THROWS_AS(symmetric_spec(10), std::invalid_argument);
  CHECK_THROWS_AS(alternating_spec(10), std::invalid_argument);
}

TEST_CASE("dihedral groups act on the polygon") {
  const Group d6 = Group::enumerate(dihedral_spec(6));
  CHECK(d6.order() == 12);
  CHECK(Group::enumerate(dihedral_spec(3)).order() == 6);
  CHECK_THROWS_AS(dihedral_spec(2), std::invalid_argument);
}

TEST_CASE("quaternion group via right translations") {
  const Group q8 = Group::enumerate(quaternion8_spec());
  CHECK(q8.order() == 8);
  // i * j = k and j * i = -k in the index table.
  CHECK(q8_mul(2, 4) == 6);
  CHECK(q8_mul(4, 2) == 7);
  CHECK(q8_mul(2, 2) == 1);  // i^2 = -1
  // The right translation by i has order 4 and squares to the translation
  // by -1.
  const Permutation rho_i = q8_right_translation(2);
  CHECK(compose(rho_i, rho_i) == q8_right_translation(1));
  CHECK(compose(compose(rho_i, rho_i), compose(rho_i, rho_i)).is_identity());
}

TEST_CASE("PSL(2, q) orders over the whole supported range") {
  const std::pair<uint32_t, uint64_t> expected[] = {
      {4, 60},    {5, 60},    {7, 168},   {8, 504},   {9, 360},
      {11, 660},  {13, 1092}, {16, 4080}, {17, 2448}, {19, 3420}};
  for (const auto& [q, order] : expected) {
    CAPTURE(q);
    CHECK(psl2_expected_order(q) == order);
    CHECK(Group::enumerate(psl2_spec(q)).order() == order);
  }
}

TEST_CASE("PSL(2, q) rejects unsupported parameters") {
  for (uint32_t q : {0u, 1u, 2u, 3u, 6u, 10u, 12u, 15u, 20u, 23u, 25u})
    CHECK_THROWS_AS(psl2_spec(q), std::invalid_argument);
}

TEST_CASE("entry names parse to the right builders") {
  CHECK(parse_entry("a5").expected_order == 60);
  CHECK(parse_entry("s6").expected_order == 720);
  CHECK(parse_entry("d12").expected_order == 12);
  CHECK(parse_entry("z6").expected_order == 6);
  CHECK(parse_entry("q8").expected_order == 8);
  CHECK(parse_entry("psl2_7").expected_order == 168);
  CHECK(parse_entry("d12").spec.generators.front().degree() == 6);
  CHECK_THROWS_AS(parse_entry("nope"), std::invalid_argument);
  CHECK_THROWS_AS(parse_entry("d7"), std::invalid_argument);  // odd order
  CHECK_THROWS_AS(parse_entry("x5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_entry("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_entry(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_entry("psl2_"), std::invalid_argument);
  CHECK_THROWS_AS(parse_entry("a5x"), std::invalid_argument);
}

TEST_CASE("every corpus builder passes its expected-order sanity check") {
  for (const char* name :
       {"z6", "s3", "s4", "d12", "q8", "a4", "a5", "psl2_4", "psl2_5",
        "psl2_7", "psl2_8", "psl2_9", "psl2_11", "psl2_13", "a6", "s5", "s6"}) {
    const BuiltEntry e = parse_entry(name);
    REQUIRE(e.expected_order.has_value());
    CHECK(Group::enumerate(e.spec).order() == *e.expected_order);
  }
}
