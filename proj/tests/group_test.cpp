#include <algorithm>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "cgt/builders.hpp"
#include "cgt/group.hpp"

using namespace cgt;

namespace {

Permutation from_images(std::initializer_list<uint32_t> im) {
  return Permutation(std::vector<uint32_t>(im));
}

// Element order by repeated multiplication.
uint32_t element_order(const Group& g, uint32_t x) {
  uint32_t cur = x, n = 1;
  while (cur != 0) {
    cur = g.mul(cur, x);
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("enumerate small alternating groups from standard generators") {
  GroupSpec a5{"a5", {from_images({1, 2, 3, 4, 0}), from_images({1, 2, 0, 3, 4})}};
  CHECK(Group::enumerate(a5).order() == 60);

  GroupSpec a4{"a4", {from_images({1, 2, 0, 3}), from_images({0, 2, 3, 1})}};
  CHECK(Group::enumerate(a4).order() == 12);

  GroupSpec trivial{"t", {Permutation::identity(1)}};
  CHECK(Group::enumerate(trivial).order() == 1);
}

TEST_CASE("canonical element order: identity first, the rest lexicographic") {
  const Group g = Group::enumerate(parse_entry("s4").spec);
  CHECK(g.element(0).is_identity());
  for (uint32_t i = 2; i < g.order(); ++i)
    CHECK(g.element(i - 1) < g.element(i));
}

TEST_CASE("enumerate is deterministic") {
  const GroupSpec spec = parse_entry("s4").spec;
  const Group g1 = Group::enumerate(spec);
  const Group g2 = Group::enumerate(spec);
  REQUIRE(g1.order() == g2.order());
  for (uint32_t i = 0; i < g1.order(); ++i)
    CHECK(g1.element(i) == g2.element(i));
}

TEST_CASE("enumerate input validation") {
  CHECK_THROWS_AS(Group::enumerate(GroupSpec{"empty", {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      Group::enumerate(GroupSpec{
          "mixed", {Permutation::identity(3), Permutation::identity(4)}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      Group::enumerate(GroupSpec{"bad", {from_images({0, 0, 1})}}),
      std::invalid_argument);
}

TEST_CASE("enumeration cap") {
  GroupSpec spec = parse_entry("s5").spec;
  spec.max_order = 100;
  CHECK_THROWS_AS(Group::enumerate(spec), CapExceeded);
  spec.max_order = 120;  // exactly the order: allowed
  CHECK(Group::enumerate(spec).order() == 120);
}

TEST_CASE("closure: products of elements stay in the group") {
  for (const char* name : {"s4", "d12", "q8", "a4", "z6"}) {
    const Group g = Group::enumerate(parse_entry(name).spec);
    for (uint32_t i = 0; i < g.order(); ++i)
      for (uint32_t j = 0; j < g.order(); ++j)
        CHECK(g.contains(compose(g.element(i), g.element(j))));
  }
}

TEST_CASE("inverse table") {
  const Group g = Group::enumerate(parse_entry("s4").spec);
  for (uint32_t i = 0; i < g.order(); ++i) {
    CHECK(g.mul(i, g.inv(i)) == 0);
    CHECK(g.mul(g.inv(i), i) == 0);
  }
}

TEST_CASE("centralizer of a transposition in S3") {
  const Group g = Group::enumerate(parse_entry("s3").spec);
  const uint32_t x = g.index_of(from_images({1, 0, 2}));  // (0 1)
  const auto c = centralizer(g, x);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 0);
  CHECK(c[1] == x);
}

TEST_CASE("centralizer of the identity is the whole group") {
  const Group g = Group::enumerate(parse_entry("d12").spec);
  CHECK(centralizer(g, 0).size() == g.order());
}

TEST_CASE("centralizer of i in the quaternion group is {1,-1,i,-i}") {
  const Group g = Group::enumerate(quaternion8_spec());
  const uint32_t xi = g.index_of(q8_right_translation(2));
  const auto c = centralizer(g, xi);
  const std::set<uint32_t> expect = {
      0, g.index_of(q8_right_translation(1)), xi,
      g.index_of(q8_right_translation(3))};
  CHECK(std::set<uint32_t>(c.begin(), c.end()) == expect);
}

TEST_CASE("centralizers are subgroups") {
  for (const char* name : {"s4", "q8", "d12"}) {
    const Group g = Group::enumerate(parse_entry(name).spec);
    for (uint32_t x = 0; x < g.order(); ++x) {
      const auto c = centralizer(g, x);
      const std::set<uint32_t> cs(c.begin(), c.end());
      CHECK(cs.count(0) == 1);
      for (uint32_t a : c) {
        CHECK(cs.count(g.inv(a)) == 1);
        for (uint32_t b : c) CHECK(cs.count(g.mul(a, b)) == 1);
      }
    }
  }
}

TEST_CASE("center") {
  const Group q8 = Group::enumerate(quaternion8_spec());
  const auto zq8 = center(q8);
  REQUIRE(zq8.size() == 2);
  CHECK(zq8[0] == 0);
  CHECK(zq8[1] == q8.index_of(q8_right_translation(1)));  // -1

  const Group a5 = Group::enumerate(parse_entry("a5").spec);
  CHECK(center(a5) == std::vector<uint32_t>{0});

  const Group z6 = Group::enumerate(parse_entry("z6").spec);
  CHECK(center(z6).size() == 6);
}

TEST_CASE("conjugacy classes of S3: sizes 1, 3, 2") {
  const Group g = Group::enumerate(parse_entry("s3").spec);
  REQUIRE(g.class_count() == 3);
  std::multiset<size_t> sizes;
  for (const auto& m : g.class_members()) sizes.insert(m.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
}

TEST_CASE("conjugacy classes of A5: sizes 1, 15, 20, 12, 12") {
  const Group g = Group::enumerate(parse_entry("a5").spec);
  REQUIRE(g.class_count() == 5);
  std::multiset<size_t> sizes;
  for (const auto& m : g.class_members()) sizes.insert(m.size());
  CHECK(sizes == std::multiset<size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("trivial group has one class") {
  const Group g = Group::enumerate(GroupSpec{"t", {Permutation::identity(1)}});
  CHECK(g.class_count() == 1);
}

TEST_CASE("class sizes sum to the order and divide it") {
  for (const char* name : {"s4", "a5", "q8", "d12", "psl2_7"}) {
    const Group g = Group::enumerate(parse_entry(name).spec);
    size_t total = 0;
    for (const auto& m : g.class_members()) {
      total += m.size();
      CHECK(g.order() % m.size() == 0);
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("conjugator witnesses carry each element to its class representative") {
  for (const char* name : {"s4", "a5", "q8", "d12"}) {
    const Group g = Group::enumerate(parse_entry(name).spec);
    for (uint32_t e = 0; e < g.order(); ++e)
      CHECK(g.conjugate(e, g.conjugator(e)) ==
            g.class_reps()[g.class_of(e)]);
  }
}

TEST_CASE("stabilizer of the 3-cycle class in A5 is trivial") {
  const Group g = Group::enumerate(parse_entry("a5").spec);
  const uint32_t three_cycle =
      g.index_of(from_images({1, 2, 0, 3, 4}));  // (0 1 2)
  const auto& cls = g.class_members()[g.class_of(three_cycle)];
  REQUIRE(cls.size() == 20);
  CHECK(normal_subset_stabilizer(g, cls) == std::vector<uint32_t>{0});
}

TEST_CASE("stabilizer in Z4 of the two generators is the order-2 subgroup") {
  const Group g = Group::enumerate(cyclic_spec(4));
  const uint32_t g1 = g.index_of(from_images({1, 2, 3, 0}));
  const uint32_t g2 = g.mul(g1, g1);
  const uint32_t g3 = g.mul(g2, g1);
  const auto x = normal_subset_stabilizer(g, {g1, g3});
  CHECK(x == std::vector<uint32_t>({0, g2}));
}

TEST_CASE("stabilizer of all non-identity elements is trivial") {
  const Group g = Group::enumerate(parse_entry("s4").spec);
  std::vector<uint32_t> everything_else;
  for (uint32_t i = 1; i < g.order(); ++i) everything_else.push_back(i);
  CHECK(normal_subset_stabilizer(g, everything_else) ==
        std::vector<uint32_t>{0});
}

TEST_CASE("stabilizer input validation") {
  const Group g = Group::enumerate(parse_entry("s3").spec);
  CHECK_THROWS_AS(normal_subset_stabilizer(g, {}), std::invalid_argument);
  std::vector<uint32_t> all;
  for (uint32_t i = 0; i < g.order(); ++i) all.push_back(i);
  CHECK_THROWS_AS(normal_subset_stabilizer(g, all), std::invalid_argument);
  // A single transposition is not conjugation-closed in S3.
  const uint32_t t = g.index_of(from_images({1, 0, 2}));
  CHECK_THROWS_AS(normal_subset_stabilizer(g, {t}), std::invalid_argument);
}

TEST_CASE("stabilizers of class unions are proper normal subgroups") {
  const Group g = Group::enumerate(parse_entry("s4").spec);
  const auto& classes = g.class_members();
  const uint32_t k = g.class_count();
  for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<uint32_t> subset;
    for (uint32_t c = 0; c < k; ++c)
      if (mask & (1u << c))
        subset.insert(subset.end(), classes[c].begin(), classes[c].end());
    const auto x = normal_subset_stabilizer(g, subset);
    const std::set<uint32_t> xs(x.begin(), x.end());
    CHECK(xs.count(0) == 1);
    CHECK(x.size() < g.order());
    for (uint32_t a : x) {
      CHECK(xs.count(g.inv(a)) == 1);
      for (uint32_t b : x) CHECK(xs.count(g.mul(a, b)) == 1);
      for (uint32_t gen : g.generator_indices())
        CHECK(xs.count(g.conjugate(a, gen)) == 1);
    }
  }
}

TEST_CASE("element orders divide the group order") {
  const Group g = Group::enumerate(parse_entry("s5").spec);
  for (uint32_t x = 0; x < g.order(); ++x)
    CHECK(g.order() % element_order(g, x) == 0);
}
