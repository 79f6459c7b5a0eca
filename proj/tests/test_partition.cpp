#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nucleus/partition.hpp"
#include "oracle.hpp"

using namespace nucleus;

namespace {

std::vector<std::vector<Part>> as_vectors(const std::vector<Partition>& ps) {
  std::vector<std::vector<Part>> out;
  for (const auto& p : ps) out.emplace_back(p.parts().begin(), p.parts().end());
  return out;
}

std::vector<Partition> nuclear_of(std::uint32_t n) { return collect(n, EnumerationConstraint::nuclear()); }

}  // namespace

TEST_CASE("partition construction validates order and positivity") {
  CHECK(Partition({5, 2}).size() == 7);
  CHECK(Partition().size() == 0);
  CHECK(Partition().empty());
  CHECK_THROWS_AS(Partition({2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
}

TEST_CASE("partition literals") {
  CHECK(Partition::parse("5,2") == Partition({5, 2}));
  CHECK(Partition::parse("[5,2]") == Partition({5, 2}));
  CHECK(Partition::parse("(5, 2)") == Partition({5, 2}));
  CHECK(Partition::parse("[]").empty());
  CHECK(Partition::parse("7").to_string() == "(7)");
  CHECK_THROWS_AS(Partition::parse("5,,2"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("5,x"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,5"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("-1"), std::invalid_argument);
}

TEST_CASE("nuclear partitions of 6 in reverse-lexicographic order") {
  const auto got = nuclear_of(6);
  const std::vector<Partition> expected = {{6}, {4, 2}, {3, 3}, {2, 2, 2}};
  CHECK(got == expected);
}

TEST_CASE("enumerate(0) yields exactly the empty partition for any constraint") {
  for (const auto& c : {EnumerationConstraint::unconstrained(), EnumerationConstraint::nuclear(),
                        EnumerationConstraint::nuclear_bounded(3), EnumerationConstraint::avoiding(1),
                        EnumerationConstraint{7, 9, std::nullopt}}) {
    const auto got = collect(0, c);
    REQUIRE(got.size() == 1);
    CHECK(got.front().empty());
  }
}

TEST_CASE("nuclear partitions of 9 number 8") { CHECK(count(9, EnumerationConstraint::nuclear()) == 8); }

TEST_CASE("bounded nuclear partitions of 9 with parts at most 4") {
  const auto brute = oracle::count_if(9, [](const auto& p) { return oracle::parts_within(p, 2, 4); });
  CHECK(brute == 3);  // (4,3,2), (3,3,3), (3,2,2,2)
  CHECK(count(9, EnumerationConstraint::nuclear_bounded(4)) == brute);
}

TEST_CASE("unsatisfiable constraints give an empty stream") {
  CHECK(count(1, EnumerationConstraint::nuclear()) == 0);
  CHECK(count(5, EnumerationConstraint{6, std::nullopt, std::nullopt}) == 0);
  CHECK(count(3, EnumerationConstraint::nuclear_bounded(2)) == 0);
  CHECK(count(2, EnumerationConstraint{2, std::nullopt, 2}) == 0);
}

TEST_CASE("invalid constraints are rejected") {
  CHECK_THROWS_AS(enumerate(5, EnumerationConstraint{0, std::nullopt, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(5, EnumerationConstraint{4, 3, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(5, EnumerationConstraint{1, std::nullopt, 0}), std::invalid_argument);
}

TEST_CASE("is_nuclear and is_ground_state") {
  CHECK(is_nuclear(Partition({4, 2})));
  CHECK_FALSE(is_nuclear(Partition({3, 2, 1, 1})));
  CHECK(is_nuclear(Partition()));
  CHECK(is_ground_state(Partition({2, 2})));
  CHECK_FALSE(is_ground_state(Partition({6})));
  CHECK_FALSE(is_ground_state(Partition()));
  CHECK_FALSE(is_ground_state(Partition({1, 1})));
  CHECK_FALSE(is_ground_state(Partition({4, 2})));

  SUBCASE("equal-part partitions (d,...,d) of k are ground states for every divisor d != 1") {
    for (std::uint32_t k = 2; k <= 36; ++k) {
      for (std::uint32_t d = 2; d < k; ++d) {
        if (k % d != 0) continue;
        CHECK(is_ground_state(Partition(std::vector<Part>(k / d, d))));
      }
    }
  }
}

TEST_CASE("multiplicity") {
  CHECK(multiplicity(Partition({3, 2, 1, 1}), 1) == 2);
  CHECK(multiplicity(Partition({3, 2, 1, 1}), 5) == 0);
  CHECK(multiplicity(Partition({2, 2, 2}), 2) == 3);
}

TEST_CASE("fuse") {
  CHECK(fuse(Partition({3, 2, 1, 1})) == Partition({5, 2}));
  CHECK(fuse(Partition({1, 1, 1, 1})) == Partition({4}));
  CHECK(fuse(Partition({4, 2, 1})) == Partition({5, 2}));
  CHECK_THROWS_AS(fuse(Partition({5, 2})), std::invalid_argument);
  CHECK_THROWS_AS(fuse(Partition()), std::invalid_argument);
}

TEST_CASE("decay capacity, step and chain") {
  CHECK(decay_capacity(Partition({5, 2})) == 3);
  CHECK(decay_capacity(Partition({6})) == 5);
  CHECK(decay_capacity(Partition({2, 2, 2})) == 0);
  CHECK_THROWS_AS(decay_capacity(Partition()), std::invalid_argument);
  CHECK_THROWS_AS(decay_capacity(Partition({3, 1})), std::invalid_argument);

  CHECK(decay_step(Partition({5, 2}), 1) == Partition({4, 2, 1}));
  CHECK(decay_step(Partition({5, 2}), 3) == Partition({2, 2, 1, 1, 1}));
  CHECK(decay_step(Partition({6}), 5) == Partition({1, 1, 1, 1, 1, 1}));
  CHECK_THROWS_AS(decay_step(Partition({5, 2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(decay_step(Partition({5, 2}), 4), std::invalid_argument);
  CHECK_THROWS_AS(decay_step(Partition({2, 1}), 1), std::invalid_argument);

  const std::vector<Partition> chain52 = {{4, 2, 1}, {3, 2, 1, 1}, {2, 2, 1, 1, 1}};
  CHECK(decay_chain(Partition({5, 2})).products == chain52);
  CHECK(decay_chain(Partition({3, 3})).products.empty());
  CHECK(decay_chain(Partition({6})).products.size() == 5);
}

TEST_CASE("fuse inverts every decay step for n <= 25") {
  for (std::uint32_t n = 2; n <= 25; ++n) {
    for (const auto& mu : enumerate(n, EnumerationConstraint::nuclear())) {
      for (const auto& lambda : decay_chain(mu).products) {
        REQUIRE(!is_nuclear(lambda));
        REQUIRE(lambda.size() == n);
        REQUIRE(fuse(lambda) == mu);
      }
    }
  }
}

TEST_CASE("decay chains tile the non-nuclear partitions of n (2 <= n <= 25)") {
  for (std::uint32_t n = 2; n <= 25; ++n) {
    std::vector<oracle::Parts> products;
    for (const auto& mu : enumerate(n, EnumerationConstraint::nuclear())) {
      for (const auto& lambda : decay_chain(mu).products) products.emplace_back(lambda.parts().begin(), lambda.parts().end());
    }
    std::sort(products.begin(), products.end());
    CHECK_MESSAGE(std::adjacent_find(products.begin(), products.end()) == products.end(), "duplicate at n=" << n);
    auto expected = oracle::filtered(n, [](const auto& p) { return !oracle::no_part_equal(p, 1) ; });
    std::sort(expected.begin(), expected.end());
    CHECK_MESSAGE(products == expected, "tiling fails at n=" << n);
  }

  SUBCASE("n = 1 is the exception: (1) has no nuclear source") {
    CHECK(nuclear_of(1).empty());
    CHECK(oracle::count_if(1, [](const auto& p) { return !oracle::no_part_equal(p, 1); }) == 1);
  }
}

TEST_CASE("unconstrained enumeration is complete, distinct and correctly sized for n <= 30") {
  const auto p = oracle::p_by_largest_part(30);
  for (std::uint32_t n = 0; n <= 30; ++n) {
    const auto got = collect(n);
    REQUIRE(got.size() == p[n]);
    std::set<Partition> distinct(got.begin(), got.end());
    CHECK(distinct.size() == got.size());
    CHECK(std::all_of(got.begin(), got.end(), [n](const auto& x) { return x.size() == n; }));
    // Reverse-lexicographic: strictly decreasing sequence of part lists.
    CHECK(std::is_sorted(got.rbegin(), got.rend()));
    CHECK(std::adjacent_find(got.begin(), got.end(), [](const auto& a, const auto& b) { return !(b < a); }) ==
          got.end());
  }
}

TEST_CASE("constraint soundness against filtered brute force (random constraints)") {
  std::mt19937 rng(20191017);
  std::uniform_int_distribution<std::uint32_t> size_dist(0, 22);
  std::uniform_int_distribution<std::uint32_t> small(1, 8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = size_dist(rng);
    EnumerationConstraint c;
    c.min_part = small(rng);
    if (rng() % 2) c.max_part = c.min_part + small(rng) - 1;
    if (rng() % 2) c.forbidden_part = small(rng);
    const auto got = collect(n, c);
    CHECK(std::all_of(got.begin(), got.end(), [&](const auto& p) { return c.admits(p) && p.size() == n; }));
    const auto expected = oracle::filtered(n, [&](const oracle::Parts& p) {
      return std::all_of(p.begin(), p.end(), [&](std::uint32_t x) { return c.allows(x); });
    });
    CHECK_MESSAGE(as_vectors(got) == expected, "n=" << n << " min=" << c.min_part);
  }
}

TEST_CASE("identical arguments give identical sequences") {
  const auto c = EnumerationConstraint{2, 7, 4};
  CHECK(collect(24, c) == collect(24, c));
  CHECK(collect(20) == collect(20));
}

TEST_CASE("independent streams over the same arguments interleave safely") {
  auto a = enumerate(14, EnumerationConstraint::nuclear());
  auto b = enumerate(14, EnumerationConstraint::nuclear());
  std::vector<Partition> from_a, from_b;
  while (a.valid() || b.valid()) {
    if (a.valid()) {
      from_a.push_back(a.current());
      a.advance();
    }
    if (b.valid()) {
      from_b.push_back(b.current());
      b.advance();
    }
  }
  CHECK(from_a == from_b);
  CHECK(from_a.size() == 34);
}
