#include <doctest.h>

#include <map>
#include <random>

#include "brute_force.hpp"
#include "rsc/error.hpp"
#include "rsc/perm.hpp"

using namespace rsc;

namespace {
Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }
} // namespace

TEST_CASE("from_images rejects non-bijections") {
  CHECK_THROWS_AS(Permutation::from_images({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(Permutation::from_images({1, 4, 2}), DomainError);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), DomainError);
}

TEST_CASE("cycle_decomposition") {
  CHECK(cycle_decomposition(Permutation(3)) == std::vector<Cycle>{{{1}}, {{2}}, {{3}}});
  CHECK(cycle_decomposition(Permutation::from_images({2, 3, 1})) == std::vector<Cycle>{{{1, 2, 3}}});
  CHECK(cycle_decomposition(Permutation::from_images({2, 1, 4, 5, 3})) ==
        std::vector<Cycle>{{{1, 2}}, {{3, 4, 5}}});
  // rotated to start at the smallest point
  CHECK(cycle_decomposition(Permutation::from_images({3, 1, 2})) == std::vector<Cycle>{{{1, 3, 2}}});
}

TEST_CASE("cycle_type and cycle_count") {
  CHECK(to_string(cycle_type(Permutation(3))) == "1^3");
  CHECK(to_string(cycle_type(cyc(3, {{1, 2, 3}}))) == "3^1");
  CHECK(to_string(cycle_type(cyc(5, {{1, 2}, {3, 4, 5}}))) == "2^1 3^1");
  CHECK(cycle_count(Permutation(3)) == 3);
  CHECK(cycle_count(cyc(3, {{1, 2, 3}})) == 1);
  CHECK(cycle_count(cyc(5, {{1, 2}, {4, 5}})) == 3);
}

TEST_CASE("compose, inverse, conjugate") {
  const auto q = cyc(4, {{1, 3}, {2, 4}});
  CHECK(compose(Permutation(4), q) == q);
  CHECK(inverse(cyc(3, {{1, 2, 3}})) == cyc(3, {{1, 3, 2}}));
  CHECK(compose(cyc(3, {{1, 2}}), cyc(3, {{1, 2}})).is_identity());
  // p(q(x)) convention: (1 2)(2 3) sends 3 -> 2 -> 1
  CHECK(compose(cyc(3, {{1, 2}}), cyc(3, {{2, 3}}))(3) == 1);
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), DomainError);

  CHECK(conjugate(Permutation(3), cyc(3, {{1, 2}})) == cyc(3, {{1, 2}}));
  CHECK(conjugate(cyc(3, {{2, 3}}), cyc(3, {{1, 2}})) == cyc(3, {{1, 3}}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = brute::random_perm(5, rng);
    const auto x = brute::random_perm(5, rng);
    CHECK(cycle_type(conjugate(g, x)) == cycle_type(x));
    CHECK(compose(x, inverse(x)).is_identity());
  }
}

TEST_CASE("to_string uses cycle notation") {
  CHECK(to_string(Permutation(4)) == "()");
  CHECK(to_string(cyc(5, {{2, 3}, {4, 5}})) == "(2 3)(4 5)");
}

TEST_CASE("class_size and centralizer_order match enumeration in S_n, n <= 5") {
  // brute force: count permutations of each shape, and commuting elements
  CHECK(class_size(CycleType::from_parts({2, 1})) == 3);
  CHECK(class_size(CycleType::from_parts({3})) == 2);
  CHECK(class_size(CycleType::from_parts({4, 1})) == 30);
  CHECK(centralizer_order(CycleType::from_parts({3})) == 3);
  CHECK(centralizer_order(CycleType::from_parts({1, 1, 1})) == 6);
  CHECK(centralizer_order(CycleType::from_parts({2, 2})) == 8);

  for (std::size_t n = 1; n <= 5; ++n) {
    const auto perms = brute::all_images(n);
    std::map<std::vector<std::size_t>, long> shape_count;
    for (const auto& p : perms) ++shape_count[brute::shape(p)];
    for (const auto& p : perms) {
      long commuting = 0;
      for (const auto& g : perms) commuting += brute::commute(g, p);
      const auto t = cycle_type(brute::to_perm(p));
      CHECK(centralizer_order(t) == commuting);
      CHECK(class_size(t) == shape_count[brute::shape(p)]);
    }
  }
}

TEST_CASE("class sizes sum to n! and multiply with centralizer orders to n!") {
  for (std::size_t n = 1; n <= 8; ++n) {
    Integer sum = 0;
    for (const auto& t : enumerate_cycle_types(n)) {
      sum += class_size(t);
      CHECK(class_size(t) * centralizer_order(t) == factorial(n));
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("canonical_representative layout") {
  CHECK(canonical_representative(CycleType::from_parts({1, 1, 1})) == Permutation(3));
  CHECK(canonical_representative(CycleType::from_parts({3})) == cyc(3, {{1, 2, 3}}));
  CHECK(canonical_representative(CycleType::from_parts({2, 2, 1})) == cyc(5, {{2, 3}, {4, 5}}));
  for (std::size_t n = 1; n <= 8; ++n)
    for (const auto& t : enumerate_cycle_types(n)) CHECK(cycle_type(canonical_representative(t)) == t);
}

TEST_CASE("support_blocks") {
  auto blocks = support_blocks(cyc(5, {{1, 2}, {3, 4, 5}}));
  CHECK(blocks.size() == 2);
  CHECK(blocks[2] == std::vector<Point>{1, 2});
  CHECK(blocks[3] == std::vector<Point>{3, 4, 5});
  CHECK(support_blocks(Permutation(3)).at(1) == std::vector<Point>{1, 2, 3});
  CHECK(support_blocks(cyc(4, {{1, 2}, {3, 4}})).at(2) == std::vector<Point>{1, 2, 3, 4});

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = brute::random_perm(7, rng);
    const auto t = cycle_type(s);
    std::size_t total = 0;
    for (const auto& [len, block] : support_blocks(s)) {
      CHECK(block.size() == len * t.multiplicity(len));
      total += block.size();
    }
    CHECK(total == 7);
  }
}

TEST_CASE("centralizer_membership agrees with direct commutation") {
  const auto sigma = cyc(3, {{1, 2, 3}});
  CHECK(centralizer_membership(sigma, sigma));
  CHECK_FALSE(centralizer_membership(cyc(3, {{1, 2}}), sigma));

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto perms = brute::all_images(n);
    for (const auto& s : perms)
      for (const auto& r : perms)
        CHECK(centralizer_membership(brute::to_perm(r), brute::to_perm(s)) == brute::commute(r, s));
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto r = brute::random_perm(5, rng);
    const auto s = brute::random_perm(5, rng);
    REQUIRE(centralizer_membership(r, s) == (r * s == s * r));
  }
}
